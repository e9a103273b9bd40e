#include "hbn/serialize.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hbn/errors.hpp"

namespace hbn {

using nlohmann::json;

json to_json(const SplittingType& e) {
  return json(e.entries());
}

json to_json(const BBType& bb) {
  return {{"a", bb.a}, {"b", bb.b}, {"x", bb.x}, {"y", bb.y}, {"u", bb.u}, {"v", bb.v}};
}

json to_json(const ComponentRecord& record) {
  json out = {{"e", to_json(record.splitting_type)},
              {"bb", to_json(record.bb)},
              {"kind", std::string(to_string(record.kind))},
              {"dim", record.dim},
              {"irreducible", record.irreducible},
              {"finite_points", record.finite_points},
              {"translation", nullptr}};
  if (record.translation)
    out["translation"] = {{"a", record.translation->a},
                          {"base_e", to_json(record.translation->base->splitting_type)}};
  if (!record.maximal) out["maximal"] = false;
  return out;
}

json components_to_json(int g, int k, int d, int r, const std::vector<ComponentRecord>& records) {
  json list = json::array();
  for (const auto& record : records) list.push_back(to_json(record));
  return {{"query", {{"g", g}, {"k", k}, {"d", d}, {"r", r}}}, {"components", std::move(list)}};
}

json to_json(const ExtClass& gamma) {
  json coeffs = json::array();
  for (const auto& [slot, value] : gamma.coeffs())
    coeffs.push_back({{"i", slot.i}, {"j", slot.j}, {"m", slot.m}, {"c", value}});
  return {{"base", to_json(gamma.base())}, {"coeffs", std::move(coeffs)}};
}

json to_json(const ExperimentReport& report) {
  json claims = json::array();
  for (const auto& claim : report.claims) {
    json entry = {{"name", claim.name},
                  {"trials", claim.trials},
                  {"violations", claim.violations},
                  {"assertive", claim.assertive},
                  {"first_counterexample", nullptr}};
    if (claim.first_counterexample) {
      const auto& ce = *claim.first_counterexample;
      entry["first_counterexample"] = {{"trial", ce.trial},
                                       {"trial_seed", ce.trial_seed},
                                       {"gamma", to_json(ce.gamma)},
                                       {"observed", to_json(ce.observed)}};
    }
    if (!claim.tallies.empty()) entry["tallies"] = claim.tallies;
    claims.push_back(std::move(entry));
  }
  return {{"experiment", report.experiment},
          {"claims", std::move(claims)},
          {"seed", report.seed},
          {"prime", report.prime}};
}

SplittingType splitting_type_from_json(const json& j) {
  if (!j.is_array()) throw input_error("splitting type must be a JSON array of integers");
  std::vector<int> values;
  for (const auto& item : j) {
    if (!item.is_number_integer()) throw input_error("splitting type entries must be integers");
    values.push_back(item.get<int>());
  }
  return SplittingType::make(values);
}

BBType bb_from_json(const json& j) {
  if (!j.is_object()) throw input_error("BB type must be a JSON object");
  BBType bb;
  for (auto [key, field] : {std::pair{"a", &bb.a}, {"b", &bb.b}, {"x", &bb.x}, {"y", &bb.y}, {"u", &bb.u},
                            {"v", &bb.v}}) {
    if (!j.contains(key) || !j[key].is_number_integer())
      throw input_error(std::string("BB type is missing integer field ") + key);
    *field = j[key].get<int>();
  }
  return bb;
}

namespace {

std::string joined(const SplittingType& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(e[i]);
  }
  return out;
}

}  // namespace

std::string components_to_csv(const std::vector<ComponentRecord>& records) {
  std::ostringstream os;
  os << "kind,e,a,b,x,y,u,v,dim,irreducible,finite_points,maximal,translation_a,base_e\n";
  for (const auto& rec : records) {
    os << to_string(rec.kind) << ",\"" << joined(rec.splitting_type) << "\"," << rec.bb.a << ',' << rec.bb.b
       << ',' << rec.bb.x << ',' << rec.bb.y << ',' << rec.bb.u << ',' << rec.bb.v << ',' << rec.dim << ','
       << (rec.irreducible ? "true" : "false") << ',' << (rec.finite_points ? "true" : "false") << ','
       << (rec.maximal ? "true" : "false") << ',';
    if (rec.translation)
      os << rec.translation->a << ",\"" << joined(rec.translation->base->splitting_type) << '"';
    else
      os << ',';
    os << '\n';
  }
  return os.str();
}

std::string poset_to_dot(const HasseDiagram& diagram, int g) {
  std::ostringstream os;
  os << "digraph splitting_poset {\n  rankdir=TB;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < diagram.nodes.size(); ++i) {
    const auto& e = diagram.nodes[i];
    const long u = u_invariant(e);
    os << "  n" << i << " [label=\"" << e.to_string() << "\\nu=" << u << "\\ndim=" << (g - u) << "\"];\n";
  }
  for (const auto& [upper, lower] : diagram.covers) os << "  n" << upper << " -> n" << lower << ";\n";
  os << "}\n";
  return os.str();
}

namespace {

template <class Int>
Int parse_int(std::string_view text, std::string_view what) {
  Int value{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw input_error("malformed " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

LaurentPoly parse_entry(const PrimeField& field, const std::string& line, std::size_t line_no) {
  std::istringstream is(line);
  std::string token;
  std::vector<std::pair<int, std::int64_t>> terms;
  while (is >> token) {
    const auto caret = token.find('^');
    if (caret == std::string::npos)
      throw input_error("line " + std::to_string(line_no) + ": term '" + token + "' is not coeff^exponent");
    const auto coeff = parse_int<std::int64_t>(std::string_view(token).substr(0, caret), "coefficient");
    const auto exponent = parse_int<int>(std::string_view(token).substr(caret + 1), "exponent");
    terms.emplace_back(exponent, coeff);
  }
  return LaurentPoly::from_terms(field, terms);
}

}  // namespace

LaurentMatrix read_matrix(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw input_error("matrix file is empty");
  std::istringstream hs(header);
  std::string p_text;
  std::string k_text;
  std::string extra;
  if (!(hs >> p_text >> k_text) || (hs >> extra)) throw input_error("matrix header must be 'p k'");
  const auto p = parse_int<std::uint32_t>(p_text, "prime");
  const auto k = parse_int<std::size_t>(k_text, "size");
  if (k == 0 || k > 64) throw input_error("matrix size must be between 1 and 64");
  const PrimeField field(p);

  LaurentGrid grid(k);
  std::string line;
  std::size_t read = 0;
  while (read < k * k && std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    grid.entries[read] = parse_entry(field, line, read + 2);
    ++read;
  }
  // Missing trailing lines are zero entries; anything further must be blank.
  while (std::getline(in, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos)
      throw input_error("matrix file has more than k*k entry lines");
  return LaurentMatrix(field, std::move(grid));
}

LaurentMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open matrix file '" + path + "'");
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const LaurentMatrix& m) {
  out << m.field().modulus() << ' ' << m.size() << '\n';
  for (const auto& entry : m.grid().entries) out << entry.to_string() << '\n';
}

}  // namespace hbn
