#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <ostream>
#include <set>
#include <sstream>

#include "hbn/bundle.hpp"
#include "hbn/components.hpp"
#include "hbn/errors.hpp"
#include "hbn/experiments.hpp"
#include "hbn/poset.hpp"
#include "hbn/serialize.hpp"

namespace hbn::cli {

namespace {

using nlohmann::json;

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int value = 0;
    const char* first = item.data();
    const char* last = item.data() + item.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (item.empty() || ec != std::errc() || ptr != last)
      throw input_error(std::string("malformed ") + what + " '" + text + "'");
    out.push_back(value);
  }
  if (out.empty()) throw input_error(std::string("empty ") + what);
  return out;
}

SplittingType parse_type(const std::string& text, std::ostream& err) {
  const auto values = parse_int_list(text, "splitting type");
  if (!std::is_sorted(values.begin(), values.end()))
    err << "warning: splitting type '" << text << "' was not sorted; using sorted order\n";
  return SplittingType::make(values);
}

template <class T>
T require(const std::optional<T>& value, const char* flag) {
  if (!value) throw input_error(std::string("missing required option --") + flag);
  return *value;
}

OutputFormat format_or(const RunConfig& config, OutputFormat fallback, std::initializer_list<OutputFormat> allowed) {
  const OutputFormat chosen = config.format.value_or(fallback);
  if (std::find(allowed.begin(), allowed.end(), chosen) == allowed.end())
    throw input_error("output format not supported by this command");
  return chosen;
}

void print_json(std::ostream& out, const json& j) {
  out << j.dump(2) << '\n';
}

int cmd_classify(const RunConfig& config, std::ostream& out) {
  const int g = require(config.g, "g");
  const int k = require(config.k, "k");
  const int d = require(config.d, "d");
  const int r = require(config.r, "r");
  const auto format = format_or(config, OutputFormat::json, {OutputFormat::json, OutputFormat::csv, OutputFormat::text});
  const auto records = classify_components(g, k, d, r, {config.include_nonmaximal});
  switch (format) {
    case OutputFormat::csv:
      out << components_to_csv(records);
      break;
    case OutputFormat::text:
      out << "W^" << r << "_" << d << " on a general " << k << "-gonal curve of genus " << g << ": "
          << records.size() << " component(s)\n";
      for (const auto& rec : records) {
        out << "  type " << to_string(rec.kind) << "  e=" << rec.splitting_type.to_string() << "  "
            << rec.bb.to_string() << "  dim=" << rec.dim;
        if (rec.finite_points) out << "  finite set of points";
        else out << "  irreducible";
        if (!rec.maximal) out << "  non-maximal";
        if (rec.translation)
          out << "  = " << rec.translation->base->splitting_type.to_string() << " + " << rec.translation->a << "M";
        out << '\n';
      }
      break;
    default:
      print_json(out, components_to_json(g, k, d, r, records));
  }
  return kExitOk;
}

int cmd_poset(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const int k = require(config.k, "k");
  std::optional<SplittingType> root;
  if (!config.e.empty()) {
    root = parse_type(config.e, err);
    if (static_cast<int>(root->size()) != k) throw input_error("--e does not have k entries");
  } else {
    const GonalContext context{require(config.g, "g"), k, require(config.d, "d")};
    root = balanced_type(k, context.expected_total());
  }
  if (!config.u_max && !config.g) throw input_error("poset needs --u-max or --g");
  const long u_max = config.u_max ? *config.u_max : *config.g;
  const int g = config.g ? *config.g : static_cast<int>(u_max);
  const auto format = format_or(config, OutputFormat::dot, {OutputFormat::dot, OutputFormat::json, OutputFormat::text});
  const auto diagram = hasse_diagram(downward_closure(*root, u_max));
  switch (format) {
    case OutputFormat::json: {
      json nodes = json::array();
      for (const auto& e : diagram.nodes)
        nodes.push_back({{"e", to_json(e)}, {"u", u_invariant(e)}, {"dim", g - u_invariant(e)}});
      json covers = json::array();
      for (const auto& [upper, lower] : diagram.covers) covers.push_back({upper, lower});
      print_json(out, {{"root", to_json(*root)}, {"u_max", u_max}, {"g", g}, {"nodes", nodes}, {"covers", covers}});
      break;
    }
    case OutputFormat::text:
      for (const auto& e : diagram.nodes)
        out << e.to_string() << "  u=" << u_invariant(e) << "  dim=" << g - u_invariant(e) << '\n';
      for (const auto& [upper, lower] : diagram.covers)
        out << diagram.nodes[upper].to_string() << " > " << diagram.nodes[lower].to_string() << '\n';
      break;
    default:
      out << poset_to_dot(diagram, g);
  }
  return kExitOk;
}

int cmd_u(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.e.empty()) throw input_error("missing required option --e");
  const SplittingType e = parse_type(config.e, err);
  const auto format = format_or(config, OutputFormat::json, {OutputFormat::json, OutputFormat::text});
  const long u = u_invariant(e);
  const auto bb = detect_bb(e);
  std::optional<long> dim;
  if (config.g) dim = expected_dim(e, *config.g);
  if (format == OutputFormat::text) {
    out << "e=" << e.to_string() << "  u=" << u;
    if (bb) out << "  " << bb->to_string();
    if (config.g) out << "  expected_dim=" << (dim ? std::to_string(*dim) : std::string("empty"));
    out << '\n';
    return kExitOk;
  }
  json profile = json::array();
  for (int n = -e.back() - 1; n <= -e.front() + 1; ++n) profile.push_back({{"n", n}, {"h0", h0(e, n)}, {"h1", h1(e, n)}});
  json j = {{"e", to_json(e)}, {"u", u}, {"bb", bb ? to_json(*bb) : json(nullptr)}, {"h0_profile", profile}};
  if (config.g) j["expected_dim"] = dim ? json(*dim) : json(nullptr);
  print_json(out, j);
  return kExitOk;
}

json matrix_rows(const LaurentMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

int cmd_factor(const RunConfig& config, std::ostream& out) {
  if (config.matrix.empty()) throw input_error("missing required option --matrix");
  const auto format = format_or(config, OutputFormat::json, {OutputFormat::json, OutputFormat::text});
  const LaurentMatrix m = read_matrix_file(config.matrix);
  const auto fact = birkhoff_factorize(m);
  if (format == OutputFormat::text) {
    out << "e=" << fact.type.to_string() << '\n' << "L:\n";
    write_matrix(out, fact.left);
    out << "R:\n";
    write_matrix(out, fact.right);
    return kExitOk;
  }
  print_json(out, {{"prime", m.field().modulus()},
                   {"k", m.size()},
                   {"e", to_json(fact.type)},
                   {"det_exponent", m.det_exponent()},
                   {"left", matrix_rows(fact.left)},
                   {"right", matrix_rows(fact.right)}});
  return kExitOk;
}

int cmd_cohomology(const RunConfig& config, std::ostream& out) {
  if (config.matrix.empty()) throw input_error("missing required option --matrix");
  const auto format = format_or(config, OutputFormat::json, {OutputFormat::json, OutputFormat::text});
  const LaurentMatrix m = read_matrix_file(config.matrix);
  const SplittingType e = splitting_type(m);
  int lo = -e.back() - 1;
  int hi = -e.front() + 1;
  if (config.n) lo = hi = *config.n;
  json rows = json::array();
  bool agree = true;
  for (int n = lo; n <= hi; ++n) {
    const long direct = h0_twist(m, n);
    const long from_type = h0(e, n);
    agree = agree && direct == from_type;
    if (format == OutputFormat::text)
      out << "n=" << n << "  h0=" << direct << "  h0(e)=" << from_type << '\n';
    rows.push_back({{"n", n}, {"h0", direct}, {"h0_from_type", from_type}});
  }
  if (format == OutputFormat::json) print_json(out, {{"e", to_json(e)}, {"twists", rows}, {"agree", agree}});
  if (!agree) throw std::logic_error("h0 from sections disagrees with h0 from the splitting type");
  return kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  static const std::set<std::string> known = {"prop5", "twist_reduction", "prop6"};
  std::vector<std::string> claims;
  for (const auto& entry : config.claims) {
    std::stringstream ss(entry);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (!known.count(name)) throw input_error("unknown claim '" + name + "'");
      claims.push_back(name);
    }
  }
  if (claims.empty()) throw input_error("missing required option --claims");
  const auto format = format_or(config, OutputFormat::json, {OutputFormat::json, OutputFormat::text});
  ExperimentOptions options;
  options.trials = config.trials;
  options.prime = config.prime;
  options.seed = config.seed;

  // Validate every claim's parameters before running any experiment.
  std::optional<BBType> bb;
  std::optional<SplittingType> e;
  for (const auto& name : claims) {
    if (name == "prop5" && !bb) {
      const auto values = parse_int_list(config.bb, "--bb (a,b,y,u,v)");
      if (values.size() != 5) throw input_error("--bb takes five values a,b,y,u,v");
      const int k = require(config.k, "k");
      bb = BBType{values[0], values[1], k - values[2] - values[3] - values[4], values[2], values[3], values[4]};
    }
    if (name != "prop5" && !e) {
      if (config.e.empty()) throw input_error("claim '" + name + "' needs --e");
      e = parse_type(config.e, err);
    }
    if (name == "prop6") require(config.e_prime, "eprime");
  }

  std::vector<ExperimentReport> reports;
  for (const auto& name : claims) {
    if (name == "prop5") reports.push_back(experiment_prop5(*bb, options));
    else if (name == "twist_reduction") reports.push_back(experiment_twist_reduction(*e, options));
    else reports.push_back(experiment_prop6(*e, *config.e_prime, options));
  }

  bool violated = false;
  for (const auto& report : reports) {
    if (format == OutputFormat::text) {
      out << report.experiment << "  prime=" << report.prime << "  seed=" << report.seed << '\n';
      for (const auto& claim : report.claims) {
        out << "  " << claim.name << ": " << claim.violations << '/' << claim.trials
            << (claim.assertive ? " violations" : " disagreements (exploratory)") << '\n';
        for (const auto& [key, count] : claim.tallies) out << "    " << key << ": " << count << '\n';
      }
    } else {
      out << to_json(report).dump() << '\n';
    }
    for (const auto& claim : report.claims) {
      if (!claim.assertive || claim.violations == 0) continue;
      violated = true;
      const auto& ce = *claim.first_counterexample;
      err << "counterexample to " << report.experiment << "/" << claim.name << ": trial " << ce.trial
          << " (master seed " << report.seed << ", trial seed " << ce.trial_seed << ", prime " << report.prime
          << "), E_v splits as " << ce.observed.to_string() << '\n';
    }
  }
  return violated ? kExitCounterexample : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hurwitz-Brill-Noether toolkit: splitting types, component classification, bundles on P^1", "hbn"};
  app.require_subcommand(1);
  RunConfig config;

  const std::map<std::string, OutputFormat> formats = {
      {"json", OutputFormat::json}, {"csv", OutputFormat::csv}, {"dot", OutputFormat::dot}, {"text", OutputFormat::text}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "Output format")->transform(CLI::CheckedTransformer(formats));
  };
  auto add_gkdr = [&](CLI::App* sub) {
    sub->add_option("--g", config.g, "Genus");
    sub->add_option("--k", config.k, "Gonality");
    sub->add_option("--d", config.d, "Degree");
  };

  auto* classify = app.add_subcommand("classify", "Predicted irreducible components of W^r_d");
  add_gkdr(classify);
  classify->add_option("--r", config.r, "Rank");
  classify->add_flag("--include-nonmaximal", config.include_nonmaximal,
                     "Also report b = 1, v > 0 patterns (strata inside larger components)");
  add_format(classify);

  auto* poset = app.add_subcommand("poset", "Hasse diagram of a splitting degeneracy locus");
  add_gkdr(poset);
  poset->add_option("--e", config.e, "Root splitting type, comma-separated");
  poset->add_option("--u-max,--umax", config.u_max, "Largest u invariant to enumerate (default: g)");
  add_format(poset);

  auto* u = app.add_subcommand("u", "u invariant, h0 profile and pattern of a splitting type");
  u->add_option("--e", config.e, "Splitting type, comma-separated");
  u->add_option("--g", config.g, "Genus (for the expected dimension)");
  add_format(u);

  auto* factor = app.add_subcommand("factor", "Birkhoff factorization of a Laurent matrix file");
  factor->add_option("--matrix", config.matrix, "Matrix file")->required();
  add_format(factor);

  auto* cohomology = app.add_subcommand("cohomology", "h0 of twists of the bundle in a matrix file");
  cohomology->add_option("--matrix", config.matrix, "Matrix file")->required();
  cohomology->add_option("--n", config.n, "Single twist (default: the whole window)");
  add_format(cohomology);

  auto* verify = app.add_subcommand("verify", "Randomized checks of the bundle-level claims");
  verify->add_option("--claims", config.claims, "prop5, twist_reduction, prop6 (comma-separated)");
  verify->add_option("--bb", config.bb, "Pattern a,b,y,u,v (prop5)");
  verify->add_option("--k", config.k, "Rank k of the pattern (prop5)");
  verify->add_option("--e", config.e, "Splitting type (twist_reduction, prop6)");
  verify->add_option("--eprime", config.e_prime, "Twist e' inside a gap of e (prop6)");
  verify->add_option("--trials", config.trials, "Random classes per experiment")->check(CLI::PositiveNumber);
  verify->add_option("--prime", config.prime, "Field size");
  verify->add_option("--seed", config.seed, "Master seed");
  add_format(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (classify->parsed()) return cmd_classify(config, out);
    if (poset->parsed()) return cmd_poset(config, out, err);
    if (u->parsed()) return cmd_u(config, out, err);
    if (factor->parsed()) return cmd_factor(config, out);
    if (cohomology->parsed()) return cmd_cohomology(config, out);
    return cmd_verify(config, out, err);
  } catch (const input_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace hbn::cli
