#include "hbn/components.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "hbn/errors.hpp"

namespace hbn {

long rho(int g, int d, int r) {
  if (r < 0) throw input_error("rho needs r >= 0");
  return static_cast<long>(g) - static_cast<long>(r + 1) * (g - d + r);
}

std::string_view to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::I: return "I";
    case ComponentKind::II: return "II";
    case ComponentKind::III: return "III";
  }
  return "?";
}

namespace {

ComponentKind kind_of(const BBType& bb) {
  if (bb.a == 0) return bb.v == 0 ? ComponentKind::I : ComponentKind::II;
  return ComponentKind::III;
}

}  // namespace

ComponentRecord make_component(const GonalContext& context, int r, const BBType& bb) {
  if (!bb.is_valid()) throw input_error(bb.to_string() + " is not a balanced-plus-balanced type");
  if (bb.length() != context.k)
    throw input_error(bb.to_string() + " does not have length k = " + std::to_string(context.k));
  if (bb.h0() != r + 1)
    throw input_error(bb.to_string() + " has h0 " + std::to_string(bb.h0()) + ", expected r+1 = " +
                      std::to_string(r + 1));
  ComponentRecord record;
  record.context = context;
  record.r = r;
  record.bb = bb;
  record.splitting_type = bb.reconstruct();
  if (!context.admits(record.splitting_type))
    throw input_error(record.splitting_type.to_string() + " violates the degree relation for d = " +
                      std::to_string(context.d));
  const auto dim = expected_dim(record.splitting_type, context.g);
  if (!dim) throw input_error(record.splitting_type.to_string() + " has u > g; the locus is empty");
  record.kind = kind_of(bb);
  record.dim = *dim;
  record.irreducible = *dim > 0;
  record.finite_points = *dim == 0;
  record.maximal = bb.b >= 2 || bb.v == 0;

  if (record.kind == ComponentKind::I) {
    if (record.dim != rho(context.g, context.d, r))
      throw std::logic_error("type I component " + record.splitting_type.to_string() +
                             " has dimension differing from rho");
    if (!free_from_M_bound(record))
      throw std::logic_error("type I component " + record.splitting_type.to_string() +
                             " violates h0 <= k-1");
  }
  if (record.kind == ComponentKind::III) {
    const SplittingType base_e = twist(record.splitting_type, -bb.a);
    const auto base_bb = detect_bb(base_e);
    if (!base_bb) throw std::logic_error("translate of " + record.splitting_type.to_string() + " lost its pattern");
    GonalContext base_context = context;
    base_context.d = context.d - bb.a * context.k;
    const int base_r = static_cast<int>(h0(base_e, 0)) - 1;
    record.translation = Translation{
        bb.a, std::make_shared<const ComponentRecord>(make_component(base_context, base_r, *base_bb))};
  }
  return record;
}

std::vector<ComponentRecord> classify_components(int g, int k, int d, int r, ClassifyOptions options) {
  if (k < 2) throw input_error("gonality k must be at least 2");
  if (r < 0) throw input_error("rank r must be nonnegative");
  if (g < 0) throw input_error("genus g must be nonnegative");
  const GonalContext context{g, k, d};
  const long total = context.expected_total();

  std::vector<ComponentRecord> out;
  for (int a = 0; a <= r; ++a) {
    for (int u = 1; u * (a + 1) <= r + 1; ++u) {
      const int rest = r + 1 - u * (a + 1);
      if (rest % (a + 2) != 0) continue;
      const int v = rest / (a + 2);
      const int negative = k - u - v;  // x + y
      if (negative < 1) continue;
      for (int y = 1; y <= negative; ++y) {
        const int x = negative - y;
        // total = -(b+1)x - b y + a u + (a+1) v, solved for b
        const long numerator = static_cast<long>(a) * u + static_cast<long>(a + 1) * v - x - total;
        if (numerator % negative != 0) continue;
        const long b = numerator / negative;
        if (b < 1) continue;
        const bool maximal = b >= 2 || v == 0;
        if (!maximal && !options.include_nonmaximal) continue;
        const BBType bb{a, static_cast<int>(b), x, y, u, v};
        if (u_invariant(bb.reconstruct()) > g) continue;
        out.push_back(make_component(context, r, bb));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const ComponentRecord& lhs, const ComponentRecord& rhs) {
    const auto& p = lhs.bb;
    const auto& q = rhs.bb;
    return std::tie(p.a, p.b, p.y, p.u, p.v) < std::tie(q.a, q.b, q.y, q.u, q.v);
  });
  return out;
}

CodimIdentities evaluate_codim_identities(const BBType& type_i, const BBType& type_ii, int g, int k,
                                          int d) {
  const long r = type_i.u - 1;
  const long t = type_ii.u;
  const long b = type_i.b;
  const long y = type_i.y;
  const long b2 = type_ii.b;
  const long y2 = type_ii.y;
  CodimIdentities out;
  out.degree_relation_i = static_cast<long>(g) + k - d - 1 == b * (k - r - 1) + k - r - 1 - y;
  out.degree_relation_ii = (b2 + 1) * (k - r - 1 - t) == b * (k - r - 1) - y + y2;
  const long lhs = u_invariant(type_ii.reconstruct()) - u_invariant(type_i.reconstruct());
  out.codimension = lhs == t * (static_cast<long>(g) - k - d + t + 2 * r + 1);
  return out;
}

bool check_codim_identity(const BBType& type_i, const BBType& type_ii, int g, int k, int d) {
  if (!type_i.is_valid() || type_i.a != 0 || type_i.v != 0)
    throw input_error(type_i.to_string() + " is not a type I pattern");
  const int r = type_i.u - 1;
  if (type_ii.a != 0 || type_ii.v != r + 1 || type_ii.u < 0 || type_ii.b < 1 || type_ii.y < 1 ||
      type_ii.x < 0)
    throw input_error(type_ii.to_string() + " is not a type II pattern with v = r+1");
  if (type_i.length() != k || type_ii.length() != k)
    throw input_error("patterns must both have length k = " + std::to_string(k));
  const GonalContext lower{g, k, d};
  const GonalContext upper{g, k, d + k};
  if (!lower.admits(type_i.reconstruct()))
    throw input_error(type_i.to_string() + " violates the degree relation at d = " + std::to_string(d));
  if (!upper.admits(type_ii.reconstruct()))
    throw input_error(type_ii.to_string() + " violates the degree relation at d + k = " +
                      std::to_string(d + k));
  return evaluate_codim_identities(type_i, type_ii, g, k, d).all();
}

bool type_II_threshold(const BBType& type_i, int t) {
  if (type_i.a != 0 || type_i.v != 0) throw input_error(type_i.to_string() + " is not a type I pattern");
  const long threshold = static_cast<long>(type_i.y) + 1 -
                         static_cast<long>(type_i.b - 1) * (type_i.y + type_i.x);
  return t >= threshold;
}

std::vector<int> IntInterval::values() const {
  std::vector<int> out;
  for (int n = lo; n < hi; ++n) out.push_back(n);
  return out;
}

IntInterval fitting_twist_range(const SplittingType& e) {
  if (e.size() < 2) throw input_error("fitting twist range needs k >= 2");
  return {-e.back(), -e.front() - 1};
}

std::set<int> tangent_twist_set(const SplittingType& e) {
  if (e.size() < 2) throw input_error("tangent twist set needs k >= 2");
  std::set<int> out;
  for (int value : e)
    if (value > e.front() + 1) out.insert(-value);
  return out;
}

bool free_from_M_bound(const ComponentRecord& record) {
  if (record.kind != ComponentKind::I) throw input_error("free-from-M bound applies to type I records");
  return record.r + 1 <= record.context.k - 1;
}

}  // namespace hbn
