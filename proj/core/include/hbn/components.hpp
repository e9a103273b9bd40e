#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "hbn/splitting_type.hpp"

namespace hbn {

/// Brill-Noether number g - (r+1)(g - d + r).
long rho(int g, int d, int r);

enum class ComponentKind { I, II, III };
std::string_view to_string(ComponentKind kind);

struct ComponentRecord;

/// A type III component is the translate W' + aM of a type I/II component W'.
struct Translation {
  int a = 0;
  std::shared_ptr<const ComponentRecord> base;
};

/// One predicted irreducible component of W^r_d(C) on a general k-gonal curve.
struct ComponentRecord {
  GonalContext context;
  int r = 0;
  SplittingType splitting_type = SplittingType::make({0});
  BBType bb;
  ComponentKind kind = ComponentKind::I;
  long dim = 0;
  bool irreducible = false;
  /// u(e) == g: the locus is a finite set of points.
  bool finite_points = false;
  /// False only for b = 1, v > 0 patterns reported on request; those strata
  /// sit inside larger components.
  bool maximal = true;
  std::optional<Translation> translation;
};

struct ClassifyOptions {
  bool include_nonmaximal = false;
};

/// Components of W^r_d(C) for a general k-gonal curve of genus g, ordered
/// lexicographically on (a, b, y, u, v).
std::vector<ComponentRecord> classify_components(int g, int k, int d, int r,
                                                 ClassifyOptions options = {});

/// Builds the record for a single pattern; throws input_error if the pattern
/// is not a valid BBType of length k with h0 = r + 1 and the context total.
ComponentRecord make_component(const GonalContext& context, int r, const BBType& bb);

/// The three identities relating a type I pattern at degree d and a type II
/// pattern at degree d + k.
struct CodimIdentities {
  bool degree_relation_i = false;   // g+k-d-1 = b(k-r-1) + k-r-1-y
  bool degree_relation_ii = false;  // (b'+1)(k-r-1-t) = b(k-r-1) - y + y'
  bool codimension = false;         // u(e') - u(e) = t(g-k-d+t+2r+1)
  bool all() const { return degree_relation_i && degree_relation_ii && codimension; }
};

/// Evaluates the identities without checking preconditions; u(e) and u(e')
/// come from u_invariant on the reconstructions, the right-hand sides from
/// plain arithmetic.
CodimIdentities evaluate_codim_identities(const BBType& type_i, const BBType& type_ii, int g,
                                          int k, int d);

/// Validates the shapes (type I: a = 0, v = 0, u = r+1; type II: a = 0,
/// v = r+1, u = t >= 0) and both degree relations, then evaluates the
/// identities. Throws input_error on precondition violation.
bool check_codim_identity(const BBType& type_i, const BBType& type_ii, int g, int k, int d);

/// t >= (y+1) - (b-1)(y+x). Throws input_error unless type_i has a = 0, v = 0.
bool type_II_threshold(const BBType& type_i, int t);

/// Half-open twist interval [lo, hi).
struct IntInterval {
  int lo = 0;
  int hi = 0;
  bool empty() const { return hi <= lo; }
  std::vector<int> values() const;
};

/// [-e_k, -e_1 - 1): the twists whose Fitting conditions are not automatic.
IntInterval fitting_twist_range(const SplittingType& e);

/// { -e_i : e_1 + 1 < e_i <= e_k }.
std::set<int> tangent_twist_set(const SplittingType& e);

/// r + 1 <= k - 1; must hold for every type I record.
bool free_from_M_bound(const ComponentRecord& record);

}  // namespace hbn
