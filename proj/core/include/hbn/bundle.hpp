#pragma once

#include <vector>

#include "hbn/laurent.hpp"
#include "hbn/splitting_type.hpp"

namespace hbn {

// Conventions. O(e) is presented by the 1x1 transition t^-e. A global section
// of the twist by O(n) of the bundle presented by M is a polynomial vector s
// in F_p[t]^k with t^-n M s in F_p[t^-1]^k. Changes of trivialization act as
// M -> L M R with L invertible over F_p[t^-1] and R invertible over F_p[t].

/// diag(t^-e_1, ..., t^-e_k).
LaurentMatrix diag_transition(const PrimeField& field, const SplittingType& e);

/// M = left * diag_transition(type) * right.
struct BirkhoffFactorization {
  LaurentMatrix left;   // invertible over F_p[t^-1]
  SplittingType type;   // sorted
  LaurentMatrix right;  // invertible over F_p[t]
};

/// Constructive Grothendieck splitting. Column-reduces M by F_p[t] column
/// operations until the top-degree coefficient matrix is invertible; the
/// column degrees are then -e. The result is verified exactly before return.
BirkhoffFactorization birkhoff_factorize(const LaurentMatrix& m);

/// Convenience: the splitting type alone.
SplittingType splitting_type(const LaurentMatrix& m);

/// Per-component degree bounds for global sections of M(n): every section s
/// has deg s_j <= bounds[j]. Derived from the cofactor expansion of M^-1
/// (row-sum and column-sum exponent bounds), independent of any factorization.
/// A negative entry means s_j = 0.
std::vector<int> section_degree_bounds(const LaurentMatrix& m, int n);

/// h^0 of the twist by O(n) of the bundle presented by M, as the kernel
/// dimension of the linear system for polynomial sections.
long h0_twist(const LaurentMatrix& m, int n);

/// Same system with every degree bound raised by `slack`; used to confirm the
/// bounds are large enough.
long h0_twist_with_slack(const LaurentMatrix& m, int n, int slack);

}  // namespace hbn
