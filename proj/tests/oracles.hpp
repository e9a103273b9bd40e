#pragma once
// Test-only reference implementations. They work on plain integer vectors and
// deliberately avoid the library's algorithms so the two can be compared.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include "hbn/laurent.hpp"

namespace oracle {

using Ints = std::vector<int>;

// Order-free: sums over unordered pairs, so no reliance on sortedness.
inline long u(const Ints& e) {
  long total = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) total += std::max(0, std::abs(e[j] - e[i]) - 1);
  return total;
}

// Counts monomials 1, t, ..., t^(e_i+n) one at a time.
inline long h0(const Ints& e, int n) {
  long total = 0;
  for (int ei : e)
    for (int deg = 0; deg <= ei + n; ++deg) ++total;
  return total;
}

inline long h1(const Ints& e, int n) {
  long total = 0;
  for (int ei : e)
    for (int deg = ei + n + 2; deg <= 0; ++deg) ++total;
  return total;
}

inline bool prefix_leq(Ints lower, Ints upper) {
  std::sort(lower.begin(), lower.end());
  std::sort(upper.begin(), upper.end());
  long a = 0;
  long b = 0;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    a += lower[i];
    b += upper[i];
    if (a > b) return false;
  }
  return true;
}

// h0 comparison on a very wide window instead of the tight one.
inline bool wide_h0_dominates(const Ints& lower, const Ints& upper, int reach = 40) {
  for (int n = -reach; n <= reach; ++n)
    if (h0(lower, n) < h0(upper, n)) return false;
  return true;
}

// Calls fn on every nondecreasing tuple of length k with entries in [lo, hi].
inline void for_each_sorted(int k, int lo, int hi, const std::function<void(const Ints&)>& fn) {
  Ints cur;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cur.size()) == k) {
      fn(cur);
      return;
    }
    for (int v = from; v <= hi; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(lo);
}

inline Ints sorted_with_sum(int k, int lo, int hi, long sum, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(lo, hi);
  for (;;) {
    Ints e(k);
    for (auto& v : e) v = dist(rng);
    long s = 0;
    for (int v : e) s += v;
    // Repair the sum by nudging random entries inside the box.
    for (int guard = 0; s != sum && guard < 200; ++guard) {
      auto& v = e[rng() % k];
      if (s < sum && v < hi) ++v, ++s;
      else if (s > sum && v > lo) --v, --s;
    }
    if (s == sum) {
      std::sort(e.begin(), e.end());
      return e;
    }
  }
}

struct Pattern {
  int a, b, x, y, u, v;
  friend bool operator==(const Pattern&, const Pattern&) = default;
};

// Tries every (a, b) in a generous range and counts the four levels.
inline std::optional<Pattern> find_pattern(const Ints& e, int reach = 30) {
  const int k = static_cast<int>(e.size());
  for (int a = 0; a <= reach; ++a)
    for (int b = 1; b <= reach; ++b) {
      Pattern p{a, b, 0, 0, 0, 0};
      for (int v : e) {
        if (v == -b - 1) ++p.x;
        else if (v == -b) ++p.y;
        else if (v == a) ++p.u;
        else if (v == a + 1) ++p.v;
      }
      if (p.x + p.y + p.u + p.v == k && p.y > 0 && p.u > 0) return p;
    }
  return std::nullopt;
}

inline Ints expand(const Pattern& p) {
  Ints e;
  e.insert(e.end(), p.x, -p.b - 1);
  e.insert(e.end(), p.y, -p.b);
  e.insert(e.end(), p.u, p.a);
  e.insert(e.end(), p.v, p.a + 1);
  return e;
}

struct Component {
  Ints e;
  Pattern bb;
  char kind;
  long dim;
  bool maximal;
  friend bool operator==(const Component&, const Component&) = default;
};

// Exhaustive search over every sorted tuple in a box that provably contains all
// candidates: the top entry is at most r+1 (h0 = r+1), the bottom entry is at
// least top - g - 1 (u <= g) and the top entry is at least 0 (h0 >= 1).
inline std::vector<Component> classify(int g, int k, int d, int r, bool include_nonmaximal = false) {
  const long total = static_cast<long>(d) - g + 1 - k;
  std::vector<Component> out;
  for_each_sorted(k, -g - 2, r + 2, [&](const Ints& e) {
    long s = 0;
    for (int v : e) s += v;
    if (s != total || h0(e, 0) != r + 1 || u(e) > g) return;
    const auto p = find_pattern(e);
    if (!p) return;
    const bool theorem_b = p->b >= 2 || p->v == 0;
    if (!theorem_b && !include_nonmaximal) return;
    const char kind = p->a != 0 ? '3' : (p->v == 0 ? '1' : '2');
    out.push_back({e, *p, kind, g - u(e), theorem_b});
  });
  std::sort(out.begin(), out.end(), [](const Component& l, const Component& r2) {
    return std::tie(l.bb.a, l.bb.b, l.bb.y, l.bb.u, l.bb.v) < std::tie(r2.bb.a, r2.bb.b, r2.bb.y, r2.bb.u, r2.bb.v);
  });
  return out;
}

struct CodimCase {
  Pattern type_i;
  Pattern type_ii;
  int g, k, d;
};

// Every type I pattern B(0,b,y,r+1,0) and type II pattern B(0,b',y',t,r+1) of
// the same length k whose sums differ by exactly k (degrees d and d+k).
inline std::vector<CodimCase> codim_grid(int max_k, int max_b, int g = 30) {
  std::vector<CodimCase> out;
  for (int k = 2; k <= max_k; ++k)
    for (int r = 0; r + 1 <= k - 1; ++r)
      for (int b = 1; b <= max_b; ++b)
        for (int y = 1; y + r + 1 <= k; ++y) {
          const Pattern one{0, b, k - y - (r + 1), y, r + 1, 0};
          long s1 = 0;
          for (int v : expand(one)) s1 += v;
          const int d = static_cast<int>(s1) + g - 1 + k;
          for (int b2 = 1; b2 <= max_b; ++b2)
            for (int y2 = 1; y2 + r + 1 <= k; ++y2)
              for (int t = 0; y2 + t + r + 1 <= k; ++t) {
                const Pattern two{0, b2, k - y2 - t - (r + 1), y2, t, r + 1};
                long s2 = 0;
                for (int v : expand(two)) s2 += v;
                if (s2 == s1 + k) out.push_back({one, two, g, k, d});
              }
        }
  return out;
}

// ---- Laurent matrices -------------------------------------------------------

using Terms = std::vector<std::pair<int, std::int64_t>>;

inline hbn::LaurentGrid grid_from(const hbn::PrimeField& f, const std::vector<std::vector<Terms>>& rows) {
  hbn::LaurentGrid g(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) g(i, j) = hbn::LaurentPoly::from_terms(f, rows[i][j]);
  return g;
}

// Product of random elementary factors, a scaled diagonal and a permutation.
// sign = -1 gives a unit over F_p[t^-1], sign = +1 over F_p[t].
inline hbn::LaurentGrid random_unimodular(const hbn::PrimeField& f, std::size_t k, int sign, int max_deg,
                                          std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> coeff(1, f.modulus() - 1);
  std::uniform_int_distribution<int> deg(0, max_deg);
  hbn::LaurentGrid m = hbn::LaurentGrid::identity(k);
  if (k == 1) {
    m(0, 0) = hbn::LaurentPoly::constant(coeff(rng));
    return m;
  }
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  hbn::LaurentGrid p(k);
  for (std::size_t i = 0; i < k; ++i) p(i, perm[i]) = hbn::LaurentPoly::constant(coeff(rng));
  m = p;
  const int steps = static_cast<int>(2 * k);
  for (int s = 0; s < steps; ++s) {
    const std::size_t a = rng() % k;
    std::size_t b = rng() % (k - 1);
    if (b >= a) ++b;
    hbn::LaurentGrid e = hbn::LaurentGrid::identity(k);
    const int n_terms = 1 + static_cast<int>(rng() % 2);
    hbn::LaurentPoly entry;
    for (int t = 0; t < n_terms; ++t)
      entry = add(f, entry, hbn::LaurentPoly::monomial(coeff(rng), sign * deg(rng)));
    e(a, b) = entry;
    m = hbn::multiply(f, m, e);
  }
  return m;
}

}  // namespace oracle
