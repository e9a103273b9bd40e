#include <doctest.h>

#include <random>

#include "hbn/errors.hpp"
#include "hbn/fp_linear.hpp"
#include "hbn/laurent.hpp"
#include "oracles.hpp"

using namespace hbn;
using LP = LaurentPoly;

namespace {

LP poly(const PrimeField& f, oracle::Terms terms) { return LP::from_terms(f, terms); }

LP random_poly(const PrimeField& f, std::mt19937_64& rng, int lo, int hi) {
  oracle::Terms terms;
  for (int e = lo; e <= hi; ++e)
    if (rng() % 2) terms.emplace_back(e, static_cast<std::int64_t>(rng() % f.modulus()));
  return LP::from_terms(f, terms);
}

}  // namespace

TEST_CASE("prime field construction and arithmetic") {
  CHECK_THROWS_AS(PrimeField(2), input_error);
  CHECK_THROWS_AS(PrimeField(9), input_error);
  CHECK_THROWS_AS(PrimeField(1), input_error);
  CHECK_THROWS_AS(PrimeField(0), input_error);
  CHECK_THROWS_AS(PrimeField(2147483659u), input_error);
  CHECK_NOTHROW(PrimeField(2147483647u));
  const PrimeField f(101);
  CHECK(f.reduce(-1) == 100);
  CHECK(f.reduce(202) == 0);
  CHECK(f.add(100, 5) == 4);
  CHECK(f.sub(3, 5) == 99);
  CHECK(f.neg(0) == 0);
  CHECK(f.mul(50, 3) == 49);
  CHECK(f.pow(3, 100) == 1);
  CHECK_THROWS_AS(f.inv(0), input_error);
  for (std::uint32_t a = 1; a < 101; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  const PrimeField big(2147483647u);
  CHECK(big.mul(big.inv(123456789), 123456789) == 1);
  CHECK(is_prime(32003));
  CHECK_FALSE(is_prime(32001));
}

TEST_CASE("Laurent polynomial normalization and accessors") {
  const PrimeField f(101);
  const LP zero = poly(f, {{3, 101}, {-1, 0}});
  CHECK(zero.is_zero());
  CHECK(zero == LP());
  const LP p = poly(f, {{-2, 1}, {0, 5}, {1, 3}, {0, 96}});
  CHECK(p.min_exponent() == -2);
  CHECK(p.max_exponent() == 1);
  CHECK(p.coeff(0) == 0);
  CHECK(p.coeff(7) == 0);
  CHECK(p.to_string() == "1^-2 3^1");
  CHECK_FALSE(p.is_monomial());
  CHECK(LP::monomial(4, -3).is_monomial());
  CHECK(LP::monomial(0, 2).is_zero());
  CHECK(p.shifted(2) == poly(f, {{0, 1}, {3, 3}}));
  CHECK(poly(f, {{0, -1}}).coeff(0) == 100);
}

TEST_CASE("Laurent ring axioms on random elements") {
  const PrimeField f(32003);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const LP a = random_poly(f, rng, -3, 3);
    const LP b = random_poly(f, rng, -2, 4);
    const LP c = random_poly(f, rng, -4, 1);
    CHECK(add(f, a, b) == add(f, b, a));
    CHECK(mul(f, a, b) == mul(f, b, a));
    CHECK(mul(f, a, add(f, b, c)) == add(f, mul(f, a, b), mul(f, a, c)));
    CHECK(mul(f, mul(f, a, b), c) == mul(f, a, mul(f, b, c)));
    CHECK(sub(f, a, a).is_zero());
    CHECK(add(f, sub(f, a, b), b) == a);
    CHECK(scale(f, a, 0).is_zero());
    if (!b.is_zero()) CHECK(divide_exact(f, mul(f, a, b), b) == a);
  }
}

TEST_CASE("exact division errors") {
  const PrimeField f(101);
  CHECK_THROWS_AS(divide_exact(f, LP::constant(1), LP()), input_error);
  CHECK_THROWS_AS(divide_exact(f, poly(f, {{0, 1}, {1, 1}}), poly(f, {{0, 1}, {1, 2}})), input_error);
  CHECK_THROWS_AS(divide_exact(f, LP::constant(1), poly(f, {{0, 1}, {1, 1}})), input_error);
  CHECK(divide_exact(f, LP::monomial(6, 3), LP::monomial(2, -1)) == LP::monomial(3, 4));
}

TEST_CASE("determinants and invertibility") {
  const PrimeField f(101);
  const auto g = oracle::grid_from(f, {{{{1, 1}}, {{0, 1}}}, {{}, {{-1, 1}}}});
  const LP det = determinant(f, g);
  CHECK(det == LP::constant(1));
  const LaurentMatrix m(f, g);
  CHECK(m.det_exponent() == 0);
  CHECK(m.det_coefficient() == 1);
  CHECK(m.max_exponent() == 1);
  const auto singular = oracle::grid_from(f, {{{{0, 1}}, {{1, 1}}}, {{{0, 2}}, {{1, 2}}}});
  CHECK(determinant(f, singular).is_zero());
  CHECK_THROWS_AS(LaurentMatrix(f, singular), input_error);
  const auto non_unit = oracle::grid_from(f, {{{{0, 1}, {1, 1}}, {}}, {{}, {{0, 1}}}});
  CHECK_THROWS_AS(LaurentMatrix(f, non_unit), input_error);
  CHECK_THROWS_AS(LaurentMatrix(f, LaurentGrid(0)), input_error);
  CHECK(is_polynomial_in_t(oracle::grid_from(f, {{{{2, 1}}}})));
  CHECK_FALSE(is_polynomial_in_t(oracle::grid_from(f, {{{{-2, 1}}}})));
  CHECK(is_polynomial_in_t_inverse(oracle::grid_from(f, {{{{-2, 1}}}})));
}

TEST_CASE("determinant is multiplicative on random unimodular products") {
  const PrimeField f(101);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t k = 1 + rng() % 4;
    const auto l = oracle::random_unimodular(f, k, -1, 3, rng);
    const auto r = oracle::random_unimodular(f, k, +1, 3, rng);
    const LP dl = determinant(f, l);
    const LP dr = determinant(f, r);
    CHECK(dl.is_monomial());
    CHECK(dl.min_exponent() == 0);
    CHECK(dr.min_exponent() == 0);
    CHECK(is_polynomial_in_t_inverse(l));
    CHECK(is_polynomial_in_t(r));
    CHECK(determinant(f, multiply(f, l, r)) == mul(f, dl, dr));
  }
}

TEST_CASE("rank and kernel over F_p") {
  const PrimeField f(7);
  FpMatrix m(3, 4);
  const std::uint32_t rows[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 2}, {3, 6, 2, 6}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = rows[i][j];
  CHECK(rank(f, m) == 2);
  const auto kv = kernel_vector(f, m);
  REQUIRE(kv.has_value());
  bool nonzero = false;
  for (auto x : *kv) nonzero = nonzero || x != 0;
  CHECK(nonzero);
  for (std::size_t i = 0; i < 3; ++i) {
    std::uint32_t acc = 0;
    for (std::size_t j = 0; j < 4; ++j) acc = f.add(acc, f.mul(m(i, j), (*kv)[j]));
    CHECK(acc == 0);
  }
  FpMatrix id(2, 2);
  id(0, 0) = id(1, 1) = 1;
  CHECK(rank(f, id) == 2);
  CHECK_FALSE(kernel_vector(f, id).has_value());
  CHECK(rank(f, FpMatrix(0, 3)) == 0);
}
