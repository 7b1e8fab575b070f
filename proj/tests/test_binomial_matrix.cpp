#include <doctest.h>

#include <random>
#include <stdexcept>

#include "lozenge/binomial_matrix.hpp"
#include "oracles.hpp"

using namespace lozenge;

namespace {

BinomialMatrixSpec random_spec(std::mt19937_64& rng, Int n_max, Int a_max) {
  const auto n = static_cast<std::size_t>(oracle::uniform(rng, 1, n_max));
  const Int a = oracle::uniform(rng, 0, a_max);
  return {a, oracle::distinct_sample(rng, 1, a + static_cast<Int>(n), n)};
}

}  // namespace

TEST_CASE("build_m") {
  auto m = build_m({3, {2, 4}});
  CHECK(m.at(1, 1) == 3);
  CHECK(m.at(1, 2) == 1);
  CHECK(m.at(2, 1) == 1);
  CHECK(m.at(2, 2) == 3);
  CHECK(build_m({3, {2}}).at(1, 1) == 3);

  // half-hexagon parameters reproduce [binomial(n+1, 2j-i)]
  for (std::size_t n = 1; n <= 6; ++n) {
    BinomialMatrixSpec spec{static_cast<Int>(n) + 1, {}};
    for (std::size_t j = 1; j <= n; ++j) spec.b.push_back(2 * static_cast<Int>(j));
    const auto hh = build_m(spec);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        CHECK(hh.at(i, j) == oracle::pascal(static_cast<Int>(n) + 1,
                                            2 * static_cast<Int>(j) - static_cast<Int>(i)));
  }
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(build_m({3, {2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(build_m({3, {0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(build_m({3, {2, 6}}), std::invalid_argument);  // A+n = 5
  CHECK_THROWS_AS(build_m({-1, {1}}), std::invalid_argument);
  CHECK_NOTHROW(build_m({3, {1, 5}}));
  CHECK_THROWS_AS(closed_form_inverse({3, {2, 2}}), std::invalid_argument);
}

TEST_CASE("closed-form inverse small cases") {
  const auto one = closed_form_inverse({3, {2}});
  CHECK(one.at(1, 1) == make_rational(1, 3));

  const auto two = closed_form_inverse({3, {2, 4}});
  CHECK(two.at(1, 1) == make_rational(3, 8));
  CHECK(two.at(1, 2) == make_rational(-1, 8));
  CHECK(two.at(2, 1) == make_rational(-1, 8));
  CHECK(two.at(2, 2) == make_rational(3, 8));
  CHECK(two == inverse_by_elimination(to_exact(build_m({3, {2, 4}}))));

  // A = 0: M is a permutation matrix
  const BinomialMatrixSpec perm{0, {3, 1, 2}};
  CHECK(to_exact(build_m(perm)) * closed_form_inverse(perm) == ExactMatrix::identity(3));
}

TEST_CASE("closed-form inverse is a two-sided inverse") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 120; ++trial) {
    const auto spec = random_spec(rng, 8, 15);
    const auto m = to_exact(build_m(spec));
    const auto inv = closed_form_inverse(spec);
    const auto id = ExactMatrix::identity(spec.size());
    CHECK(m * inv == id);
    CHECK(inv * m == id);
  }
  const BinomialMatrixSpec five{7, {1, 4, 6, 9, 12}};
  CHECK(to_exact(build_m(five)) * closed_form_inverse(five) == ExactMatrix::identity(5));
}

TEST_CASE("injected fault breaks the identity") {
  const BinomialMatrixSpec spec{3, {2, 4}};
  const auto bad = closed_form_inverse(spec, InverseFault::negate_first_term);
  CHECK_FALSE(to_exact(build_m(spec)) * bad == ExactMatrix::identity(2));
}

TEST_CASE("half-hexagon determinant is a power of two") {
  for (std::size_t n = 1; n <= 30; ++n) {
    BinomialMatrixSpec spec{static_cast<Int>(n) + 1, {}};
    for (std::size_t j = 1; j <= n; ++j) spec.b.push_back(2 * static_cast<Int>(j));
    Integer expected = 1;
    expected <<= static_cast<mp_bitcnt_t>(n * (n + 1) / 2);
    CHECK(bareiss_det(build_m(spec)) == expected);
  }
}

TEST_CASE("det_binomial_l") {
  const std::vector<Int> l01{0, 1};
  CHECK(det_binomial_l(4, l01) == -20);
  CHECK(Rational(bareiss_det(binomial_l_matrix(4, l01))) == -20);
  CHECK(det_binomial_l(3, std::vector<Int>{0}) == 3);
  CHECK_THROWS_AS(det_binomial_l(3, std::vector<Int>{3}), std::domain_error);
  CHECK_THROWS_AS(det_binomial_l(3, std::vector<Int>{-3, 0}), std::domain_error);

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Int a = oracle::uniform(rng, 1, 12);
    const auto n = static_cast<std::size_t>(oracle::uniform(rng, 1, 5));
    std::vector<Int> l(n);
    for (auto& v : l) v = oracle::uniform(rng, -static_cast<Int>(n), a - 1);
    CHECK(det_binomial_l(a, l) == oracle::gauss_det(to_exact(binomial_l_matrix(a, l))));
  }
}

TEST_CASE("cofactor_p matches the reduced determinant and the struck minor") {
  const std::vector<Int> b13{1, 3};
  CHECK(cofactor_p(3, 2, 2, b13) == 24);
  CHECK(oracle::reduced_cofactor_det(3, 2, 2, b13) == 24);

  std::mt19937_64 rng(8);
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::size_t s = 1; s <= n; ++s) {
      for (int trial = 0; trial < 8; ++trial) {
        const Int a = oracle::uniform(rng, 0, 9);
        const auto b = oracle::distinct_sample(rng, 1, a + static_cast<Int>(n), n - 1);
        const Rational p = cofactor_p(n, s, a, b);
        CHECK(p == oracle::reduced_cofactor_det(n, s, a, b));
        CHECK(Rational(cofactor_minor(n, s, a, b)) == cofactor_prefactor(n, a, b) * p);
      }
    }
  }
}

TEST_CASE("cofactor_p reproduces the tabulated s = 1 and s = 2 polynomials") {
  std::mt19937_64 rng(12);
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const Int a = oracle::uniform(rng, 0, 15);
      std::vector<Int> b(n - 1);
      for (auto& v : b) v = oracle::uniform(rng, -10, 20);
      CHECK(cofactor_p(n, 1, a, b) == Rational(oracle::tabulated_p1(n, a, b)));
      if (n >= 3) CHECK(cofactor_p(n, 2, a, b) == Rational(oracle::tabulated_p2(n, a, b)));
    }
  }
}

TEST_CASE("cofactor_p is antisymmetric in bbar") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(oracle::uniform(rng, 3, 6));
    const auto s = static_cast<std::size_t>(oracle::uniform(rng, 1, static_cast<Int>(n)));
    const Int a = oracle::uniform(rng, 0, 10);
    auto b = oracle::distinct_sample(rng, -5, 15, n - 1);
    const Rational p = cofactor_p(n, s, a, b);
    std::swap(b[0], b[1]);
    CHECK(cofactor_p(n, s, a, b) == -p);
    b[1] = b[0];
    CHECK(cofactor_p(n, s, a, b) == 0);
  }
  CHECK_THROWS_AS(cofactor_p(3, 0, 2, std::vector<Int>{1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(cofactor_p(3, 4, 2, std::vector<Int>{1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(cofactor_p(3, 1, 2, std::vector<Int>{1}), std::invalid_argument);
}

TEST_CASE("Lagrange identity") {
  // a single node interpolates trivially
  for (Int a = 0; a <= 6; ++a) {
    for (Int b = 1; b <= a + 1; ++b) {
      auto [lhs, rhs] = lagrange_identity_sides({a, {b}}, 1, b);
      CHECK(lhs == rhs);
    }
  }
  auto [lhs, rhs] = lagrange_identity_sides({3, {2, 4}}, 1, 1);
  CHECK(lhs == rhs);
  CHECK(rhs == make_rational(1, 1));

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const auto spec = random_spec(rng, 5, 8);
    const Int n = static_cast<Int>(spec.size());
    for (std::size_t alpha = 1; alpha <= spec.size(); ++alpha) {
      for (Int k = 1; k <= spec.a + n; ++k) {
        auto [l, r] = lagrange_identity_sides(spec, alpha, k);
        CHECK(l == r);
      }
    }
  }
  CHECK_THROWS_AS(lagrange_identity_sides({3, {2, 4}}, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(lagrange_identity_sides({3, {2, 4}}, 1, 0), std::invalid_argument);
}
