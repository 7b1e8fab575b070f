#pragma once

// Independent reference computations used only by the tests. None of these
// call into the code paths they are used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "lozenge/exactnum.hpp"
#include "lozenge/matrix.hpp"

namespace oracle {

using lozenge::ExactMatrix;
using lozenge::Int;
using lozenge::Integer;
using lozenge::Rational;

// Pascal-triangle binomial, zero outside [0, m].
inline Integer pascal(Int m, Int k) {
  if (m < 0 || k < 0 || k > m) return 0;
  std::vector<Integer> row{1};
  for (Int r = 1; r <= m; ++r) {
    std::vector<Integer> next(static_cast<std::size_t>(r) + 1, 1);
    for (Int c = 1; c < r; ++c)
      next[static_cast<std::size_t>(c)] =
          row[static_cast<std::size_t>(c - 1)] + row[static_cast<std::size_t>(c)];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

// Determinant by plain rational Gaussian elimination.
inline Rational gauss_det(ExactMatrix m) {
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 1; c <= n; ++c) {
    std::size_t p = c;
    while (p <= n && m.at(p, c) == 0) ++p;
    if (p > n) return 0;
    if (p != c) {
      for (std::size_t j = 1; j <= n; ++j) std::swap(m.at(p, j), m.at(c, j));
      det = -det;
    }
    det *= m.at(c, c);
    for (std::size_t r = c + 1; r <= n; ++r) {
      Rational f = m.at(r, c) / m.at(c, c);
      for (std::size_t j = c; j <= n; ++j) m.at(r, j) -= f * m.at(c, j);
    }
  }
  return det;
}

// Leibniz expansion; only for tiny matrices.
inline Rational leibniz_det(const ExactMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = (inversions % 2) ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m.at(i + 1, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// e_k of the values.
inline Integer elementary_symmetric(const std::vector<Int>& v, std::size_t k) {
  std::vector<Integer> e(k + 1, 0);
  e[0] = 1;
  for (Int x : v)
    for (std::size_t j = k; j >= 1; --j) e[j] += e[j - 1] * Integer(x);
  return e[k];
}

// prod_{i<j} (v_j - v_i) written out independently.
inline Integer vandermonde_product(const std::vector<Int>& v) {
  Integer p = 1;
  for (std::size_t j = 0; j < v.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) p *= Integer(v[j] - v[i]);
  return p;
}

// The polynomial-entry matrix left after pulling A!/((b-1)!(A-b+n)!) out of
// every column of the struck minor; its determinant is P_{n,s}.
inline Rational reduced_cofactor_det(std::size_t n, std::size_t s, Int a, const std::vector<Int>& b) {
  ExactMatrix m(n - 1, n - 1);
  for (std::size_t row = 1; row < n; ++row) {
    const Int shift = static_cast<Int>(row) + (row >= s ? 1 : 0);
    for (std::size_t col = 1; col < n; ++col) {
      const Int bi = b[col - 1];
      Integer p = 1;
      for (Int t = bi - shift + 1; t <= bi - 1; ++t) p *= Integer(t);
      for (Int t = a - bi + shift + 1; t <= a - bi + static_cast<Int>(n); ++t) p *= Integer(t);
      m.at(row, col) = Rational(p);
    }
  }
  return gauss_det(m);
}

// Tabulated P_{n,2} polynomials for n = 3..6, in A and the elementary symmetric
// functions of b.
inline Integer tabulated_p2(std::size_t n, Int a, const std::vector<Int>& b) {
  auto e = [&](std::size_t k) { return elementary_symmetric(b, k); };
  const Integer A(a);
  const Integer delta = vandermonde_product(b);
  auto pw = [](Integer base, int k) {
    Integer r = 1;
    for (int i = 0; i < k; ++i) r *= base;
    return r;
  };
  switch (n) {
    case 3:
      return (A + 1) * delta * (-2 * e(2) + (A + 4) * e(1) - (3 * A + 8));
    case 4:
      return pw(A + 1, 2) * (A + 2) * delta *
             (-3 * e(3) + (A + 6) * e(2) - (3 * A + 12) * e(1) + (7 * A + 24));
    case 5:
      return pw(A + 1, 3) * pw(A + 2, 2) * (A + 3) * delta *
             (-4 * e(4) + (A + 8) * e(3) - (3 * A + 16) * e(2) + (7 * A + 32) * e(1) -
              (15 * A + 64));
    case 6:
      return pw(A + 1, 4) * pw(A + 2, 3) * pw(A + 3, 2) * (A + 4) * delta *
             (-5 * e(5) + (A + 10) * e(4) - (3 * A + 20) * e(3) + (7 * A + 40) * e(2) -
              (15 * A + 80) * e(1) + (31 * A + 160));
    default:
      return 0;
  }
}

// Closed form of P_{n,1}.
inline Integer tabulated_p1(std::size_t n, Int a, const std::vector<Int>& b) {
  Integer r = vandermonde_product(b);
  for (std::size_t i = 1; i + 2 <= n; ++i)
    for (std::size_t k = 0; k < n - 1 - i; ++k) r *= Integer(a + static_cast<Int>(i));
  for (Int v : b) r *= Integer(v - 1);
  return r;
}

// Nonintersecting families counted by brute force over independent walker
// paths (each path is a 0/1 step word).
inline std::uint64_t brute_force_count(Int steps, const std::vector<Int>& ends) {
  const std::size_t n = ends.size();
  std::vector<std::vector<std::vector<Int>>> paths(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Int start = static_cast<Int>(i) + 1;
    for (std::uint64_t mask = 0; mask < (1ULL << steps); ++mask) {
      std::vector<Int> path{start};
      for (Int t = 0; t < steps; ++t) path.push_back(path.back() + ((mask >> t) & 1ULL));
      if (path.back() == ends[i]) paths[i].push_back(std::move(path));
    }
  }
  std::uint64_t count = 0;
  std::vector<std::size_t> pick(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      ++count;
      return;
    }
    for (std::size_t p = 0; p < paths[i].size(); ++p) {
      bool ok = true;
      if (i > 0) {
        const auto& prev = paths[i - 1][pick[i - 1]];
        for (Int t = 0; t <= steps && ok; ++t)
          ok = paths[i][p][static_cast<std::size_t>(t)] > prev[static_cast<std::size_t>(t)];
      }
      if (!ok) continue;
      pick[i] = p;
      rec(i + 1);
    }
  };
  rec(0);
  return count;
}

inline std::vector<Int> distinct_sample(std::mt19937_64& rng, Int lo, Int hi, std::size_t count) {
  std::vector<Int> pool(static_cast<std::size_t>(hi - lo + 1));
  std::iota(pool.begin(), pool.end(), lo);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(count);
  return pool;
}

inline Int uniform(std::mt19937_64& rng, Int lo, Int hi) {
  return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

}  // namespace oracle
