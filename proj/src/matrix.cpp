#include "lozenge/matrix.hpp"

#include <utility>

namespace lozenge {

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix product: inner dimensions differ");
  }
  ExactMatrix c(a.rows(), b.cols());
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t k = 1; k <= a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 1; j <= b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  }
  return c;
}

ExactMatrix to_exact(const IntegerMatrix& m) {
  ExactMatrix out(m.rows(), m.cols());
  for (std::size_t i = 1; i <= m.rows(); ++i)
    for (std::size_t j = 1; j <= m.cols(); ++j) out.at(i, j) = Rational(m.at(i, j));
  return out;
}

Integer bareiss_det(const IntegerMatrix& input) {
  if (!input.square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;

  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = input.at(i + 1, j + 1);

  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Rational bareiss_det(const ExactMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  IntegerMatrix scaled(m.rows(), m.cols());
  Integer scale = 1;
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    Integer row_lcm = 1;
    for (std::size_t j = 1; j <= m.cols(); ++j)
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m.at(i, j).get_den_mpz_t());
    for (std::size_t j = 1; j <= m.cols(); ++j) {
      const Rational& q = m.at(i, j);
      scaled.at(i, j) = q.get_num() * (row_lcm / q.get_den());
    }
    scale *= row_lcm;
  }
  return make_rational(bareiss_det(scaled), scale);
}

ExactMatrix inverse_by_elimination(const ExactMatrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  ExactMatrix a = m;
  ExactMatrix inv = ExactMatrix::identity(n);
  for (std::size_t c = 1; c <= n; ++c) {
    std::size_t p = c;
    while (p <= n && a.at(p, c) == 0) ++p;
    if (p > n) throw std::domain_error("inverse of singular matrix");
    if (p != c) {
      for (std::size_t j = 1; j <= n; ++j) {
        std::swap(a.at(p, j), a.at(c, j));
        std::swap(inv.at(p, j), inv.at(c, j));
      }
    }
    Rational pivot = a.at(c, c);
    for (std::size_t j = 1; j <= n; ++j) {
      a.at(c, j) /= pivot;
      inv.at(c, j) /= pivot;
    }
    for (std::size_t r = 1; r <= n; ++r) {
      if (r == c || a.at(r, c) == 0) continue;
      Rational f = a.at(r, c);
      for (std::size_t j = 1; j <= n; ++j) {
        a.at(r, j) -= f * a.at(c, j);
        inv.at(r, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

}  // namespace lozenge
