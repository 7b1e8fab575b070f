#include "lozenge/binomial_matrix.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace lozenge {

namespace {

Int as_int(std::size_t v) { return static_cast<Int>(v); }

// prod_{l != i} (B_i - B_l), the Lagrange node denominator.
Integer node_denominator(const std::vector<Int>& b, std::size_t i) {
  Integer d = 1;
  for (std::size_t l = 1; l <= b.size(); ++l)
    if (l != i) d *= Integer(b[i - 1] - b[l - 1]);
  return d;
}

// prod_{l != i} (k - B_l).
Integer node_numerator(const std::vector<Int>& b, std::size_t i, Int k) {
  Integer p = 1;
  for (std::size_t l = 1; l <= b.size(); ++l)
    if (l != i) p *= Integer(k - b[l - 1]);
  return p;
}

}  // namespace

void BinomialMatrixSpec::validate() const {
  if (a < 0) throw std::invalid_argument("binomial matrix: A must be >= 0");
  const Int n = as_int(b.size());
  std::set<Int> seen;
  for (Int v : b) {
    if (v < 1 || v > a + n) {
      throw std::invalid_argument("binomial matrix: B value " + std::to_string(v) +
                                  " outside [1, A+n] = [1, " + std::to_string(a + n) + "]");
    }
    if (!seen.insert(v).second) {
      throw std::invalid_argument("binomial matrix: repeated B value " + std::to_string(v));
    }
  }
}

IntegerMatrix build_m(const BinomialMatrixSpec& spec) {
  spec.validate();
  const std::size_t n = spec.size();
  IntegerMatrix m(n, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      m.at(i, j) = binomial(spec.a, spec.b[j - 1] - as_int(i));
  return m;
}

ExactMatrix closed_form_inverse(const BinomialMatrixSpec& spec, InverseFault fault) {
  spec.validate();
  const std::size_t n = spec.size();
  const Int a = spec.a;
  const Int top = a + as_int(n) - 1;
  ExactMatrix inv(n, n);
  for (std::size_t i = 1; i <= n; ++i) {
    // The product over l != i splits into an integer numerator per k and a
    // denominator shared by the whole row.
    const Integer denom = binomial(top, spec.b[i - 1] - 1) * node_denominator(spec.b, i);
    for (std::size_t j = 1; j <= n; ++j) {
      Integer sum = 0;
      for (std::size_t k = 1; k <= j; ++k) {
        const Int kk = as_int(k), jj = as_int(j);
        Integer term = binomial(top, kk - 1) * multichoose(a, jj - kk) *
                       node_numerator(spec.b, i, kk);
        if (sign_power(kk + jj) < 0) term = -term;
        if (fault == InverseFault::negate_first_term && k == 1) term = -term;
        sum += term;
      }
      inv.at(i, j) = make_rational(sum, denom);
    }
  }
  return inv;
}

IntegerMatrix binomial_l_matrix(Int a, std::span<const Int> l) {
  const std::size_t n = l.size();
  IntegerMatrix m(n, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) m.at(i, j) = binomial(a, l[i - 1] + as_int(j));
  return m;
}

Rational det_binomial_l(Int a, std::span<const Int> l) {
  const Int n = as_int(l.size());
  Integer num = 1;
  Integer den = 1;
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j < l.size(); ++j) num *= Integer(l[i] - l[j]);
  for (Int i = 1; i <= n; ++i) {
    const Int li = l[static_cast<std::size_t>(i - 1)];
    if (li + n < 0 || a - li - 1 < 0) {
      throw std::domain_error("det_binomial_l: factorial argument out of range for L = " +
                              std::to_string(li));
    }
    num *= factorial(a + i - 1);
    den *= factorial(li + n) * factorial(a - li - 1);
  }
  return make_rational(num, den);
}

Rational cofactor_p(std::size_t n, std::size_t s, Int a, std::span<const Int> bbar) {
  if (n < 1 || s < 1 || s > n) throw std::invalid_argument("cofactor_p: row index out of range");
  if (bbar.size() + 1 != n) throw std::invalid_argument("cofactor_p: expected n-1 b values");
  if (a < 0) throw std::invalid_argument("cofactor_p: A must be >= 0");
  const Int nn = as_int(n), ss = as_int(s);

  Integer prefix = vandermonde(bbar);
  for (Int r = 1; r <= nn - 2; ++r) {
    Integer f;
    mpz_pow_ui(f.get_mpz_t(), Integer(a + r).get_mpz_t(), static_cast<unsigned long>(nn - 1 - r));
    prefix *= f;
  }

  Integer sum = 0;
  for (Int j = 1; j <= ss; ++j) {
    Integer term = multichoose(a, ss - j) * binomial(nn + a - 1, j - 1);
    for (Int bl : bbar) term *= Integer(bl - j);
    sum += sign_power(j + 1) > 0 ? term : Integer(-term);
  }
  return Rational(prefix * sum);
}

Integer cofactor_minor(std::size_t n, std::size_t s, Int a, std::span<const Int> bbar) {
  if (n < 1 || s < 1 || s > n) throw std::invalid_argument("cofactor_minor: row index out of range");
  if (bbar.size() + 1 != n) throw std::invalid_argument("cofactor_minor: expected n-1 b values");
  IntegerMatrix m(n - 1, n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    const Int shift = as_int(i) + (i >= s ? 1 : 0);
    for (std::size_t j = 1; j < n; ++j) m.at(i, j) = binomial(a, bbar[j - 1] - shift);
  }
  return bareiss_det(m);
}

Rational cofactor_prefactor(std::size_t n, Int a, std::span<const Int> bbar) {
  const Int nn = as_int(n);
  Integer num = 1, den = 1;
  for (Int b : bbar) {
    if (b < 1 || b > a + nn) {
      throw std::domain_error("cofactor_prefactor: b value outside [1, A+n]");
    }
    num *= factorial(a);
    den *= factorial(b - 1) * factorial(a - b + nn);
  }
  return make_rational(num, den);
}

std::pair<Rational, Rational> lagrange_identity_sides(const BinomialMatrixSpec& spec,
                                                      std::size_t alpha, Int k) {
  spec.validate();
  const std::size_t n = spec.size();
  if (alpha < 1 || alpha > n) throw std::invalid_argument("lagrange identity: alpha out of range");
  const Int top = spec.a + as_int(n) - 1;
  if (k < 1 || k > top + 1) throw std::invalid_argument("lagrange identity: k outside [1, A+n]");
  const Int al = as_int(alpha);

  Rational lhs = 0;
  for (std::size_t beta = 1; beta <= n; ++beta) {
    const Int bb = spec.b[beta - 1];
    lhs += make_rational(binomial(spec.a, bb - al) * node_numerator(spec.b, beta, k),
                         binomial(top, bb - 1) * node_denominator(spec.b, beta));
  }
  Rational rhs = make_rational(binomial(spec.a, k - al), binomial(top, k - 1));
  return {lhs, rhs};
}

}  // namespace lozenge
