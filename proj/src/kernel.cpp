#include "lozenge/kernel.hpp"

#include <stdexcept>
#include <string>

namespace lozenge {

namespace {

Int as_int(std::size_t v) { return static_cast<Int>(v); }

void check_times(Int last, Int r, Int s) {
  for (Int t : {r, s}) {
    if (t < 1 || t > last) {
      throw std::invalid_argument("kernel time " + std::to_string(t) + " outside [1, " +
                                  std::to_string(last) + "]");
    }
  }
}

BinomialMatrixSpec lgv_parameters(const EnsembleSpec& spec) {
  return BinomialMatrixSpec{spec.steps, spec.ends};
}

}  // namespace

KernelContext::KernelContext(EnsembleSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  const auto params = lgv_parameters(spec_);
  try {
    params.validate();
    minv_ = closed_form_inverse(params);
  } catch (const std::invalid_argument&) {
    minv_ = inverse_by_elimination(to_exact(lgv_matrix(spec_)));
  }
}

Rational em_kernel(const KernelContext& ctx, Int r, Int x, Int s, Int y) {
  const EnsembleSpec& spec = ctx.spec();
  const Int N = spec.steps;
  check_times(N - 1, r, s);
  const std::size_t n = spec.n;

  std::vector<Integer> left(n + 1), right(n + 1);
  for (std::size_t i = 1; i <= n; ++i) left[i] = phi(r, N, x, spec.end(i));
  for (std::size_t j = 1; j <= n; ++j) right[j] = phi(0, s, spec.start(j), y);

  Rational k = -Rational(phi(r, s, x, y));
  for (std::size_t i = 1; i <= n; ++i) {
    if (left[i] == 0) continue;
    for (std::size_t j = 1; j <= n; ++j) {
      if (right[j] == 0) continue;
      k += Rational(left[i] * right[j]) * ctx.minv().at(i, j);
    }
  }
  return k;
}

Rational general_kernel(const EnsembleSpec& spec, Int r, Int x, Int s, Int y) {
  spec.validate();
  const Int N = spec.steps;
  check_times(N - 1, r, s);
  const std::size_t n = spec.n;
  const Int top = N + as_int(n) - 1;

  Rational k = -Rational(phi(r, s, x, y));
  for (std::size_t i = 1; i <= n; ++i) {
    const Int yi = spec.end(i);
    const Integer left = binomial(N - r, yi - x);
    if (left == 0) continue;
    Integer node_den = 1;
    for (std::size_t l = 1; l <= n; ++l)
      if (l != i) node_den *= Integer(yi - spec.end(l));

    for (std::size_t j = 1; j <= n; ++j) {
      const Int jj = as_int(j);
      const Integer right = binomial(s, y - jj);
      if (right == 0) continue;
      Integer inner = 0;
      for (Int kk = 1; kk <= jj; ++kk) {
        Integer term = binomial(top, kk - 1) * binomial(N - 1 + jj - kk, jj - kk);
        for (std::size_t l = 1; l <= n; ++l)
          if (l != i) term *= Integer(kk - spec.end(l));
        inner += sign_power(kk + jj) > 0 ? term : Integer(-term);
      }
      k += make_rational(left * right * inner, binomial(top, yi - 1) * node_den);
    }
  }
  return k;
}

Rational halfhex_kernel(std::size_t n, Int r, Int x, Int s, Int y) {
  if (n < 1) throw std::invalid_argument("halfhex_kernel: order must be >= 1");
  const Int nn = as_int(n);
  check_times(nn, r, s);

  Integer pow2 = 1;
  pow2 <<= static_cast<mp_bitcnt_t>(nn - 1);

  Rational k = -Rational(phi(r, s, x, y));
  for (Int i = 1; i <= nn; ++i) {
    const Integer left = binomial(nn + 1 - r, 2 * i - x);
    if (left == 0) continue;
    const Integer den = binomial(2 * nn, 2 * i - 1) * pow2 * factorial(i - 1) * factorial(nn - i);
    for (Int j = 1; j <= nn; ++j) {
      const Integer right = binomial(s, y - j);
      if (right == 0) continue;
      Integer inner = 0;
      for (Int kk = 1; kk <= j; ++kk) {
        Integer term = binomial(2 * nn, kk - 1) * binomial(nn + j - kk, j - kk);
        for (Int l = 1; l <= nn; ++l)
          if (l != i) term *= Integer(kk - 2 * l);
        inner += sign_power(kk + j + i + nn) > 0 ? term : Integer(-term);
      }
      k += make_rational(left * right * inner, den);
    }
  }
  return k;
}

ExactMatrix kernel_matrix(const KernelContext& ctx, std::span<const SpaceTimePoint> query) {
  validate_query(ctx.spec(), query);
  const std::size_t m = query.size();
  ExactMatrix km(m, m);
  for (std::size_t a = 1; a <= m; ++a)
    for (std::size_t b = 1; b <= m; ++b)
      km.at(a, b) = em_kernel(ctx, query[a - 1].t, query[a - 1].x, query[b - 1].t, query[b - 1].x);
  return km;
}

Rational correlation(const KernelContext& ctx, std::span<const SpaceTimePoint> query) {
  return bareiss_det(kernel_matrix(ctx, query));
}

}  // namespace lozenge
