#include "lozenge/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "lozenge/kernel.hpp"
#include "lozenge/path_ensemble.hpp"

namespace lozenge {

namespace {

using Rng = std::mt19937_64;

Int uniform(Rng& rng, Int lo, Int hi) {
  return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

std::vector<Int> distinct_sample(Rng& rng, Int lo, Int hi, std::size_t count) {
  std::vector<Int> pool(static_cast<std::size_t>(hi - lo + 1));
  std::iota(pool.begin(), pool.end(), lo);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(count);
  return pool;
}

std::string join(const std::vector<Int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

// Runs `check` until it reports a failure; `check` returns an empty string on
// success and a description of the inputs otherwise.
SuiteResult run_suite(std::string name, std::size_t cases,
                      const std::function<std::string(std::size_t)>& check) {
  SuiteResult r{std::move(name), true, 0, {}};
  for (std::size_t c = 0; c < cases; ++c) {
    ++r.cases;
    if (std::string failure = check(c); !failure.empty()) {
      r.passed = false;
      r.counterexample = std::move(failure);
      break;
    }
  }
  return r;
}

BinomialMatrixSpec random_spec(Rng& rng, std::size_t n_max, Int a_max) {
  const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<Int>(n_max)));
  const Int a = uniform(rng, 0, a_max);
  return {a, distinct_sample(rng, 1, a + static_cast<Int>(n), n)};
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
  const std::size_t scale = std::max<std::size_t>(options.n_max, 1);
  Rng rng(options.seed);
  std::vector<SuiteResult> out;

  const std::size_t count_max = std::min<std::size_t>(30, 6 * scale);
  out.push_back(run_suite("tiling_count", count_max, [&](std::size_t c) -> std::string {
    const std::size_t n = c + 1;
    BinomialMatrixSpec spec{static_cast<Int>(n) + 1, {}};
    for (std::size_t j = 1; j <= n; ++j) spec.b.push_back(2 * static_cast<Int>(j));
    Integer expected = 1;
    expected <<= static_cast<mp_bitcnt_t>(n * (n + 1) / 2);
    const Integer det = bareiss_det(build_m(spec));
    if (det == expected && count_lgv(EnsembleSpec::halfhex(n)) == expected) return {};
    return "half-hexagon n=" + std::to_string(n) + ": det " + det.get_str();
  }));

  const std::size_t inv_n = std::min<std::size_t>(12, 2 * scale);
  out.push_back(run_suite("inverse_identity", 40 * scale, [&](std::size_t) -> std::string {
    const auto spec = random_spec(rng, inv_n, 20);
    const ExactMatrix m = to_exact(build_m(spec));
    const ExactMatrix inv = closed_form_inverse(spec, options.fault);
    const auto id = ExactMatrix::identity(spec.size());
    if (m * inv == id && inv * m == id) return {};
    return "A=" + std::to_string(spec.a) + " B=" + join(spec.b);
  }));

  const std::size_t lem_n = std::min<std::size_t>(5, scale);
  out.push_back(run_suite("lagrange_identity", 300 * scale, [&](std::size_t) -> std::string {
    const auto spec = random_spec(rng, lem_n, 8);
    const Int n = static_cast<Int>(spec.size());
    const auto alpha = static_cast<std::size_t>(uniform(rng, 1, n));
    const Int k = uniform(rng, 1, spec.a + n);
    auto [lhs, rhs] = lagrange_identity_sides(spec, alpha, k);
    if (lhs == rhs) return {};
    return "A=" + std::to_string(spec.a) + " B=" + join(spec.b) + " alpha=" +
           std::to_string(alpha) + " k=" + std::to_string(k);
  }));

  out.push_back(run_suite("det_formula", 40 * scale, [&](std::size_t) -> std::string {
    const Int a = uniform(rng, 1, 12);
    const auto n = static_cast<std::size_t>(uniform(rng, 1, std::min<Int>(5, static_cast<Int>(scale))));
    std::vector<Int> l(n);
    for (auto& v : l) v = uniform(rng, -static_cast<Int>(n), a - 1);
    if (det_binomial_l(a, l) == Rational(bareiss_det(binomial_l_matrix(a, l)))) return {};
    return "A=" + std::to_string(a) + " L=" + join(l);
  }));

  const std::size_t cof_n = std::min<std::size_t>(6, scale + 1);
  out.push_back(run_suite("cofactor_formula", 40 * scale, [&](std::size_t) -> std::string {
    const auto n = static_cast<std::size_t>(uniform(rng, 2, static_cast<Int>(cof_n)));
    const auto s = static_cast<std::size_t>(uniform(rng, 1, static_cast<Int>(n)));
    const Int a = uniform(rng, 0, 10);
    const auto bbar = distinct_sample(rng, 1, a + static_cast<Int>(n), n - 1);
    const Rational minor(cofactor_minor(n, s, a, bbar));
    if (minor == cofactor_prefactor(n, a, bbar) * cofactor_p(n, s, a, bbar)) return {};
    return "n=" + std::to_string(n) + " s=" + std::to_string(s) + " A=" + std::to_string(a) +
           " b=" + join(bbar);
  }));

  const std::size_t hh_max = std::min<std::size_t>(3, scale);
  std::vector<EnsembleSpec> ensembles;
  for (std::size_t n = 1; n <= hh_max; ++n) ensembles.push_back(EnsembleSpec::halfhex(n));
  ensembles.push_back(EnsembleSpec::with_ends(4, {3, 5}));
  std::size_t ens_cases = 0;
  SuiteResult kr{"kernel_vs_enumeration", true, 0, {}};
  for (const auto& spec : ensembles) {
    const KernelContext ctx(spec);
    const EmpiricalOracle oracle(spec);
    std::vector<SpaceTimePoint> sites;
    for (Int t = 1; t < spec.steps; ++t)
      for (Int x = 0; x <= spec.ends.back() + 1; ++x) sites.push_back({t, x});
    for (std::size_t a = 0; a < sites.size() && kr.passed; ++a) {
      for (std::size_t b = a; b < sites.size() && kr.passed; ++b) {
        std::vector<SpaceTimePoint> q{sites[a]};
        if (b != a) q.push_back(sites[b]);
        ++ens_cases;
        if (correlation(ctx, q) != oracle.correlation(q)) {
          kr.passed = false;
          std::ostringstream os;
          os << "N=" << spec.steps << " y=" << join(spec.ends) << " query=";
          for (const auto& p : q) os << "(" << p.t << "," << p.x << ")";
          kr.counterexample = os.str();
        }
      }
    }
  }
  kr.cases = ens_cases;
  out.push_back(kr);
  return out;
}

}  // namespace lozenge
