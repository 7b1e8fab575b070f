#include "lozenge/path_ensemble.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lozenge {

namespace {

Int as_int(std::size_t v) { return static_cast<Int>(v); }

// Walker i (1-based) sitting at x at time t can still reach its endpoint.
bool can_finish(const EnsembleSpec& spec, std::size_t i, Int t, Int x) {
  const Int y = spec.end(i);
  return x <= y && y - x <= spec.steps - t;
}

// Rows of binomial(remaining, y_j - x_i), the LGV matrix from a slice.
IntegerMatrix completion_matrix(const EnsembleSpec& spec, Int remaining,
                                const std::vector<Int>& slice) {
  const std::size_t n = spec.n;
  IntegerMatrix m(n, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      m.at(i, j) = binomial(remaining, spec.end(j) - slice[i - 1]);
  return m;
}

// Visits admissible next slices in lexicographic order.
void next_slices(const EnsembleSpec& spec, Int t, const std::vector<Int>& slice,
                 std::vector<Int>& next, std::size_t i,
                 const std::function<void(const std::vector<Int>&)>& visit) {
  if (i > spec.n) {
    visit(next);
    return;
  }
  for (Int d = 0; d <= 1; ++d) {
    const Int x = slice[i - 1] + d;
    if (i > 1 && x <= next[i - 2]) continue;
    if (!can_finish(spec, i, t + 1, x)) continue;
    next[i - 1] = x;
    next_slices(spec, t, slice, next, i + 1, visit);
  }
}

}  // namespace

EnsembleSpec EnsembleSpec::halfhex(std::size_t n) {
  EnsembleSpec spec;
  spec.n = n;
  spec.steps = as_int(n) + 1;
  for (std::size_t i = 1; i <= n; ++i) spec.ends.push_back(2 * as_int(i));
  spec.validate();
  return spec;
}

EnsembleSpec EnsembleSpec::with_ends(Int steps, std::vector<Int> ends) {
  EnsembleSpec spec;
  spec.n = ends.size();
  spec.steps = steps;
  spec.ends = std::move(ends);
  spec.validate();
  return spec;
}

void EnsembleSpec::validate() const {
  if (n < 1) throw std::invalid_argument("ensemble needs at least one walker");
  if (ends.size() != n) throw std::invalid_argument("ensemble: expected one endpoint per walker");
  if (steps < 1) throw std::invalid_argument("ensemble: number of steps must be >= 1");
  for (std::size_t i = 1; i <= n; ++i) {
    if (i > 1 && end(i) <= end(i - 1)) {
      throw std::invalid_argument("ensemble: endpoints must be strictly increasing");
    }
    const Int rise = end(i) - start(i);
    if (rise < 0 || rise > steps) {
      throw std::invalid_argument("ensemble: walker " + std::to_string(i) + " cannot go from " +
                                  std::to_string(start(i)) + " to " + std::to_string(end(i)) +
                                  " in " + std::to_string(steps) + " steps");
    }
  }
}

bool Configuration::occupied(Int t, Int x) const {
  if (t < 0 || t > steps()) return false;
  const auto& s = slices[static_cast<std::size_t>(t)];
  return std::binary_search(s.begin(), s.end(), x);
}

std::string check_configuration(const EnsembleSpec& spec, const Configuration& c) {
  if (c.steps() != spec.steps) return "wrong number of time slices";
  for (Int t = 0; t <= spec.steps; ++t) {
    const auto& s = c.slices[static_cast<std::size_t>(t)];
    if (s.size() != spec.n) return "slice " + std::to_string(t) + " has the wrong walker count";
    for (std::size_t i = 1; i < s.size(); ++i)
      if (s[i] <= s[i - 1]) return "slice " + std::to_string(t) + " is not strictly increasing";
    if (t > 0) {
      const auto& p = c.slices[static_cast<std::size_t>(t - 1)];
      for (std::size_t i = 0; i < s.size(); ++i) {
        const Int d = s[i] - p[i];
        if (d != 0 && d != 1) return "illegal step at time " + std::to_string(t);
      }
    }
  }
  for (std::size_t i = 1; i <= spec.n; ++i) {
    if (c.at(0, i) != spec.start(i)) return "wrong start position";
    if (c.at(spec.steps, i) != spec.end(i)) return "wrong end position";
  }
  return {};
}

std::string serialize(const Configuration& c) {
  std::ostringstream out;
  for (const auto& slice : c.slices) {
    for (std::size_t i = 0; i < slice.size(); ++i) out << (i ? " " : "") << slice[i];
    out << '\n';
  }
  return out.str();
}

Configuration parse_configuration(const std::string& text) {
  Configuration c;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    std::vector<Int> slice;
    Int v;
    while (row >> v) slice.push_back(v);
    if (!row.eof()) throw std::invalid_argument("configuration: non-integer token in '" + line + "'");
    if (!c.slices.empty() && slice.size() != c.slices.front().size()) {
      throw std::invalid_argument("configuration: ragged rows");
    }
    c.slices.push_back(std::move(slice));
  }
  if (c.slices.empty()) throw std::invalid_argument("configuration: no rows");
  return c;
}

Integer phi(Int r, Int s, Int x, Int y) {
  if (r >= s) return 0;
  return binomial(s - r, y - x);
}

IntegerMatrix lgv_matrix(const EnsembleSpec& spec) {
  IntegerMatrix m(spec.n, spec.n);
  for (std::size_t i = 1; i <= spec.n; ++i)
    for (std::size_t j = 1; j <= spec.n; ++j)
      m.at(i, j) = phi(0, spec.steps, spec.start(i), spec.end(j));
  return m;
}

Integer count_lgv(const EnsembleSpec& spec) {
  spec.validate();
  return bareiss_det(lgv_matrix(spec));
}

void for_each_configuration(const EnsembleSpec& spec,
                            const std::function<void(const Configuration&)>& visit,
                            std::uint64_t cap) {
  const Integer count = count_lgv(spec);
  if (count > Integer(static_cast<unsigned long>(cap))) {
    throw CapExceeded("ensemble has " + count.get_str() + " configurations, cap is " +
                      std::to_string(cap));
  }
  Configuration c;
  c.slices.assign(static_cast<std::size_t>(spec.steps) + 1, std::vector<Int>(spec.n));
  for (std::size_t i = 1; i <= spec.n; ++i) c.slices[0][i - 1] = spec.start(i);

  std::function<void(Int)> grow = [&](Int t) {
    if (t == spec.steps) {
      visit(c);
      return;
    }
    std::vector<Int> next(spec.n);
    next_slices(spec, t, c.slices[static_cast<std::size_t>(t)], next, 1,
                [&](const std::vector<Int>& s) {
                  c.slices[static_cast<std::size_t>(t + 1)] = s;
                  grow(t + 1);
                });
  };
  grow(0);
}

std::vector<Configuration> enumerate_configurations(const EnsembleSpec& spec, std::uint64_t cap) {
  std::vector<Configuration> out;
  for_each_configuration(spec, [&](const Configuration& c) { out.push_back(c); }, cap);
  return out;
}

void validate_query(const EnsembleSpec& spec, std::span<const SpaceTimePoint> query) {
  std::set<SpaceTimePoint> seen;
  for (const auto& p : query) {
    if (p.t < 1 || p.t > spec.steps - 1) {
      throw std::invalid_argument("query time " + std::to_string(p.t) + " outside [1, " +
                                  std::to_string(spec.steps - 1) + "]");
    }
    if (!seen.insert(p).second) {
      throw std::invalid_argument("duplicate query point (" + std::to_string(p.t) + ", " +
                                  std::to_string(p.x) + ")");
    }
  }
}

EmpiricalOracle::EmpiricalOracle(const EnsembleSpec& spec, std::uint64_t cap)
    : spec_(spec), x_lo_(1), x_hi_(spec.ends.back()) {
  const Int times = spec.steps + 1;
  const std::size_t sites = static_cast<std::size_t>(times * (x_hi_ - x_lo_ + 1));
  for_each_configuration(
      spec,
      [&](const Configuration& c) {
        std::vector<bool> occ(sites, false);
        for (Int t = 0; t < times; ++t)
          for (Int x : c.slices[static_cast<std::size_t>(t)]) occ[site_index({t, x})] = true;
        occupancy_.push_back(std::move(occ));
      },
      cap);
}

std::size_t EmpiricalOracle::site_index(const SpaceTimePoint& p) const {
  return static_cast<std::size_t>(p.t * (x_hi_ - x_lo_ + 1) + (p.x - x_lo_));
}

std::uint64_t EmpiricalOracle::hits(std::span<const SpaceTimePoint> query) const {
  validate_query(spec_, query);
  std::vector<std::size_t> idx;
  for (const auto& p : query) {
    if (p.x < x_lo_ || p.x > x_hi_) return 0;
    idx.push_back(site_index(p));
  }
  std::uint64_t count = 0;
  for (const auto& occ : occupancy_) {
    bool all = true;
    for (std::size_t k : idx) {
      if (!occ[k]) {
        all = false;
        break;
      }
    }
    if (all) ++count;
  }
  return count;
}

Rational EmpiricalOracle::correlation(std::span<const SpaceTimePoint> query) const {
  return make_rational(Integer(static_cast<unsigned long>(hits(query))),
                       Integer(static_cast<unsigned long>(occupancy_.size())));
}

Rational empirical_correlation(const EnsembleSpec& spec, std::span<const SpaceTimePoint> query,
                               std::uint64_t cap) {
  validate_query(spec, query);
  unsigned long hits = 0, total = 0;
  for_each_configuration(
      spec,
      [&](const Configuration& c) {
        ++total;
        if (std::all_of(query.begin(), query.end(),
                        [&](const SpaceTimePoint& p) { return c.occupied(p.t, p.x); })) {
          ++hits;
        }
      },
      cap);
  return make_rational(Integer(hits), Integer(total));
}

std::vector<SliceTransition> slice_transitions(const EnsembleSpec& spec, Int t,
                                               const std::vector<Int>& slice) {
  spec.validate();
  if (t < 0 || t >= spec.steps) throw std::invalid_argument("slice_transitions: time out of range");
  if (slice.size() != spec.n) throw std::invalid_argument("slice_transitions: wrong slice size");
  const Int remaining = spec.steps - t - 1;
  const Integer total = bareiss_det(completion_matrix(spec, remaining + 1, slice));
  if (total == 0) throw std::invalid_argument("slice_transitions: slice has no completion");

  std::vector<SliceTransition> out;
  std::vector<Int> next(spec.n);
  Rational sum = 0;
  next_slices(spec, t, slice, next, 1, [&](const std::vector<Int>& s) {
    Rational p = make_rational(bareiss_det(completion_matrix(spec, remaining, s)), total);
    sum += p;
    out.push_back({s, p});
  });
  if (sum != 1) throw std::logic_error("slice transition weights do not sum to 1");
  return out;
}

SampleResult sample_with_probability(const EnsembleSpec& spec, std::uint64_t seed) {
  spec.validate();
  const std::size_t n = spec.n;
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(static_cast<unsigned long>(seed));

  SampleResult result;
  result.probability = 1;
  auto& slices = result.config.slices;
  slices.assign(static_cast<std::size_t>(spec.steps) + 1, std::vector<Int>(n));
  for (std::size_t i = 1; i <= n; ++i) slices[0][i - 1] = spec.start(i);

  for (Int t = 0; t < spec.steps; ++t) {
    const auto& cur = slices[static_cast<std::size_t>(t)];
    auto& nxt = slices[static_cast<std::size_t>(t + 1)];
    const Int remaining = spec.steps - t - 1;

    // Rows of decided walkers count completions from their new position over
    // `remaining` steps; undecided rows use remaining + 1 steps from the old
    // position, which is the sum of both choices. Colliding choices produce
    // two equal rows and hence zero weight.
    IntegerMatrix m(n, n);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        m.at(i, j) = binomial(remaining + 1, spec.end(j) - cur[i - 1]);
    Integer parent = bareiss_det(m);
    if (parent <= 0) throw std::invalid_argument("sample: ensemble has no configurations");

    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t j = 1; j <= n; ++j)
        m.at(k, j) = binomial(remaining, spec.end(j) - cur[k - 1]);
      const Integer stay = bareiss_det(m);
      const Integer jump = parent - stay;
      if (stay < 0 || jump < 0) throw std::logic_error("sample: negative transition weight");

      const Integer u = rng.get_z_range(parent);
      const bool up = u >= stay;
      const Integer& chosen = up ? jump : stay;
      result.probability *= make_rational(chosen, parent);
      nxt[k - 1] = cur[k - 1] + (up ? 1 : 0);
      if (up) {
        for (std::size_t j = 1; j <= n; ++j)
          m.at(k, j) = binomial(remaining, spec.end(j) - nxt[k - 1]);
      }
      parent = chosen;
    }
  }
  return result;
}

Configuration sample(const EnsembleSpec& spec, std::uint64_t seed) {
  return sample_with_probability(spec, seed).config;
}

}  // namespace lozenge
