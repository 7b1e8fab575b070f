#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "lozenge/exactnum.hpp"
#include "lozenge/matrix.hpp"

namespace lozenge {

/// Thrown when an enumeration would exceed its configuration cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// n nonintersecting walkers starting at 1..n, taking `steps` stay/step-right
/// moves and ending at `ends` (strictly increasing).
struct EnsembleSpec {
  std::size_t n = 0;
  Int steps = 0;
  std::vector<Int> ends;

  /// Order-n half-hexagon: N = n + 1, y_i = 2i.
  static EnsembleSpec halfhex(std::size_t n);

  /// Builds and validates a spec from explicit endpoints.
  static EnsembleSpec with_ends(Int steps, std::vector<Int> ends);

  Int start(std::size_t i) const { return static_cast<Int>(i); }
  Int end(std::size_t i) const { return ends.at(i - 1); }

  /// Throws std::invalid_argument unless n >= 1, steps >= 1, the endpoints are
  /// strictly increasing and every walker needs between 0 and N up-steps.
  void validate() const;

  friend bool operator==(const EnsembleSpec&, const EnsembleSpec&) = default;
};

/// One walker occupancy (t, x).
struct SpaceTimePoint {
  Int t = 0;
  Int x = 0;
  friend auto operator<=>(const SpaceTimePoint&, const SpaceTimePoint&) = default;
};

/// Full trajectory: slices[t][i-1] is the position of walker i at time t.
struct Configuration {
  std::vector<std::vector<Int>> slices;

  Int steps() const { return static_cast<Int>(slices.size()) - 1; }
  std::size_t walkers() const { return slices.empty() ? 0 : slices.front().size(); }
  Int at(Int t, std::size_t i) const { return slices.at(static_cast<std::size_t>(t)).at(i - 1); }
  bool occupied(Int t, Int x) const;

  friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

/// Empty string when `c` is a valid configuration of `spec`, otherwise a
/// description of the first violated invariant.
std::string check_configuration(const EnsembleSpec& spec, const Configuration& c);

/// Paths-per-slice text: N+1 lines of n space-separated integers.
std::string serialize(const Configuration& c);
Configuration parse_configuration(const std::string& text);

/// binomial(s - r, y - x) for r < s, else 0: the number of stay/step-right
/// paths from (r, x) to (s, y).
Integer phi(Int r, Int s, Int x, Int y);

/// LGV matrix [phi(0, N, i, y_j)].
IntegerMatrix lgv_matrix(const EnsembleSpec& spec);

/// Number of nonintersecting configurations, det of lgv_matrix.
Integer count_lgv(const EnsembleSpec& spec);

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// Calls `visit` on every configuration in lexicographic order of the
/// flattened position array. Throws CapExceeded when count_lgv exceeds `cap`.
void for_each_configuration(const EnsembleSpec& spec,
                            const std::function<void(const Configuration&)>& visit,
                            std::uint64_t cap = kDefaultEnumerationCap);

std::vector<Configuration> enumerate_configurations(const EnsembleSpec& spec,
                                                    std::uint64_t cap = kDefaultEnumerationCap);

/// Throws std::invalid_argument unless 1 <= t <= N-1 for every point and the
/// points are pairwise distinct.
void validate_query(const EnsembleSpec& spec, std::span<const SpaceTimePoint> query);

/// Enumerates the ensemble once and answers occupancy queries by counting.
class EmpiricalOracle {
 public:
  explicit EmpiricalOracle(const EnsembleSpec& spec,
                           std::uint64_t cap = kDefaultEnumerationCap);

  const EnsembleSpec& spec() const { return spec_; }
  std::size_t size() const { return occupancy_.size(); }

  /// Number of configurations with a walker at every query point.
  std::uint64_t hits(std::span<const SpaceTimePoint> query) const;

  /// hits / total, exact.
  Rational correlation(std::span<const SpaceTimePoint> query) const;

 private:
  std::size_t site_index(const SpaceTimePoint& p) const;

  EnsembleSpec spec_;
  Int x_lo_ = 0;
  Int x_hi_ = 0;
  // occupancy_[c] holds one flag per (t, x) site for configuration c.
  std::vector<std::vector<bool>> occupancy_;
};

/// (# configurations occupying every query point) / count_lgv(spec).
Rational empirical_correlation(const EnsembleSpec& spec, std::span<const SpaceTimePoint> query,
                               std::uint64_t cap = kDefaultEnumerationCap);

/// One admissible next slice and its exact conditional probability.
struct SliceTransition {
  std::vector<Int> next;
  Rational probability;
};

/// All nonintersecting next slices from `slice` at time t (0 <= t < N) with
/// probability proportional to det[phi(t+1, N, next_i, y_j)]. The
/// probabilities sum to exactly 1. Exponential in n; meant for small checks.
std::vector<SliceTransition> slice_transitions(const EnsembleSpec& spec, Int t,
                                               const std::vector<Int>& slice);

struct SampleResult {
  Configuration config;
  /// Product of the conditional weights used along the trajectory.
  Rational probability;
};

/// Exact uniform sample. Each slice is drawn from its conditional law given
/// the previous one, resolved walker by walker so that every decision is a
/// ratio of two LGV determinants. Same seed, same configuration.
/// Throws std::invalid_argument when the ensemble is empty.
SampleResult sample_with_probability(const EnsembleSpec& spec, std::uint64_t seed);

Configuration sample(const EnsembleSpec& spec, std::uint64_t seed);

}  // namespace lozenge
