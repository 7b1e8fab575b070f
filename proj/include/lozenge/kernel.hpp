#pragma once

#include <span>
#include <vector>

#include "lozenge/binomial_matrix.hpp"
#include "lozenge/exactnum.hpp"
#include "lozenge/matrix.hpp"
#include "lozenge/path_ensemble.hpp"

namespace lozenge {

/// An ensemble together with the inverse of its LGV matrix
/// M = [binomial(N, y_j - i)]. Immutable after construction.
class KernelContext {
 public:
  /// Uses the closed-form inverse (A = N, B = y). The validity region
  /// 1 <= y_i <= N + n always contains a feasible ensemble; the elimination
  /// inverse is kept as a fallback for specs that fail validate().
  explicit KernelContext(EnsembleSpec spec);

  const EnsembleSpec& spec() const { return spec_; }
  const ExactMatrix& minv() const { return minv_; }

 private:
  EnsembleSpec spec_;
  ExactMatrix minv_;
};

/// K(r,x; s,y) = -phi(r,s,x,y)
///               + sum_{i,j} phi(r,N,x,y_i) [M^-1]_{i,j} phi(0,s,j,y)
/// Throws std::invalid_argument unless r, s lie in [1, N-1].
Rational em_kernel(const KernelContext& ctx, Int r, Int x, Int s, Int y);

/// The same kernel with the closed-form inverse substituted and expanded:
///
///   -phi(r,s,x,y) + sum_{i,j} binomial(N-r, y_i-x) binomial(s, y-j) / binomial(N+n-1, y_i-1)
///       * sum_{k=1}^{j} binomial(N+n-1, k-1) binomial(N-1+j-k, j-k) (-1)^{k+j}
///         * prod_{l != i} (k - y_l)/(y_i - y_l)
Rational general_kernel(const EnsembleSpec& spec, Int r, Int x, Int s, Int y);

/// Half-hexagon kernel (N = n+1, y_i = 2i) with the node product written out:
///
///   -phi(r,s,x,y) + sum_{i,j} binomial(n+1-r, 2i-x) binomial(s, y-j) / binomial(2n, 2i-1)
///       * sum_{k=1}^{j} binomial(2n, k-1) binomial(n+j-k, j-k)
///         * (-1)^{k+j+i+n} / (2^{n-1} (i-1)! (n-i)!) * prod_{l != i} (k - 2l)
///
/// The 2^{n-1} comes from prod_{l != i} (2i - 2l) = (-1)^{n-i} 2^{n-1} (i-1)! (n-i)!.
/// Times r, s must lie in [1, n].
Rational halfhex_kernel(std::size_t n, Int r, Int x, Int s, Int y);

/// Probability that every query point is occupied: det[K(p_a; p_b)].
/// The empty query gives 1. Throws std::invalid_argument on duplicate points
/// or boundary times.
Rational correlation(const KernelContext& ctx, std::span<const SpaceTimePoint> query);

/// The m x m kernel matrix behind correlation().
ExactMatrix kernel_matrix(const KernelContext& ctx, std::span<const SpaceTimePoint> query);

}  // namespace lozenge
