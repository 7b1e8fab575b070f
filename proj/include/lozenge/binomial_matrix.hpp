#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lozenge/exactnum.hpp"
#include "lozenge/matrix.hpp"

namespace lozenge {

/// Parameters of the matrix M = [binomial(A, B_j - i)]_{i,j=1..n}.
struct BinomialMatrixSpec {
  Int a = 0;
  std::vector<Int> b;

  std::size_t size() const { return b.size(); }

  /// Throws std::invalid_argument unless A >= 0, the B_i are pairwise
  /// distinct and 1 <= B_i <= A + n. Outside that region the closed-form
  /// inverse divides by zero.
  void validate() const;
};

/// M with entry (i, j) = binomial(A, B_j - i).
IntegerMatrix build_m(const BinomialMatrixSpec& spec);

/// Deliberate term-level faults, used to check that the verification
/// harness catches a transcription error in the inverse.
enum class InverseFault { none, negate_first_term };

/// Closed-form inverse of M:
///
///   [M^-1]_{i,j} = binomial(A+n-1, B_i-1)^-1
///       * sum_{k=1}^{j} binomial(A+n-1, k-1) binomial(A-1+j-k, j-k) (-1)^{k+j}
///         * prod_{l != i} (k - B_l) / (B_i - B_l)
///
/// evaluated term by term. binomial(A-1+m, m) is taken as multichoose(A, m)
/// so that A = 0 is covered.
ExactMatrix closed_form_inverse(const BinomialMatrixSpec& spec,
                                InverseFault fault = InverseFault::none);

/// Product formula for det[binomial(A, L_i + j)]_{i,j=1..n}:
///
///   prod_{i<j} (L_i - L_j) prod_i (A+i-1)! / (prod_i (L_i+n)! prod_i (A-L_i-1)!)
///
/// Requires L_i + n >= 0 and A - L_i - 1 >= 0 for every i (std::domain_error
/// otherwise). Note the (L_i - L_j) ordering, the reverse of vandermonde().
Rational det_binomial_l(Int a, std::span<const Int> l);

/// The matrix [binomial(A, L_i + j)] whose determinant det_binomial_l gives.
IntegerMatrix binomial_l_matrix(Int a, std::span<const Int> l);

/// Closed form of the reduced cofactor P_{n,s}(A, b):
///
///   Delta(b) prod_{r=1}^{n-2} (A+r)^{n-1-r}
///     * sum_{j=1}^{s} (-1)^{j+1} binomial(A-1+s-j, s-j) binomial(n+A-1, j-1)
///       * prod_l (b_l - j)
///
/// where Delta is vandermonde(). This is the form that reproduces the
/// struck-minor determinant (see cofactor_minor) together with the known
/// P_{n,1} and P_{n,2} polynomials. Requires n >= 1, 1 <= s <= n, A >= 0 and
/// b.size() == n - 1; throws std::invalid_argument otherwise.
Rational cofactor_p(std::size_t n, std::size_t s, Int a, std::span<const Int> bbar);

/// det[binomial(A, b_j - i - [i >= s])]_{i,j=1..n-1}: the minor of M with row s
/// struck and the B-variables renamed to bbar.
Integer cofactor_minor(std::size_t n, std::size_t s, Int a, std::span<const Int> bbar);

/// prod_i A! / ((b_i - 1)! (A - b_i + n)!), the factor pulled out of every
/// column of the struck minor. Requires 1 <= b_i <= A + n.
Rational cofactor_prefactor(std::size_t n, Int a, std::span<const Int> bbar);

/// Both sides of the Lagrange-interpolation identity
///
///   sum_beta binomial(A+n-1, B_beta-1)^-1 binomial(A, B_beta-alpha)
///            prod_{i != beta} (k - B_i)/(B_beta - B_i)
///     = binomial(A+n-1, k-1)^-1 binomial(A, k-alpha)
///
/// with the interpolation node index alpha (1-based row of M). The caller
/// compares the two; k must lie in [1, A+n] for the right side to exist.
std::pair<Rational, Rational> lagrange_identity_sides(const BinomialMatrixSpec& spec,
                                                      std::size_t alpha, Int k);

}  // namespace lozenge
