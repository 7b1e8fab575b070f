#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lozenge {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Arbitrary-precision rational. GMP arithmetic keeps results in lowest
/// terms with a positive denominator; use make_rational() when building one
/// from a numerator/denominator pair.
using Rational = mpq_class;

/// Small lattice-scale integer used for formula parameters, positions and times.
using Int = std::int64_t;

/// num/den in canonical form. Throws std::domain_error when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Binomial coefficient with integer top m >= 0; zero when k is outside [0, m].
/// Throws std::domain_error for m < 0 (generalized binomials are not supported).
Integer binomial(Int m, Int k);

/// Number of multisets of size k drawn from a alphabet of size a, i.e.
/// binomial(a + k - 1, k) with multichoose(0, 0) = 1. Zero for k < 0.
/// Throws std::domain_error for a < 0.
Integer multichoose(Int a, Int k);

/// m!. Throws std::domain_error for m < 0.
Integer factorial(Int m);

/// prod_{i<j} (values[j] - values[i]). Empty and singleton inputs give 1.
Integer vandermonde(std::span<const Int> values);

/// (-1)^e.
inline int sign_power(Int e) { return (e % 2 == 0) ? 1 : -1; }

/// "p/q" for proper fractions, "p" for integers (GMP canonical text form).
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Inverse of to_string(Rational). Accepts "p", "p/q" and surrounding blanks;
/// throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Rounded decimal rendering with `digits` fractional digits, display only.
std::string to_decimal(const Rational& q, int digits = 12);

}  // namespace lozenge
