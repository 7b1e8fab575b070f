#include "lozenge/exactnum.hpp"

#include <stdexcept>

namespace lozenge {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer binomial(Int m, Int k) {
  if (m < 0) {
    throw std::domain_error("binomial: negative top " + std::to_string(m) +
                            " is not supported");
  }
  if (k < 0 || k > m) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m),
               static_cast<unsigned long>(k));
  return r;
}

Integer multichoose(Int a, Int k) {
  if (a < 0) {
    throw std::domain_error("multichoose: negative alphabet size");
  }
  if (k < 0) return 0;
  if (a == 0) return k == 0 ? 1 : 0;
  return binomial(a + k - 1, k);
}

Integer factorial(Int m) {
  if (m < 0) {
    throw std::domain_error("factorial: negative argument " + std::to_string(m));
  }
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

Integer vandermonde(std::span<const Int> values) {
  Integer p = 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      p *= Integer(static_cast<long>(values[j] - values[i]));
    }
  }
  return p;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  auto last = text.find_last_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    throw std::invalid_argument("empty rational literal");
  }
  std::string body(text.substr(first, last - first + 1));
  auto slash = body.find('/');
  auto parse_int = [&](const std::string& s) {
    if (s.empty()) throw std::invalid_argument("malformed rational: " + body);
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size() ||
        s.find_first_not_of("0123456789", start) != std::string::npos) {
      throw std::invalid_argument("malformed rational: " + body);
    }
    return Integer(s[0] == '+' ? s.substr(1) : s, 10);
  };
  if (slash == std::string::npos) return Rational(parse_int(body));
  Integer den = parse_int(body.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + body);
  return make_rational(parse_int(body.substr(0, slash)), den);
}

std::string to_decimal(const Rational& q, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // round half away from zero
  Integer num = abs(q.get_num()) * scale * 2 + q.get_den();
  Integer den = q.get_den() * 2;
  Integer scaled = num / den;
  Integer whole = scaled / scale;
  Integer frac = scaled % scale;
  std::string out = (q < 0 && scaled != 0) ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

}  // namespace lozenge
