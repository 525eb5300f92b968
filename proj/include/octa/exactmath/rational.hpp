#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace octa {

/// Arbitrary-precision exact rational, always kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in lowest terms (the mpq_class constructor does not reduce).
inline Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p", "p/q". Whitespace is not accepted.
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty rational literal");
  }
  auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational literal: " + std::string(text));
  }
  std::string n(num[0] == '+' ? num.substr(1) : num);
  Integer d(std::string(den), 10);
  if (d == 0) {
    throw std::invalid_argument("zero denominator: " + std::string(text));
  }
  Rational r(Integer(n, 10), d);
  r.canonicalize();
  return r;
}

/// "num/den" form; integers are still written with "/1".
inline std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Shortest form: "3", "-1/2".
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational rational_pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    return rational_pow(Rational(1) / base, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Deterministic interpolation nodes 0, 1, -1, 2, -2, ...
inline Rational interpolation_node(std::size_t index) {
  long half = static_cast<long>((index + 1) / 2);
  return Rational(index % 2 == 1 ? half : -half);
}

}  // namespace octa
