#ifndef LIEDERIV_RATIONAL_HPP
#define LIEDERIV_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>

#include "liederiv/errors.hpp"

namespace liederiv {

namespace mp = boost::multiprecision;

/// Arbitrary-precision integer (no expression templates, plain value semantics).
using BigInt = mp::number<mp::cpp_int_backend<>, mp::et_off>;

/// Exact rational number, always canonical: gcd(|num|, den) = 1, den > 0.
using Rational = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

inline BigInt rat_num(const Rational& q) { return numerator(q); }
inline BigInt rat_den(const Rational& q) { return denominator(q); }

/// Parses "p", "-p" or "p/q". Throws ParseError on malformed input.
inline Rational parse_rational(const std::string& s) {
  try {
    if (s.empty()) throw ParseError("empty rational literal");
    return Rational(s);
  } catch (const std::exception&) {
    throw ParseError("malformed rational literal: '" + s + "'");
  }
}

/// Canonical text form: "p" or "p/q" with q > 1.
inline std::string rational_to_string(const Rational& q) { return q.str(); }

/// LaTeX form: integers as-is, fractions as (-)\frac{p}{q}.
inline std::string rational_to_latex(const Rational& q) {
  if (rat_den(q) == 1) return q.str();
  const BigInt n = rat_num(q);
  const std::string sign = n < 0 ? "-" : "";
  return sign + "\\frac{" + mp::abs(n).str() + "}{" + rat_den(q).str() + "}";
}

/// Rough size measure used for pivot selection in exact elimination.
inline std::size_t complexity(const Rational& q) {
  return mp::msb(mp::abs(rat_num(q)) + 1) + mp::msb(rat_den(q) + 1) + 1;
}

inline Rational make_zero_like(const Rational&) { return Rational(0); }
inline Rational make_one_like(const Rational&) { return Rational(1); }
inline bool is_zero(const Rational& q) { return q.is_zero(); }

} // namespace liederiv

#endif
