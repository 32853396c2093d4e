#ifndef LIEDERIV_RATIONAL_FUNCTION_HPP
#define LIEDERIV_RATIONAL_FUNCTION_HPP

#include <optional>
#include <span>
#include <string>

#include "liederiv/polynomial.hpp"

namespace liederiv {

/// Element of Q(x1..xk), stored as num/den in canonical form:
///  - den != 0 and gcd(num, den) = 1,
///  - den is integer-primitive with positive leading coefficient (so den == 1
///    exactly when the value is polynomial).
class RationalFunction {
public:
  explicit RationalFunction(Vars vars)
      : num_(Polynomial::zero(vars)), den_(Polynomial::constant(vars, Rational(1))) {}
  RationalFunction(Polynomial num, Polynomial den);
  /// Polynomial as a rational function (den = 1).
  explicit RationalFunction(Polynomial num);

  static RationalFunction zero(Vars vars) { return RationalFunction(std::move(vars)); }
  static RationalFunction one(Vars vars) {
    return RationalFunction(Polynomial::constant(std::move(vars), Rational(1)));
  }
  static RationalFunction constant(Vars vars, const Rational& c) {
    return RationalFunction(Polynomial::constant(std::move(vars), c));
  }
  static RationalFunction variable(Vars vars, std::size_t i) {
    return RationalFunction(Polynomial::variable(std::move(vars), i));
  }

  const Vars& vars() const { return num_.vars(); }
  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  std::optional<Rational> as_constant() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  /// Throws DivisionByZero when b = 0.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  RationalFunction operator*(const Rational& c) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  /// Exact formal partial derivative (quotient rule).
  RationalFunction derivative(std::size_t var) const;

  /// Evaluation at a rational point; throws DivisionByZero if den vanishes.
  Rational evaluate(std::span<const Rational> point) const;

  /// Substitutes one rational function per variable (into a possibly different
  /// variable context shared by all values).
  RationalFunction substitute(std::span<const RationalFunction> values) const;

  std::string to_string() const;
  std::string to_latex() const;

private:
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

inline RationalFunction operator*(const Rational& c, const RationalFunction& f) { return f * c; }

std::size_t complexity(const RationalFunction& f);
inline RationalFunction make_zero_like(const RationalFunction& f) {
  return RationalFunction::zero(f.vars());
}
inline RationalFunction make_one_like(const RationalFunction& f) {
  return RationalFunction::one(f.vars());
}
inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }

/// Multiplies a scalar of type S by an exact rational; the generic hook used
/// by structure-constant arithmetic.
inline Rational mul_rational(const Rational& s, const Rational& c) { return s * c; }
inline RationalFunction mul_rational(const RationalFunction& s, const Rational& c) { return s * c; }

} // namespace liederiv

#endif
