#include "liederiv/rational_function.hpp"

namespace liederiv {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  require_same_vars(num_.vars(), den_.vars());
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(num_.vars(), Rational(1))) {}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.vars(), Rational(1));
    return;
  }
  if (!den_.is_one()) {
    const Polynomial g = Polynomial::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = Polynomial::div_exact(num_, g);
      den_ = Polynomial::div_exact(den_, g);
    }
    Rational scale = den_.content();
    if (den_.leading_coefficient() < 0) scale = -scale;
    if (scale != 1) {
      const Rational inv = Rational(1) / scale;
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }
}

std::optional<Rational> RationalFunction::as_constant() const {
  if (!den_.is_one()) return std::nullopt;
  return num_.as_constant();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  require_same_vars(a.vars(), b.vars());
  if (a.den_.is_one() && b.den_.is_one()) return RationalFunction(a.num_ + b.num_);
  const Polynomial g = Polynomial::gcd(a.den_, b.den_);
  const Polynomial bq = g.is_one() ? b.den_ : Polynomial::div_exact(b.den_, g);
  const Polynomial aq = g.is_one() ? a.den_ : Polynomial::div_exact(a.den_, g);
  return RationalFunction(a.num_ * bq + b.num_ * aq, a.den_ * bq);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  require_same_vars(a.vars(), b.vars());
  if (a.den_.is_one() && b.den_.is_one()) return RationalFunction(a.num_ * b.num_);
  // Cross-cancel before multiplying to limit expression swell.
  const Polynomial g1 = Polynomial::gcd(a.num_, b.den_);
  const Polynomial g2 = Polynomial::gcd(b.num_, a.den_);
  const Polynomial n1 = g1.is_one() ? a.num_ : Polynomial::div_exact(a.num_, g1);
  const Polynomial d2 = g1.is_one() ? b.den_ : Polynomial::div_exact(b.den_, g1);
  const Polynomial n2 = g2.is_one() ? b.num_ : Polynomial::div_exact(b.num_, g2);
  const Polynomial d1 = g2.is_one() ? a.den_ : Polynomial::div_exact(a.den_, g2);
  return RationalFunction(n1 * n2, d1 * d2);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DivisionByZero("division by the zero function");
  return a * RationalFunction(b.den_, b.num_);
}

RationalFunction RationalFunction::operator*(const Rational& c) const {
  if (c.is_zero()) return RationalFunction::zero(vars());
  RationalFunction r = *this;
  r.num_ = r.num_ * c;
  return r;
}

RationalFunction RationalFunction::derivative(std::size_t var) const {
  if (den_.is_one()) return RationalFunction(num_.derivative(var));
  return RationalFunction(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
  const Rational d = den_.evaluate(point);
  if (d.is_zero()) throw DivisionByZero("denominator vanishes at the evaluation point");
  return num_.evaluate(point) / d;
}

RationalFunction RationalFunction::substitute(std::span<const RationalFunction> values) const {
  if (values.size() != vars().size()) throw InvalidInput("substitution arity mismatch");
  const Vars& target = values.empty() ? vars() : values[0].vars();
  auto eval_poly = [&](const Polynomial& p) {
    RationalFunction acc = RationalFunction::zero(target);
    for (const auto& [m, c] : p.terms()) {
      RationalFunction t = RationalFunction::constant(target, c);
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::uint32_t e = 0; e < m[i]; ++e) t = t * values[i];
      acc = acc + t;
    }
    return acc;
  };
  return eval_poly(num_) / eval_poly(den_);
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  const std::string n = num_.to_string();
  const std::string d = den_.to_string();
  std::string out = num_.term_count() > 1 ? "(" + n + ")" : n;
  out += "/";
  // A bare denominator is safe only when it reparses as one factor.
  out += d.find_first_of("*+- ") == std::string::npos ? d : "(" + d + ")";
  return out;
}

std::string RationalFunction::to_latex() const {
  if (den_.is_one()) return num_.to_latex();
  return "\\frac{" + num_.to_latex() + "}{" + den_.to_latex() + "}";
}

std::size_t complexity(const RationalFunction& f) {
  return complexity(f.num()) + complexity(f.den());
}

} // namespace liederiv
