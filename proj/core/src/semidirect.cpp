#include "liederiv/semidirect.hpp"

namespace liederiv {

TensorElement::TensorElement(AlgebraPtr algebra, Vars vars)
    : algebra_(std::move(algebra)), vars_(std::move(vars)),
      coeffs_(algebra_->dim(), RationalFunction::zero(vars_)) {}

TensorElement::TensorElement(AlgebraPtr algebra, Vars vars, std::vector<RationalFunction> coeffs)
    : algebra_(std::move(algebra)), vars_(std::move(vars)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != algebra_->dim())
    throw ShapeMismatch("tensor coefficient count != algebra dimension");
  for (const auto& c : coeffs_) require_same_vars(c.vars(), vars_);
}

bool TensorElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

TensorElement TensorElement::operator-() const {
  TensorElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TensorElement operator+(const TensorElement& a, const TensorElement& b) {
  if (*a.algebra_ != *b.algebra_) throw AlgebraMismatch();
  require_same_vars(a.vars_, b.vars_);
  TensorElement r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  return r;
}

TensorElement operator-(const TensorElement& a, const TensorElement& b) { return a + (-b); }

TensorElement operator*(const RationalFunction& r, const TensorElement& t) {
  require_same_vars(r.vars(), t.vars_);
  TensorElement out = t;
  for (auto& c : out.coeffs_) c = r * c;
  return out;
}

TensorElement TensorElement::operator*(const Rational& c) const {
  TensorElement out = *this;
  for (auto& x : out.coeffs_) x = x * c;
  return out;
}

TensorElement bracket(const TensorElement& a, const TensorElement& b) {
  if (*a.algebra() != *b.algebra()) throw AlgebraMismatch();
  require_same_vars(a.vars(), b.vars());
  LieElement<RationalFunction> ea{a.algebra(), a.coeffs()};
  LieElement<RationalFunction> eb{b.algebra(), b.coeffs()};
  return TensorElement(a.algebra(), a.vars(), bracket(ea, eb).coeffs);
}

SemidirectElement::SemidirectElement(VectorField vf, TensorElement tensor)
    : vf_(std::move(vf)), tensor_(std::move(tensor)) {
  require_same_vars(vf_.vars(), tensor_.vars());
}

SemidirectElement::SemidirectElement(AlgebraPtr algebra, VectorField vf)
    : vf_(std::move(vf)), tensor_(std::move(algebra), vf_.vars()) {}

SemidirectElement::SemidirectElement(TensorElement tensor)
    : vf_(tensor.vars()), tensor_(std::move(tensor)) {}

SemidirectElement SemidirectElement::operator-() const {
  return SemidirectElement(-vf_, -tensor_);
}

SemidirectElement operator+(const SemidirectElement& a, const SemidirectElement& b) {
  return SemidirectElement(a.vf_ + b.vf_, a.tensor_ + b.tensor_);
}

SemidirectElement operator-(const SemidirectElement& a, const SemidirectElement& b) {
  return a + (-b);
}

SemidirectElement operator*(const RationalFunction& r, const SemidirectElement& d) {
  return SemidirectElement(r * d.vf_, r * d.tensor_);
}

SemidirectElement SemidirectElement::operator*(const Rational& c) const {
  const RationalFunction r = RationalFunction::constant(vars(), c);
  return r * (*this);
}

SemidirectElement bracket(const SemidirectElement& a, const SemidirectElement& b) {
  if (*a.algebra() != *b.algebra()) throw AlgebraMismatch();
  require_same_vars(a.vars(), b.vars());
  VectorField vf = bracket(a.vf(), b.vf());
  const std::size_t m = a.algebra()->dim();
  std::vector<RationalFunction> t;
  t.reserve(m);
  const TensorElement lie = bracket(a.tensor(), b.tensor());
  for (std::size_t j = 0; j < m; ++j) {
    RationalFunction c = lie.coeff(j);
    if (!a.vf().is_zero()) c += a.vf().apply(b.tensor().coeff(j));
    if (!b.vf().is_zero()) c -= b.vf().apply(a.tensor().coeff(j));
    t.push_back(std::move(c));
  }
  return SemidirectElement(std::move(vf), TensorElement(a.algebra(), a.vars(), std::move(t)));
}

std::string TensorElement::to_string() const {
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const bool neg = coeffs_[i].num().leading_coefficient() < 0;
    const RationalFunction mag = neg ? -coeffs_[i] : coeffs_[i];
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    std::string ms = mag.to_string();
    if (ms.find_first_of("+-/ ") != std::string::npos) ms = "(" + ms + ")";
    out += ms + "*(" + algebra_->basis_name(i) + ")";
  }
  return out.empty() ? "0" : out;
}

std::string TensorElement::to_latex() const {
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const bool neg = coeffs_[i].num().leading_coefficient() < 0;
    const RationalFunction mag = neg ? -coeffs_[i] : coeffs_[i];
    out += first ? (neg ? "-" : "") : (neg ? "-" : "+");
    first = false;
    std::string ms = mag.to_latex();
    if (mag.is_polynomial() && mag.num().term_count() > 1) ms = "\\left(" + ms + "\\right)";
    out += ms + " \\otimes " + algebra_->basis_name(i);
  }
  return out.empty() ? "0" : out;
}

std::string SemidirectElement::to_string() const {
  if (is_zero()) return "0";
  if (vf_.is_zero()) return tensor_.to_string();
  if (tensor_.is_zero()) return vf_.to_string();
  const std::string t = tensor_.to_string();
  if (t[0] == '-') return vf_.to_string() + " - " + t.substr(1);
  return vf_.to_string() + " + " + t;
}

std::string SemidirectElement::to_latex() const {
  if (is_zero()) return "0";
  if (vf_.is_zero()) return tensor_.to_latex();
  if (tensor_.is_zero()) return vf_.to_latex();
  const std::string t = tensor_.to_latex();
  if (t[0] == '-') return vf_.to_latex() + "-" + t.substr(1);
  return vf_.to_latex() + "+" + t;
}

Polynomial jet_reduce(const Polynomial& p, int n) {
  if (n < 0) throw InvalidInput("jet truncation degree must be >= 0");
  return p.truncated(n);
}

namespace {

int coefficient_degree_bound(const SemidirectElement& a) {
  int d = 0;
  auto update = [&](const RationalFunction& f) {
    d = std::max(d, f.num().total_degree().value_or(0));
    d = std::max(d, f.den().total_degree().value_or(0));
  };
  for (const auto& c : a.vf().coeffs()) update(c);
  for (const auto& c : a.tensor().coeffs()) update(c);
  return d;
}

SemidirectElement jet_truncate(const SemidirectElement& e, int n) {
  auto cut = [&](const std::vector<RationalFunction>& cs) {
    std::vector<RationalFunction> out;
    out.reserve(cs.size());
    for (const auto& c : cs) {
      if (!c.is_polynomial())
        throw InvalidInput("jet mode requires polynomial coefficients, got " + c.to_string());
      out.push_back(RationalFunction(jet_reduce(c.num(), n)));
    }
    return out;
  };
  return SemidirectElement(VectorField(e.vars(), cut(e.vf().coeffs())),
                           TensorElement(e.algebra(), e.vars(), cut(e.tensor().coeffs())));
}

} // namespace

SemidirectElement exp_ad(const TensorElement& w, const SemidirectElement& a,
                         const JetContext& ctx, std::optional<std::size_t> max_steps) {
  if (*w.algebra() != *a.algebra()) throw AlgebraMismatch();
  require_same_vars(w.vars(), a.vars());

  if (!ctx.is_exact()) {
    for (const auto& c : w.coeffs()) {
      if (c.is_zero()) continue;
      if (!c.is_polynomial()) throw WNotInJ("w coefficient is not a polynomial: " + c.to_string());
      int min_deg = *c.num().total_degree();
      for (const auto& [mono, coef] : c.num().terms()) {
        int d = 0;
        for (auto e : mono) d += static_cast<int>(e);
        min_deg = std::min(min_deg, d);
      }
      if (min_deg < 1) throw WNotInJ("w coefficient has a constant term: " + c.to_string());
    }
  }

  const std::size_t m = a.algebra()->dim();
  std::size_t default_steps = m * (1 + static_cast<std::size_t>(coefficient_degree_bound(a)));
  if (!ctx.is_exact())
    // truncation kills every term once its J-valuation exceeds N; the
    // valuation grows by at least one per step after the first
    default_steps = std::max(default_steps, static_cast<std::size_t>(*ctx.degree) + 2);
  const std::size_t steps = max_steps.value_or(default_steps);

  const SemidirectElement w_elem(w);
  SemidirectElement term = ctx.is_exact() ? a : jet_truncate(a, *ctx.degree);
  SemidirectElement sum = term;
  BigInt factorial(1);
  for (std::size_t t = 1; !term.is_zero(); ++t) {
    term = bracket(w_elem, term);
    if (!ctx.is_exact()) term = jet_truncate(term, *ctx.degree);
    if (term.is_zero()) break;
    if (t > steps)
      throw NotNilpotent("exp_ad did not terminate within " + std::to_string(steps) +
                         " steps; ad w is not nilpotent on the orbit (override with max_steps)");
    factorial *= t;
    sum = sum + term * (Rational(1) / Rational(factorial));
  }
  return sum;
}

} // namespace liederiv
