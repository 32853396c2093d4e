#ifndef LIEDERIV_SEMIDIRECT_HPP
#define LIEDERIV_SEMIDIRECT_HPP

#include <optional>
#include <string>
#include <vector>

#include "liederiv/lie_algebra.hpp"
#include "liederiv/vector_field.hpp"

namespace liederiv {

/// Element of R (x) L with R = Q(x1..xk): one rational-function coefficient
/// per basis element of the algebra.
class TensorElement {
public:
  TensorElement(AlgebraPtr algebra, Vars vars);
  TensorElement(AlgebraPtr algebra, Vars vars, std::vector<RationalFunction> coeffs);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Vars& vars() const { return vars_; }
  const std::vector<RationalFunction>& coeffs() const { return coeffs_; }
  const RationalFunction& coeff(std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const;

  TensorElement operator-() const;
  friend TensorElement operator+(const TensorElement& a, const TensorElement& b);
  friend TensorElement operator-(const TensorElement& a, const TensorElement& b);
  friend TensorElement operator*(const RationalFunction& r, const TensorElement& t);
  TensorElement operator*(const Rational& c) const;

  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return *a.algebra_ == *b.algebra_ && a.vars_ == b.vars_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

  std::string to_string() const;
  std::string to_latex() const;

private:
  AlgebraPtr algebra_;
  Vars vars_;
  std::vector<RationalFunction> coeffs_;
};

/// Bracket in R (x) L (structure constants, bilinear over R).
TensorElement bracket(const TensorElement& a, const TensorElement& b);

/// Element D + t of the semidirect product M |x (R (x) L): vector fields
/// acting on the coefficient ring of the tensor part.
class SemidirectElement {
public:
  SemidirectElement(VectorField vf, TensorElement tensor);
  /// Pure vector field (zero tensor part).
  SemidirectElement(AlgebraPtr algebra, VectorField vf);
  /// Pure tensor (zero vector-field part).
  explicit SemidirectElement(TensorElement tensor);

  const VectorField& vf() const { return vf_; }
  const TensorElement& tensor() const { return tensor_; }
  const AlgebraPtr& algebra() const { return tensor_.algebra(); }
  const Vars& vars() const { return vf_.vars(); }

  bool is_zero() const { return vf_.is_zero() && tensor_.is_zero(); }

  SemidirectElement operator-() const;
  friend SemidirectElement operator+(const SemidirectElement& a, const SemidirectElement& b);
  friend SemidirectElement operator-(const SemidirectElement& a, const SemidirectElement& b);
  friend SemidirectElement operator*(const RationalFunction& r, const SemidirectElement& d);
  SemidirectElement operator*(const Rational& c) const;

  friend bool operator==(const SemidirectElement& a, const SemidirectElement& b) {
    return a.vf_ == b.vf_ && a.tensor_ == b.tensor_;
  }
  friend bool operator!=(const SemidirectElement& a, const SemidirectElement& b) { return !(a == b); }

  /// Action on the scalar ring: (D + t)(s) = D(s).
  RationalFunction apply(const RationalFunction& s) const { return vf_.apply(s); }

  std::string to_string() const;
  std::string to_latex() const;

private:
  VectorField vf_;
  TensorElement tensor_;
};

/// Semidirect bracket: [D1 + t1, D2 + t2] = [D1,D2] + D1'(t2) - D2'(t1) +
/// [t1,t2], with D' acting coefficientwise on tensors.
SemidirectElement bracket(const SemidirectElement& a, const SemidirectElement& b);

/// Truncation context: exact computation, or reduction modulo J^(N+1) with
/// J = (x1..xk) at every step.
struct JetContext {
  std::optional<int> degree; // nullopt = exact

  static JetContext exact() { return JetContext{std::nullopt}; }
  static JetContext jet(int n) { return JetContext{n}; }
  bool is_exact() const { return !degree.has_value(); }
};

/// Drops every monomial of total degree > n.
Polynomial jet_reduce(const Polynomial& p, int n);

/// exp(ad w) applied to a: sum of (ad w)^t(a)/t!, ad w(u) = [w, u].
/// Exact mode requires the sum to terminate within max_steps (default
/// m * (1 + max total degree of a's coefficients)); jet mode reduces each term
/// mod J^(N+1) and requires every coefficient of w to be a polynomial inside J.
SemidirectElement exp_ad(const TensorElement& w, const SemidirectElement& a,
                         const JetContext& ctx = JetContext::exact(),
                         std::optional<std::size_t> max_steps = std::nullopt);

} // namespace liederiv

#endif
