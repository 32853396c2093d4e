#ifndef LIEDERIV_VECTOR_FIELD_HPP
#define LIEDERIV_VECTOR_FIELD_HPP

#include <string>
#include <vector>

#include "liederiv/rational_function.hpp"

namespace liederiv {

/// Derivation of Q(x1..xk): sum of f_i d/dx_i with rational-function
/// coefficients, one per variable of the shared list.
class VectorField {
public:
  explicit VectorField(Vars vars);
  VectorField(Vars vars, std::vector<RationalFunction> coeffs);

  /// The unit field d/dx_i.
  static VectorField basis(Vars vars, std::size_t i);

  const Vars& vars() const { return vars_; }
  const std::vector<RationalFunction>& coeffs() const { return coeffs_; }
  const RationalFunction& coeff(std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const;

  VectorField operator-() const;
  friend VectorField operator+(const VectorField& a, const VectorField& b);
  friend VectorField operator-(const VectorField& a, const VectorField& b);
  /// Module action of Q(x).
  friend VectorField operator*(const RationalFunction& r, const VectorField& d);

  friend bool operator==(const VectorField& a, const VectorField& b) {
    return a.vars_ == b.vars_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const VectorField& a, const VectorField& b) { return !(a == b); }

  /// Application to a function: sum f_i df/dx_i.
  RationalFunction apply(const RationalFunction& f) const;

  std::string to_string() const;
  std::string to_latex() const;

private:
  Vars vars_;
  std::vector<RationalFunction> coeffs_;
};

/// Lie bracket of derivations: coefficient j is
/// sum_i ( a_i db_j/dx_i - b_i da_j/dx_i ).
VectorField bracket(const VectorField& a, const VectorField& b);

/// Parses the renderer's plain-text form back into a vector field
/// ("-2*x1*d/dx1 - x2*d/dx2"); inverse of to_string for this library's output.
VectorField parse_vector_field(const std::string& text, const Vars& vars);

} // namespace liederiv

#endif
