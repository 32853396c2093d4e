#ifndef LIEDERIV_POLYNOMIAL_HPP
#define LIEDERIV_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "liederiv/rational.hpp"
#include "liederiv/vars.hpp"

namespace liederiv {

/// Exponent vector; length always equals the number of variables.
using Monomial = std::vector<std::uint32_t>;

/// Graded lexicographic order, descending: higher total degree first, ties by
/// lexicographic comparison with earlier variables weighing more.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    std::uint64_t da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da > db;
    return a > b;
  }
};

/// Sparse multivariate polynomial over Q in a fixed variable list.
/// Invariants: no stored zero coefficient; all exponent vectors have length
/// equal to the variable count; terms iterate leading-first under grlex.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  explicit Polynomial(Vars vars) : vars_(std::move(vars)) {}

  static Polynomial zero(Vars vars) { return Polynomial(std::move(vars)); }
  static Polynomial constant(Vars vars, const Rational& c);
  static Polynomial variable(Vars vars, std::size_t index);
  static Polynomial monomial(Vars vars, Monomial m, const Rational& c);

  const Vars& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Constant value if the polynomial has degree <= 0, else nullopt.
  std::optional<Rational> as_constant() const;

  /// Total degree; nullopt is the "minus infinity" of the zero polynomial.
  std::optional<int> total_degree() const;
  /// Degree in one variable; nullopt for the zero polynomial.
  std::optional<int> degree_in(std::size_t var) const;

  const Monomial& leading_monomial() const; // requires non-zero
  const Rational& leading_coefficient() const; // requires non-zero
  Rational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator*(const Rational& c) const;
  Polynomial pow(std::uint32_t e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Formal partial derivative with respect to one variable.
  Polynomial derivative(std::size_t var) const;

  /// Drops every monomial of total degree > n (n < 0 yields zero).
  Polynomial truncated(int n) const;

  /// Evaluation at an exact rational point (one value per variable).
  Rational evaluate(std::span<const Rational> point) const;

  /// Positive rational content: gcd of numerators / lcm of denominators of the
  /// coefficients. Zero polynomial has content 0.
  Rational content() const;
  /// this / content(): integer coefficients with trivial common divisor; sign
  /// of the leading coefficient is preserved. Zero stays zero.
  Polynomial primitive_part() const;

  /// Polynomial gcd over Q, canonicalized primitive with positive leading
  /// coefficient. Content extraction plus subresultant PRS on primitive parts.
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);

  /// Exact division; throws InvalidInput if the division is not exact.
  static Polynomial div_exact(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;
  std::string to_latex() const;

  /// Inserts c into the term for m (accumulating), dropping zeros.
  void add_term(const Monomial& m, const Rational& c);

private:
  Vars vars_;
  TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

/// Size measure for pivot selection.
std::size_t complexity(const Polynomial& p);

} // namespace liederiv

#endif
