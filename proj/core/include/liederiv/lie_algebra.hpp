#ifndef LIEDERIV_LIE_ALGEBRA_HPP
#define LIEDERIV_LIE_ALGEBRA_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "liederiv/matrix.hpp"

namespace liederiv {

/// Finite-dimensional Lie algebra over Q given by a named basis and sparse
/// structure constants c_ij^s for i < j; antisymmetry is implicit. Immutable
/// after construction.
class LieAlgebra {
public:
  /// One stored bracket: [l_i, l_j] = sum of c * l_s. Indices are 0-based.
  using Terms = std::vector<std::pair<std::size_t, Rational>>;

  LieAlgebra(std::vector<std::string> basis_names,
             std::map<std::pair<std::size_t, std::size_t>, Terms> constants);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const std::string& basis_name(std::size_t i) const { return names_[i]; }
  std::size_t basis_index(const std::string& name) const;

  const std::map<std::pair<std::size_t, std::size_t>, Terms>& constants() const {
    return constants_;
  }

  /// Coordinates of [l_i, l_j] for arbitrary i, j (antisymmetry applied).
  std::vector<Rational> bracket_basis(std::size_t i, std::size_t j) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.names_ == b.names_ && a.constants_ == b.constants_;
  }

private:
  std::vector<std::string> names_;
  std::map<std::pair<std::size_t, std::size_t>, Terms> constants_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Element of S (x) L: coordinate vector over a scalar ring S in the basis of
/// a fixed algebra.
template <class S>
struct LieElement {
  AlgebraPtr algebra;
  std::vector<S> coeffs;
};

template <class S>
void require_same_algebra(const LieElement<S>& a, const LieElement<S>& b) {
  if (!a.algebra || !b.algebra || *a.algebra != *b.algebra) throw AlgebraMismatch();
}

/// Bilinear extension of the structure constants:
/// [a, b] = sum_{i<j} (a_i b_j - a_j b_i) [l_i, l_j].
template <class S>
LieElement<S> bracket(const LieElement<S>& a, const LieElement<S>& b) {
  require_same_algebra(a, b);
  const LieAlgebra& L = *a.algebra;
  if (a.coeffs.size() != L.dim() || b.coeffs.size() != L.dim())
    throw ShapeMismatch("element arity does not match algebra dimension");
  const S zero = make_zero_like(a.coeffs.front());
  LieElement<S> r{a.algebra, std::vector<S>(L.dim(), zero)};
  for (const auto& [ij, terms] : L.constants()) {
    const auto [i, j] = ij;
    const S f = a.coeffs[i] * b.coeffs[j] - a.coeffs[j] * b.coeffs[i];
    if (is_zero(f)) continue;
    for (const auto& [s, c] : terms) r.coeffs[s] = r.coeffs[s] + mul_rational(f, c);
  }
  return r;
}

/// One non-zero component of a Jacobi sum [[l_i,l_j],l_t] + cyclic.
struct JacobiViolation {
  std::size_t i, j, t; // violating triple, 0-based
  std::size_t s;       // basis component carrying the residual
  Rational residual;
};

struct JacobiReport {
  bool ok = true;
  std::vector<JacobiViolation> violations;
};

/// Checks the Jacobi identity on all basis triples. Violations are data, not
/// failures.
JacobiReport validate_jacobi(const LieAlgebra& L);

/// Row-reduced subspace of S (x) L.
template <class S>
struct Subspace {
  AlgebraPtr algebra;
  Matrix<S> rows; // reduced row echelon form, no zero rows

  std::size_t dim() const { return rows.rows(); }
  std::size_t codim() const { return rows.cols() - rows.rows(); }
};

/// Span of a list of coordinate vectors, in canonical RREF.
template <class S>
Subspace<S> span(AlgebraPtr algebra, const std::vector<std::vector<S>>& vectors, const S& zero) {
  const std::size_t m = algebra->dim();
  for (const auto& v : vectors)
    if (v.size() != m) throw ShapeMismatch("span vector arity");
  Matrix<S> mat = Matrix<S>::from_rows(vectors, zero);
  if (vectors.empty()) mat = Matrix<S>(0, m, zero);
  rref(mat);
  std::size_t r = 0;
  for (std::size_t i = 0; i < mat.rows(); ++i) {
    bool nz = false;
    for (std::size_t j = 0; j < m; ++j) nz = nz || !is_zero(mat.at(i, j));
    if (nz) ++r;
  }
  Matrix<S> rows(r, m, zero);
  std::size_t k = 0;
  for (std::size_t i = 0; i < mat.rows(); ++i) {
    bool nz = false;
    for (std::size_t j = 0; j < m; ++j) nz = nz || !is_zero(mat.at(i, j));
    if (!nz) continue;
    for (std::size_t j = 0; j < m; ++j) rows.at(k, j) = mat.at(i, j);
    ++k;
  }
  return Subspace<S>{std::move(algebra), std::move(rows)};
}

template <class S>
bool member(const Subspace<S>& w, const std::vector<S>& v) {
  return in_row_span(w.rows, v);
}

template <class S>
bool member(const Subspace<S>& w, const LieElement<S>& v) {
  if (!v.algebra || *v.algebra != *w.algebra) throw AlgebraMismatch();
  return in_row_span(w.rows, v.coeffs);
}

template <class S>
Subspace<S> subspace_sum(const Subspace<S>& a, const Subspace<S>& b) {
  if (*a.algebra != *b.algebra) throw AlgebraMismatch();
  std::vector<std::vector<S>> rows;
  for (std::size_t i = 0; i < a.rows.rows(); ++i) rows.push_back(a.rows.row(i));
  for (std::size_t i = 0; i < b.rows.rows(); ++i) rows.push_back(b.rows.row(i));
  return span(a.algebra, rows, a.rows.zero());
}

/// Zassenhaus: the intersection of two row spans.
template <class S>
Subspace<S> subspace_intersection(const Subspace<S>& a, const Subspace<S>& b) {
  if (*a.algebra != *b.algebra) throw AlgebraMismatch();
  const std::size_t m = a.rows.cols();
  const S zero = a.rows.zero();
  Matrix<S> block(a.rows.rows() + b.rows.rows(), 2 * m, zero);
  for (std::size_t i = 0; i < a.rows.rows(); ++i)
    for (std::size_t j = 0; j < m; ++j) {
      block.at(i, j) = a.rows.at(i, j);
      block.at(i, m + j) = a.rows.at(i, j);
    }
  for (std::size_t i = 0; i < b.rows.rows(); ++i)
    for (std::size_t j = 0; j < m; ++j) block.at(a.rows.rows() + i, j) = b.rows.at(i, j);
  rref(block);
  std::vector<std::vector<S>> inter;
  for (std::size_t i = 0; i < block.rows(); ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < m && left_zero; ++j) left_zero = is_zero(block.at(i, j));
    if (!left_zero) continue;
    bool right_nz = false;
    std::vector<S> v;
    v.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
      v.push_back(block.at(i, m + j));
      right_nz = right_nz || !is_zero(block.at(i, m + j));
    }
    if (right_nz) inter.push_back(std::move(v));
  }
  return span(a.algebra, inter, zero);
}

/// True when the row span is closed under the Lie bracket.
template <class S>
bool bracket_closed(const Subspace<S>& w) {
  const std::size_t r = w.rows.rows();
  for (std::size_t p = 0; p < r; ++p) {
    for (std::size_t q = p + 1; q < r; ++q) {
      LieElement<S> u{w.algebra, w.rows.row(p)};
      LieElement<S> v{w.algebra, w.rows.row(q)};
      if (!member(w, bracket(u, v))) return false;
    }
  }
  return true;
}

struct NilpotencyResult {
  bool nilpotent = false;
  std::size_t index = 0; // smallest N with V_N = 0 when nilpotent
};

/// Descending chain V_0 = L, V_{t+1} = span{ [b, v] : b in L2, v in V_t }.
/// Throws NotASubalgebra when L2 is not bracket-closed.
NilpotencyResult is_nilpotent_action(const AlgebraPtr& L, const Subspace<Rational>& L2);

} // namespace liederiv

#endif
