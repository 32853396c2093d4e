#ifndef LIEDERIV_MATRIX_HPP
#define LIEDERIV_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "liederiv/rational_function.hpp"

namespace liederiv {

/// Dense matrix over an exact field scalar S (Rational or RationalFunction).
/// Carries a zero prototype so empty matrices still know their scalar context.
template <class S>
class Matrix {
public:
  Matrix(std::size_t rows, std::size_t cols, S zero)
      : rows_(rows), cols_(cols), zero_(std::move(zero)), data_(rows * cols, zero_) {}

  static Matrix from_rows(const std::vector<std::vector<S>>& rows, const S& zero) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(r, c, zero);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw ShapeMismatch("ragged rows");
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const S& zero() const { return zero_; }

  S& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<S> row(std::size_t i) const {
    return std::vector<S>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  /// Vertical stack; shapes must agree in columns.
  static Matrix stack(const Matrix& top, const Matrix& bottom) {
    if (top.cols() != bottom.cols()) throw ShapeMismatch("stack: column mismatch");
    Matrix m(top.rows() + bottom.rows(), top.cols(), top.zero());
    for (std::size_t i = 0; i < top.rows(); ++i)
      for (std::size_t j = 0; j < top.cols(); ++j) m.at(i, j) = top.at(i, j);
    for (std::size_t i = 0; i < bottom.rows(); ++i)
      for (std::size_t j = 0; j < top.cols(); ++j) m.at(top.rows() + i, j) = bottom.at(i, j);
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_, cols_;
  S zero_;
  std::vector<S> data_;
};

/// In-place reduced row echelon form with pivot selection by smallest scalar
/// representation size (limits expression swell over Q(x)). Returns the pivot
/// columns; the matrix afterwards has unit pivots and zeros above and below.
template <class S>
std::vector<std::size_t> rref(Matrix<S>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t best = m.rows();
    std::size_t best_size = 0;
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (is_zero(m.at(i, c))) continue;
      const std::size_t s = complexity(m.at(i, c));
      if (best == m.rows() || s < best_size) {
        best = i;
        best_size = s;
      }
    }
    if (best == m.rows()) continue;
    m.swap_rows(r, best);
    const S pivot = m.at(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) / pivot;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m.at(i, c))) continue;
      const S f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class S>
std::size_t rank(Matrix<S> m) {
  return rref(m).size();
}

/// Basis rows of the (right) null space: all v with M v = 0.
template <class S>
Matrix<S> nullspace(const Matrix<S>& m) {
  Matrix<S> red = m;
  const std::vector<std::size_t> pivots = rref(red);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  const S one = make_one_like(m.zero());
  Matrix<S> basis(m.cols() - pivots.size(), m.cols(), m.zero());
  std::size_t bi = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    basis.at(bi, f) = one;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis.at(bi, pivots[i]) = -red.at(i, f);
    ++bi;
  }
  return basis;
}

/// Solves A X = B for square non-singular A; throws SingularSystem otherwise,
/// reporting the rank (the order of the largest non-vanishing minor).
template <class S>
Matrix<S> solve_square(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != a.cols() || a.rows() != b.rows()) throw ShapeMismatch("solve_square shapes");
  Matrix<S> aug(a.rows(), a.cols() + b.cols(), a.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
  }
  // Restrict pivot search to the A-block.
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    std::size_t best = aug.rows();
    std::size_t best_size = 0;
    for (std::size_t i = r; i < aug.rows(); ++i) {
      if (is_zero(aug.at(i, c))) continue;
      const std::size_t s = complexity(aug.at(i, c));
      if (best == aug.rows() || s < best_size) {
        best = i;
        best_size = s;
      }
    }
    if (best == aug.rows())
      throw SingularSystem("singular system: rank " + std::to_string(r) +
                           " < " + std::to_string(a.rows()) +
                           "; all minors of order " + std::to_string(r + 1) +
                           " through column " + std::to_string(c + 1) + " vanish");
    aug.swap_rows(r, best);
    const S pivot = aug.at(r, c);
    for (std::size_t j = c; j < aug.cols(); ++j) aug.at(r, j) = aug.at(r, j) / pivot;
    for (std::size_t i = 0; i < aug.rows(); ++i) {
      if (i == r || is_zero(aug.at(i, c))) continue;
      const S f = aug.at(i, c);
      for (std::size_t j = c; j < aug.cols(); ++j) aug.at(i, j) = aug.at(i, j) - f * aug.at(r, j);
    }
    ++r;
  }
  Matrix<S> x(a.cols(), b.cols(), a.zero());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x.at(i, j) = aug.at(i, a.cols() + j);
  return x;
}

/// True when v lies in the row span of m.
template <class S>
bool in_row_span(const Matrix<S>& m, const std::vector<S>& v) {
  if (v.size() != m.cols()) throw ShapeMismatch("in_row_span arity");
  Matrix<S> ext(m.rows() + 1, m.cols(), m.zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) ext.at(i, j) = m.at(i, j);
  for (std::size_t j = 0; j < m.cols(); ++j) ext.at(m.rows(), j) = v[j];
  return rank(ext) == rank(m);
}

} // namespace liederiv

#endif
