#ifndef LIEDERIV_VARIETY_HPP
#define LIEDERIV_VARIETY_HPP

#include <string>
#include <vector>

#include "liederiv/lie_algebra.hpp"

namespace liederiv {

/// Candidate basis of a codimension-k subalgebra: an (m-k) x m coefficient
/// matrix over S (Rational for points, RationalFunction in parameters for
/// families).
template <class S>
struct CandidateMatrix {
  AlgebraPtr algebra;
  std::size_t k = 0;
  Matrix<S> rows;

  void check_shape() const {
    if (k == 0 || k > algebra->dim()) throw ShapeMismatch("need 0 < k <= dim");
    if (rows.rows() != algebra->dim() - k || rows.cols() != algebra->dim())
      throw ShapeMismatch("candidate matrix must be (dim-k) x dim");
  }
};

/// Polynomial system cutting out the subalgebra variety: closure equations are
/// the (m-k+1)-minors of the matrix stacked with each pairwise bracket row;
/// degeneracy equations are the (m-k)-minors of the matrix itself.
struct VarietySystem {
  Vars unknowns; // a_1_1 .. a_{m-k}_m, row-major
  std::size_t k = 0;
  std::vector<Polynomial> closure_eqs;
  std::vector<Polynomial> degeneracy_eqs;
};

VarietySystem closure_equations(const AlgebraPtr& algebra, std::size_t k);

struct PointCheck {
  bool full_rank = false;
  bool closed = false;
  bool in_Mk = false;
  bool in_M0k = false;
};

/// Exact rank / closure / minor-vanishing tests at a rational point.
PointCheck check_point(const CandidateMatrix<Rational>& A);

/// Q-space of constant vectors lying in the row span of A over the parameter
/// field; basis rows are returned. Solutions are re-verified symbolically.
Matrix<Rational> constant_vectors_in_rowspan(const Matrix<RationalFunction>& A);

struct FamilyCheck {
  bool closed_generically;
  std::size_t generic_rank;
  Subspace<Rational> constant_intersection;
  bool theorem1_ii_holds;
};

/// Generic closure, generic rank and the trivial-intersection condition for a
/// parameterized family of candidate bases.
FamilyCheck check_family(const CandidateMatrix<RationalFunction>& A);

/// Evaluates every closure equation at a point; true iff all vanish.
bool closure_equations_vanish_at(const VarietySystem& sys, const Matrix<Rational>& point);

} // namespace liederiv

#endif
