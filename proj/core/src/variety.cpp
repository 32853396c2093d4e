#include "liederiv/variety.hpp"

#include <map>

namespace liederiv {

namespace {

// All determinants of the first `depth` symbolic rows over column subsets,
// memoized on the column bitmask (Laplace expansion along the last row).
class MinorTable {
public:
  MinorTable(const std::vector<std::vector<Polynomial>>& rows, const Vars& vars)
      : rows_(rows), vars_(vars) {}

  // det of rows 0..popcount(mask)-1 on the columns in mask.
  const Polynomial& det(std::uint32_t mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    const int depth = __builtin_popcount(mask);
    Polynomial d = Polynomial::zero(vars_);
    if (depth == 0) {
      d = Polynomial::constant(vars_, Rational(1));
    } else {
      int pos = 0;
      for (std::uint32_t j = 0; j < 32; ++j) {
        if (!(mask & (1u << j))) continue;
        const Polynomial& sub = det(mask & ~(1u << j));
        Polynomial term = rows_[depth - 1][j] * sub;
        if ((depth - 1 + pos) % 2 != 0) term = -term;
        d += term;
        ++pos;
      }
    }
    return memo_.emplace(mask, std::move(d)).first->second;
  }

private:
  const std::vector<std::vector<Polynomial>>& rows_;
  Vars vars_;
  std::map<std::uint32_t, Polynomial> memo_;
};

std::vector<std::uint32_t> column_subsets(std::size_t m, std::size_t size) {
  std::vector<std::uint32_t> out;
  // Enumerate in lexicographic order of the column index lists.
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  if (size > m) return out;
  while (true) {
    std::uint32_t mask = 0;
    for (auto i : idx) mask |= 1u << i;
    out.push_back(mask);
    // next combination
    std::size_t i = size;
    while (i > 0) {
      --i;
      if (idx[i] != i + m - size) {
        ++idx[i];
        for (std::size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
    if (size == 0) return out;
  }
}

} // namespace

VarietySystem closure_equations(const AlgebraPtr& algebra, std::size_t k) {
  const std::size_t m = algebra->dim();
  if (k == 0 || k > m) throw ShapeMismatch("need 0 < k <= dim");
  if (m > 31) throw InvalidInput("variety systems supported up to dimension 31");
  const std::size_t r = m - k;

  std::vector<std::string> names;
  names.reserve(r * m);
  for (std::size_t i = 1; i <= r; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      names.push_back("a_" + std::to_string(i) + "_" + std::to_string(j));
  const Vars unknowns{names};

  VarietySystem sys;
  sys.unknowns = unknowns;
  sys.k = k;

  // Symbolic rows of A.
  std::vector<std::vector<Polynomial>> arows(r, std::vector<Polynomial>(m, Polynomial::zero(unknowns)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m; ++j) arows[i][j] = Polynomial::variable(unknowns, i * m + j);

  MinorTable table(arows, unknowns);

  // Degeneracy: all (m-k)-minors of A.
  for (const auto mask : column_subsets(m, r)) sys.degeneracy_eqs.push_back(table.det(mask));

  // Closure: for every pair p < q, all (m-k+1)-minors of [A; [v_p, v_q]].
  for (std::size_t p = 0; p < r; ++p) {
    for (std::size_t q = p + 1; q < r; ++q) {
      // Bracket row: [v_p, v_q]_s = sum_{i<j} (a_pi a_qj - a_pj a_qi) c_ij^s.
      std::vector<Polynomial> br(m, Polynomial::zero(unknowns));
      for (const auto& [ij, terms] : algebra->constants()) {
        const auto [i, j] = ij;
        const Polynomial f = arows[p][i] * arows[q][j] - arows[p][j] * arows[q][i];
        if (f.is_zero()) continue;
        for (const auto& [s, c] : terms) br[s] += f * c;
      }
      for (const auto mask : column_subsets(m, r + 1)) {
        // Expand along the bracket row (the last row of the stacked matrix).
        Polynomial d = Polynomial::zero(unknowns);
        int pos = 0;
        for (std::uint32_t j = 0; j < m; ++j) {
          if (!(mask & (1u << j))) continue;
          if (!br[j].is_zero()) {
            Polynomial term = br[j] * table.det(mask & ~(1u << j));
            if ((static_cast<int>(r) + pos) % 2 != 0) term = -term;
            d += term;
          }
          ++pos;
        }
        sys.closure_eqs.push_back(std::move(d));
      }
    }
  }
  return sys;
}

namespace {

template <class S>
bool span_closed(const CandidateMatrix<S>& A, bool* all_minor_rank_ok) {
  const std::size_t r = A.rows.rows();
  const std::size_t base_rank = rank(A.rows);
  bool closed = true;
  bool minors_vanish = true;
  for (std::size_t p = 0; p < r; ++p) {
    for (std::size_t q = p + 1; q < r; ++q) {
      LieElement<S> u{A.algebra, A.rows.row(p)};
      LieElement<S> v{A.algebra, A.rows.row(q)};
      const LieElement<S> br = bracket(u, v);
      Matrix<S> stacked = Matrix<S>::stack(
          A.rows, Matrix<S>::from_rows({br.coeffs}, A.rows.zero()));
      const std::size_t sr = rank(stacked);
      if (sr != base_rank) closed = false;
      if (sr > r) minors_vanish = false; // an (r+1)-minor survives
    }
  }
  if (all_minor_rank_ok) *all_minor_rank_ok = minors_vanish;
  return closed;
}

} // namespace

PointCheck check_point(const CandidateMatrix<Rational>& A) {
  A.check_shape();
  PointCheck out;
  out.full_rank = rank(A.rows) == A.rows.rows();
  bool minors_vanish = true;
  out.closed = span_closed(A, &minors_vanish);
  out.in_Mk = minors_vanish;
  out.in_M0k = out.in_Mk && !out.full_rank;
  return out;
}

Matrix<Rational> constant_vectors_in_rowspan(const Matrix<RationalFunction>& A) {
  const std::size_t m = A.cols();
  const Rational q0(0);
  if (A.rows() == 0) return Matrix<Rational>(0, m, q0);
  const Vars& vars = A.zero().vars();

  Matrix<RationalFunction> red = A;
  const std::vector<std::size_t> pivots = rref(red);
  std::vector<bool> is_pivot(m, false);
  for (auto c : pivots) is_pivot[c] = true;

  // Conditions on a constant v in the row span: for every free column f,
  //   v_f = sum_i v_{P_i} * red(i, f).
  // Clear denominators and equate coefficients of the parameter monomials.
  std::vector<std::vector<Rational>> eq_rows;
  for (std::size_t f = 0; f < m; ++f) {
    if (is_pivot[f]) continue;
    Polynomial common = Polynomial::constant(vars, Rational(1));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const Polynomial& d = red.at(i, f).den();
      const Polynomial g = Polynomial::gcd(common, d);
      common = common * Polynomial::div_exact(d, g);
    }
    // coefficient polynomial for each unknown position
    std::vector<Polynomial> coeff(m, Polynomial::zero(vars));
    coeff[f] = -common;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const RationalFunction& e = red.at(i, f);
      if (e.is_zero()) continue;
      coeff[pivots[i]] += e.num() * Polynomial::div_exact(common, e.den());
    }
    // one linear equation per parameter monomial
    std::map<Monomial, std::vector<Rational>, GrlexGreater> per_monomial;
    for (std::size_t j = 0; j < m; ++j) {
      for (const auto& [mono, c] : coeff[j].terms()) {
        auto it = per_monomial.find(mono);
        if (it == per_monomial.end())
          it = per_monomial.emplace(mono, std::vector<Rational>(m, q0)).first;
        it->second[j] = c;
      }
    }
    for (auto& [mono, row] : per_monomial) eq_rows.push_back(row);
  }

  Matrix<Rational> sys = eq_rows.empty() ? Matrix<Rational>(0, m, q0)
                                         : Matrix<Rational>::from_rows(eq_rows, q0);
  Matrix<Rational> basis = nullspace(sys);

  // Re-verify each solution symbolically over the parameter field.
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    std::vector<RationalFunction> lifted;
    lifted.reserve(m);
    for (std::size_t j = 0; j < m; ++j)
      lifted.push_back(RationalFunction::constant(vars, basis.at(i, j)));
    if (!in_row_span(A, lifted))
      throw Error("internal error: constant vector fails symbolic membership");
  }
  return basis;
}

FamilyCheck check_family(const CandidateMatrix<RationalFunction>& A) {
  A.check_shape();
  const bool closed = span_closed<RationalFunction>(A, nullptr);
  const std::size_t generic_rank = rank(A.rows);
  const Matrix<Rational> basis = constant_vectors_in_rowspan(A.rows);
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < basis.rows(); ++i) rows.push_back(basis.row(i));
  Subspace<Rational> constant = span(A.algebra, rows, Rational(0));
  const bool holds =
      closed && generic_rank == A.algebra->dim() - A.k && constant.dim() == 0;
  return FamilyCheck{closed, generic_rank, std::move(constant), holds};
}

bool closure_equations_vanish_at(const VarietySystem& sys, const Matrix<Rational>& point) {
  const std::size_t n = sys.unknowns.size();
  if (point.rows() * point.cols() != n) throw ShapeMismatch("point shape");
  std::vector<Rational> flat;
  flat.reserve(n);
  for (std::size_t i = 0; i < point.rows(); ++i)
    for (std::size_t j = 0; j < point.cols(); ++j) flat.push_back(point.at(i, j));
  for (const auto& eq : sys.closure_eqs)
    if (!eq.evaluate(flat).is_zero()) return false;
  return true;
}

} // namespace liederiv
