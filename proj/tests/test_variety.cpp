#include <doctest.h>

#include "liederiv/presets.hpp"
#include "liederiv/variety.hpp"
#include "testutil.hpp"

using namespace liederiv;
namespace tu = liederiv::testutil;

#include "oracle_span.hpp"

namespace {

CandidateMatrix<Rational> make_point(const AlgebraPtr& L, std::size_t k,
                                     const std::vector<std::vector<Rational>>& rows) {
  return CandidateMatrix<Rational>{L, k, Matrix<Rational>::from_rows(rows, Rational(0))};
}

std::vector<AlgebraPtr> algebra_pool() {
  return {make_abelian(2), make_abelian(3), make_heisenberg(), make_borel2(),
          tu::make_sl2_hef(),
          // 4-dim filiform: [x,y] = z, [x,z] = t
          tu::make_simple_algebra({"x", "y", "z", "t"},
                                  {{1, 2, 3, Rational(1)}, {1, 3, 4, Rational(1)}})};
}

} // namespace

TEST_CASE("closure_equations shapes and trivial cases") {
  // abelian: every bracket row vanishes, so every closure equation is zero
  const VarietySystem ab = closure_equations(make_abelian(3), 1);
  CHECK(ab.unknowns.size() == 6);
  CHECK(ab.closure_eqs.size() == 1); // one pair, one stacked 3x3 minor
  for (const auto& eq : ab.closure_eqs) CHECK(eq.is_zero());
  CHECK(ab.degeneracy_eqs.size() == 3);

  // sl2 with one row: no pairs, no closure equations
  const VarietySystem one_row = closure_equations(tu::make_sl2_hef(), 2);
  CHECK(one_row.closure_eqs.empty());
  CHECK(one_row.degeneracy_eqs.size() == 3);

  CHECK_THROWS_AS(closure_equations(make_abelian(2), 0), ShapeMismatch);
}

TEST_CASE("closure equations vanish exactly on subalgebra points") {
  const AlgebraPtr sl2 = tu::make_sl2_hef();
  const VarietySystem sys = closure_equations(sl2, 1);
  // A = rows{h, e}: a subalgebra (Borel); equations vanish.
  const auto borel = make_point(sl2, 1, {{Rational(1), Rational(0), Rational(0)},
                                         {Rational(0), Rational(1), Rational(0)}});
  CHECK(closure_equations_vanish_at(sys, borel.rows));
  // A = rows{e, f}: [e,f] = h escapes; some equation survives.
  const auto ef = make_point(sl2, 1, {{Rational(0), Rational(1), Rational(0)},
                                      {Rational(0), Rational(0), Rational(1)}});
  CHECK_FALSE(closure_equations_vanish_at(sys, ef.rows));
}

TEST_CASE("the sl3 system vanishes at the L1 point") {
  const EmbeddingProblem p = make_sl3_paper();
  const VarietySystem sys = closure_equations(p.algebra, 2);
  CHECK_FALSE(sys.closure_eqs.empty());
  bool some_nonzero = false;
  for (const auto& eq : sys.closure_eqs) some_nonzero = some_nonzero || !eq.is_zero();
  CHECK(some_nonzero);
  CHECK(closure_equations_vanish_at(sys, p.L1.rows));
}

TEST_CASE("check_point examples") {
  const EmbeddingProblem p = make_sl3_paper();
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < p.L1.rows.rows(); ++i) rows.push_back(p.L1.rows.row(i));
  const PointCheck sl3_l1 = check_point(make_point(p.algebra, 2, rows));
  CHECK(sl3_l1.full_rank);
  CHECK(sl3_l1.closed);
  CHECK(sl3_l1.in_Mk);
  CHECK_FALSE(sl3_l1.in_M0k);

  const AlgebraPtr sl2 = tu::make_sl2_hef();
  const PointCheck zero = check_point(
      make_point(sl2, 1, {{Rational(0), Rational(0), Rational(0)},
                          {Rational(0), Rational(0), Rational(0)}}));
  CHECK(zero.in_Mk);
  CHECK(zero.in_M0k);
  CHECK_FALSE(zero.full_rank);

  const PointCheck ef = check_point(make_point(sl2, 1, {{Rational(0), Rational(1), Rational(0)},
                                                        {Rational(0), Rational(0), Rational(1)}}));
  CHECK(ef.full_rank);
  CHECK_FALSE(ef.closed);
  CHECK_FALSE(ef.in_Mk);
}

TEST_CASE("closed agrees with the brute-force oracle; minors agree with in_Mk") {
  tu::Rng rng(83);
  const auto pool = algebra_pool();
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  int done = 0;
  while (done < 60) {
    const AlgebraPtr L = pool[pick(rng)];
    const std::size_t m = L->dim();
    std::uniform_int_distribution<std::size_t> pick_k(1, m - 1);
    const std::size_t k = pick_k(rng);
    std::vector<std::vector<Rational>> rows(m - k, std::vector<Rational>(m, Rational(0)));
    for (auto& row : rows)
      for (auto& x : row) x = tu::random_rational(rng, 2, 2);
    const auto A = make_point(L, k, rows);
    const PointCheck c = check_point(A);
    CHECK(c.closed == oracle::closed(*L, rows));
    const VarietySystem sys = closure_equations(L, k);
    CHECK(closure_equations_vanish_at(sys, A.rows) == c.in_Mk);
    if (c.full_rank) CHECK(c.in_Mk == c.closed);
    ++done;
  }
}

TEST_CASE("constant_vectors_in_rowspan examples") {
  const Vars Z({"z1"});
  auto f = [&](const std::string& s) { return parse_rational_function(s, Z); };
  const RationalFunction zero = RationalFunction::zero(Z);

  // (1, z1): no non-zero constant vector is proportional to it.
  Matrix<RationalFunction> a1 = Matrix<RationalFunction>::from_rows({{f("1"), f("z1")}}, zero);
  CHECK(constant_vectors_in_rowspan(a1).rows() == 0);

  // constant row (1, 0)
  Matrix<RationalFunction> a2 = Matrix<RationalFunction>::from_rows({{f("1"), f("0")}}, zero);
  const Matrix<Rational> c2 = constant_vectors_in_rowspan(a2);
  REQUIRE(c2.rows() == 1);
  CHECK(c2.at(0, 0) == 1);
  CHECK(c2.at(0, 1) == 0);

  // rows {(1, 0, z1), (0, 1, 0)}: exactly the second row is constant.
  Matrix<RationalFunction> a3 = Matrix<RationalFunction>::from_rows(
      {{f("1"), f("0"), f("z1")}, {f("0"), f("1"), f("0")}}, zero);
  const Matrix<Rational> c3 = constant_vectors_in_rowspan(a3);
  REQUIRE(c3.rows() == 1);
  CHECK(c3.at(0, 0) == 0);
  CHECK(c3.at(0, 1) == 1);
  CHECK(c3.at(0, 2) == 0);
}

TEST_CASE("check_family examples") {
  const Vars Z({"z1"});
  auto f = [&](const std::string& s) { return parse_rational_function(s, Z); };
  const RationalFunction zero = RationalFunction::zero(Z);

  // constant family at the sl3 L1 point: closed, full rank, but a single
  // point never has trivial intersection for a non-zero algebra.
  const EmbeddingProblem p = make_sl3_paper();
  {
    std::vector<std::vector<RationalFunction>> rows;
    for (std::size_t i = 0; i < p.L1.rows.rows(); ++i) {
      std::vector<RationalFunction> row;
      for (std::size_t j = 0; j < 8; ++j)
        row.push_back(RationalFunction::constant(Z, p.L1.rows.at(i, j)));
      rows.push_back(std::move(row));
    }
    const CandidateMatrix<RationalFunction> A{p.algebra, 2,
                                              Matrix<RationalFunction>::from_rows(rows, zero)};
    const FamilyCheck c = check_family(A);
    CHECK(c.closed_generically);
    CHECK(c.generic_rank == 6);
    CHECK(c.constant_intersection.dim() == 6);
    CHECK_FALSE(c.theorem1_ii_holds);
  }

  // 2-dim abelian family (1, z1)
  {
    const CandidateMatrix<RationalFunction> A{
        make_abelian(2), 1, Matrix<RationalFunction>::from_rows({{f("1"), f("z1")}}, zero)};
    const FamilyCheck c = check_family(A);
    CHECK(c.closed_generically);
    CHECK(c.generic_rank == 1);
    CHECK(c.constant_intersection.dim() == 0);
    CHECK(c.theorem1_ii_holds);
  }

  // sl2 one-row family (1, z1, z1^2)
  {
    const CandidateMatrix<RationalFunction> A{
        tu::make_sl2_hef(), 2,
        Matrix<RationalFunction>::from_rows({{f("1"), f("z1"), f("z1^2")}}, zero)};
    const FamilyCheck c = check_family(A);
    CHECK(c.closed_generically);
    CHECK(c.generic_rank == 1);
    CHECK(c.constant_intersection.dim() == 0);
    CHECK(c.theorem1_ii_holds);
  }
}

TEST_CASE("evaluating a family at good rational points matches the generic answers") {
  const Vars Z({"z1"});
  auto f = [&](const std::string& s) { return parse_rational_function(s, Z); };
  const RationalFunction zero = RationalFunction::zero(Z);
  // Heisenberg family rows {(1, z1, 0), (0, 0, 1)}: closed for every z1.
  const AlgebraPtr h3 = make_heisenberg();
  const CandidateMatrix<RationalFunction> A{
      h3, 1,
      Matrix<RationalFunction>::from_rows({{f("1"), f("z1"), f("0")}, {f("0"), f("0"), f("1")}},
                                          zero)};
  const FamilyCheck generic = check_family(A);
  CHECK(generic.closed_generically);
  CHECK(generic.generic_rank == 2);

  tu::Rng rng(89);
  int accepted = 0;
  while (accepted < 10) {
    const Rational z = tu::random_rational(rng);
    std::vector<Rational> pt = {z};
    std::vector<std::vector<Rational>> rows(2, std::vector<Rational>(3, Rational(0)));
    bool ok = true;
    for (std::size_t i = 0; i < 2 && ok; ++i)
      for (std::size_t j = 0; j < 3 && ok; ++j) {
        try {
          rows[i][j] = A.rows.at(i, j).evaluate(pt);
        } catch (const DivisionByZero&) {
          ok = false;
        }
      }
    if (!ok) continue;
    const auto point = make_point(h3, 1, rows);
    if (rank(point.rows) != generic.generic_rank) continue; // outside the bad locus
    const PointCheck c = check_point(point);
    CHECK(c.closed == generic.closed_generically);
    CHECK(c.full_rank == (generic.generic_rank == 2));
    ++accepted;
  }
}
