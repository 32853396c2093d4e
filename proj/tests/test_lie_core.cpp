#include <doctest.h>

#include "liederiv/presets.hpp"
#include "testutil.hpp"

using namespace liederiv;
namespace tu = liederiv::testutil;

namespace {

LieElement<Rational> elem(const AlgebraPtr& L, std::vector<int> c) {
  std::vector<Rational> q;
  for (int x : c) q.emplace_back(x);
  return LieElement<Rational>{L, std::move(q)};
}

} // namespace

TEST_CASE("validate_jacobi on textbook algebras") {
  CHECK(validate_jacobi(*tu::make_sl2_hef()).ok);
  CHECK(validate_jacobi(*make_abelian(4)).ok);
  CHECK(validate_jacobi(*make_heisenberg()).ok);

  // Rescaling [e,f] = 2h keeps all Jacobi sums zero in dimension 3: the only
  // triple (h,e,f) sums to 2[e,f] + 0 - 2[e,f] identically.
  const AlgebraPtr rescaled = tu::make_simple_algebra(
      {"h", "e", "f"},
      {{1, 2, 2, Rational(2)}, {1, 3, 3, Rational(-2)}, {2, 3, 1, Rational(2)}});
  CHECK(validate_jacobi(*rescaled).ok);

  // A genuine violation: [h,e] = 2f makes [[f,h],e] = -2h unmatched.
  const AlgebraPtr broken = tu::make_simple_algebra(
      {"h", "e", "f"},
      {{1, 2, 3, Rational(2)}, {1, 3, 3, Rational(-2)}, {2, 3, 1, Rational(1)}});
  const JacobiReport report = validate_jacobi(*broken);
  CHECK_FALSE(report.ok);
  REQUIRE_FALSE(report.violations.empty());
  CHECK(report.violations[0].i == 0);
  CHECK(report.violations[0].j == 1);
  CHECK(report.violations[0].t == 2);
}

TEST_CASE("bracket on basis and elements") {
  const AlgebraPtr sl2 = tu::make_sl2_hef();
  CHECK(bracket(elem(sl2, {1, 0, 0}), elem(sl2, {1, 0, 0})).coeffs ==
        elem(sl2, {0, 0, 0}).coeffs);
  CHECK(bracket(elem(sl2, {1, 0, 0}), elem(sl2, {0, 1, 0})).coeffs ==
        elem(sl2, {0, 2, 0}).coeffs);

  // over Q(x): bracket(x e, f) = x h
  const Vars X({"x1"});
  auto c = [&](const std::string& s) { return parse_rational_function(s, X); };
  LieElement<RationalFunction> xe{sl2, {c("0"), c("x1"), c("0")}};
  LieElement<RationalFunction> f{sl2, {c("0"), c("0"), c("1")}};
  CHECK(bracket(xe, f).coeffs == std::vector<RationalFunction>{c("x1"), c("0"), c("0")});

  const AlgebraPtr ab = make_abelian(2);
  CHECK_THROWS_AS(bracket(elem(sl2, {1, 0, 0}), elem(ab, {1, 0})), AlgebraMismatch);
}

TEST_CASE("bracket laws on random elements") {
  const AlgebraPtr sl2 = tu::make_sl2_hef();
  tu::Rng rng(31);
  auto rnd = [&] {
    std::vector<Rational> c;
    for (int i = 0; i < 3; ++i) c.push_back(tu::random_rational(rng));
    return LieElement<Rational>{sl2, std::move(c)};
  };
  for (int t = 0; t < 50; ++t) {
    const auto a = rnd(), b = rnd(), c = rnd();
    // bilinearity and antisymmetry
    const Rational s = tu::random_rational(rng);
    LieElement<Rational> sa = a;
    for (auto& x : sa.coeffs) x *= s;
    std::vector<Rational> lhs = bracket(sa, b).coeffs;
    std::vector<Rational> rhs = bracket(a, b).coeffs;
    for (auto& x : rhs) x *= s;
    CHECK(lhs == rhs);
    std::vector<Rational> anti = bracket(b, a).coeffs;
    for (auto& x : anti) x = -x;
    CHECK(bracket(a, b).coeffs == anti);
    // Jacobi
    std::vector<Rational> sum(3, Rational(0));
    auto acc = [&](const LieElement<Rational>& u, const LieElement<Rational>& v,
                   const LieElement<Rational>& w) {
      const auto r = bracket(bracket(u, v), w);
      for (int i = 0; i < 3; ++i) sum[i] += r.coeffs[i];
    };
    acc(a, b, c);
    acc(b, c, a);
    acc(c, a, b);
    for (int i = 0; i < 3; ++i) CHECK(sum[i].is_zero());
  }
}

TEST_CASE("is_nilpotent_action") {
  const EmbeddingProblem p = make_sl3_paper();
  const AlgebraPtr sl3 = p.algebra;
  // strictly upper part spanned by e_a (index 0) and e_ab (index 1)
  std::vector<std::vector<Rational>> rows;
  for (std::size_t idx : {0, 1}) {
    std::vector<Rational> e(8, Rational(0));
    e[idx] = 1;
    rows.push_back(std::move(e));
  }
  const auto upper = span(sl3, rows, Rational(0));
  const NilpotencyResult r = is_nilpotent_action(sl3, upper);
  CHECK(r.nilpotent);
  CHECK(r.index <= 3);

  const AlgebraPtr sl2 = tu::make_sl2_hef();
  const auto cartan = span(sl2, {{Rational(1), Rational(0), Rational(0)}}, Rational(0));
  CHECK_FALSE(is_nilpotent_action(sl2, cartan).nilpotent);

  const auto zero_sub = span(sl2, {}, Rational(0));
  const NilpotencyResult z = is_nilpotent_action(sl2, zero_sub);
  CHECK(z.nilpotent);
  CHECK(z.index == 1);

  // span{e, f} is not closed: [e,f] = h escapes
  const auto ef = span(sl2, {{Rational(0), Rational(1), Rational(0)},
                             {Rational(0), Rational(0), Rational(1)}},
                       Rational(0));
  CHECK_THROWS_AS(is_nilpotent_action(sl2, ef), NotASubalgebra);
}

TEST_CASE("subspace operations") {
  const AlgebraPtr sl2 = tu::make_sl2_hef();
  const Rational q0(0), q1(1);
  const auto he = span(sl2, {{q1, q0, q0}, {q0, q1, q0}}, q0);
  CHECK(member(he, std::vector<Rational>{q1, q1, q0}));
  CHECK_FALSE(member(he, std::vector<Rational>{q0, q0, q1}));
  CHECK(he.codim() == 1);

  const auto ef = span(sl2, {{q0, q1, q0}, {q0, q0, q1}}, q0);
  const auto inter = subspace_intersection(he, ef);
  CHECK(inter.dim() == 1);
  CHECK(member(inter, std::vector<Rational>{q0, q1, q0}));
  CHECK(subspace_sum(he, ef).dim() == 3);

  // over Q(x)
  const Vars X({"x1"});
  auto c = [&](const std::string& s) { return parse_rational_function(s, X); };
  const auto w = span(sl2, {{c("1"), c("x1"), c("0")}}, c("0"));
  CHECK(member(w, std::vector<RationalFunction>{c("1"), c("x1"), c("0")}));
  CHECK_FALSE(member(w, std::vector<RationalFunction>{c("1"), c("0"), c("0")}));
}

TEST_CASE("rref idempotence on random subspaces") {
  const AlgebraPtr L = make_abelian(4);
  tu::Rng rng(37);
  for (int t = 0; t < 30; ++t) {
    std::vector<std::vector<Rational>> rows;
    const int n = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < n; ++i) {
      std::vector<Rational> r;
      for (int j = 0; j < 4; ++j) r.push_back(tu::random_rational(rng));
      rows.push_back(std::move(r));
    }
    const auto s1 = span(L, rows, Rational(0));
    std::vector<std::vector<Rational>> again;
    for (std::size_t i = 0; i < s1.rows.rows(); ++i) again.push_back(s1.rows.row(i));
    const auto s2 = span(L, again, Rational(0));
    CHECK(s1.rows == s2.rows);
  }
}

TEST_CASE("algebra JSON schema") {
  const AlgebraPtr broken = tu::make_sl2_hef();
  CHECK(broken->basis_index("f") == 2);
  CHECK_THROWS_AS(broken->basis_index("nope"), InvalidInput);
  CHECK_THROWS_AS(LieAlgebra({"a", "a"}, {}), InvalidInput);
  std::map<std::pair<std::size_t, std::size_t>, LieAlgebra::Terms> bad;
  bad[{1, 0}] = {{0, Rational(1)}};
  CHECK_THROWS_AS(LieAlgebra({"a", "b"}, bad), InvalidInput);
}
