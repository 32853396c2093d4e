#include <doctest.h>

#include "testutil.hpp"

using namespace liederiv;
namespace tu = liederiv::testutil;

namespace {
const Vars XY({"x1", "x2"});
RationalFunction rf(const std::string& s) { return parse_rational_function(s, XY); }
VectorField vf(const std::string& s) { return parse_vector_field(s, XY); }
} // namespace

TEST_CASE("vf_apply examples") {
  CHECK(VectorField::basis(XY, 0).apply(rf("x1")).is_one());
  CHECK(vf("-2*x1*d/dx1 - x2*d/dx2").apply(rf("x1")) == rf("-2*x1"));
  CHECK(vf("x2*d/dx1").apply(rf("x1^2*x2")) == rf("2*x1*x2^2"));
}

TEST_CASE("vf_bracket examples") {
  CHECK(bracket(vf("d/dx1"), vf("d/dx2")).is_zero());
  // [phi(h_a), phi(e_a)] = 2 phi(e_a) with phi(h_a) = -2x1 d1 - x2 d2, phi(e_a) = -d1
  CHECK(bracket(vf("-2*x1*d/dx1 - x2*d/dx2"), vf("-d/dx1")) == vf("-2*d/dx1"));
  CHECK(bracket(vf("x1*d/dx2"), vf("x2*d/dx1")) == vf("x1*d/dx1 - x2*d/dx2"));
}

TEST_CASE("operator identity on random fields") {
  tu::Rng rng(41);
  for (int t = 0; t < 40; ++t) {
    const VectorField a = tu::random_vector_field(rng, XY);
    const VectorField b = tu::random_vector_field(rng, XY);
    const RationalFunction f = tu::random_rational_function(rng, XY);
    CHECK(bracket(a, b).apply(f) == a.apply(b.apply(f)) - b.apply(a.apply(f)));
  }
}

TEST_CASE("antisymmetry and Jacobi identity") {
  tu::Rng rng(43);
  for (int t = 0; t < 40; ++t) {
    const VectorField a = tu::random_vector_field(rng, XY);
    const VectorField b = tu::random_vector_field(rng, XY);
    const VectorField c = tu::random_vector_field(rng, XY);
    CHECK(bracket(a, b) == -bracket(b, a));
    const VectorField jac =
        bracket(bracket(a, b), c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b);
    CHECK(jac.is_zero());
  }
}

TEST_CASE("Leibniz rule for application") {
  tu::Rng rng(47);
  for (int t = 0; t < 40; ++t) {
    const VectorField d = tu::random_vector_field(rng, XY);
    const RationalFunction f = tu::random_rational_function(rng, XY);
    const RationalFunction g = tu::random_rational_function(rng, XY);
    CHECK(d.apply(f * g) == f * d.apply(g) + g * d.apply(f));
  }
}

TEST_CASE("module structure: [r a, s b] = r a(s) b - s b(r) a + r s [a,b]") {
  tu::Rng rng(53);
  for (int t = 0; t < 40; ++t) {
    const VectorField a = tu::random_vector_field(rng, XY);
    const VectorField b = tu::random_vector_field(rng, XY);
    const RationalFunction r = tu::random_rational_function(rng, XY);
    const RationalFunction s = tu::random_rational_function(rng, XY);
    const VectorField lhs = bracket(r * a, s * b);
    const VectorField rhs =
        (r * a.apply(s)) * b - (s * b.apply(r)) * a + (r * s) * bracket(a, b);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("rendering and parsing") {
  const VectorField d = vf("-2*x1*d/dx1 - x2*d/dx2");
  CHECK(d.to_string() == "-2*x1*d/dx1 - x2*d/dx2");
  CHECK(d.to_latex() == "-2x_1\\partial_{x_1}-x_2\\partial_{x_2}");
  CHECK(VectorField(XY).to_string() == "0");
  CHECK(vf("0").is_zero());
  CHECK(vf("(x1/x2)*d/dx1").coeff(0) == rf("x1/x2"));
  CHECK_THROWS_AS(vf("x1"), ParseError);
  tu::Rng rng(59);
  for (int t = 0; t < 40; ++t) {
    const VectorField a = tu::random_vector_field(rng, XY);
    CHECK(parse_vector_field(a.to_string(), XY) == a);
  }
}

TEST_CASE("variable lists are never coerced") {
  const Vars X({"x1"});
  CHECK_THROWS_AS(bracket(VectorField::basis(XY, 0), VectorField::basis(X, 0)), VariableMismatch);
  CHECK_THROWS_AS(VectorField::basis(XY, 0).apply(parse_rational_function("x1", X)),
                  VariableMismatch);
}
