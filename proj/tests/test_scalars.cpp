#include <doctest.h>

#include "liederiv/parse.hpp"
#include "testutil.hpp"

using namespace liederiv;
namespace tu = liederiv::testutil;

namespace {
const Vars XY({"x1", "x2"});
RationalFunction rf(const std::string& s) { return parse_rational_function(s, XY); }
Polynomial poly(const std::string& s) { return parse_polynomial(s, XY); }
} // namespace

TEST_CASE("rational canonical form") {
  const Rational q = parse_rational("4/6");
  CHECK(rat_num(q) == 2);
  CHECK(rat_den(q) == 3);
  CHECK(rational_to_string(parse_rational("-8/2")) == "-4");
  CHECK_THROWS_AS(parse_rational("2/abc"), ParseError);
  CHECK(rational_to_latex(parse_rational("-1/3")) == "-\\frac{1}{3}");
}

TEST_CASE("grlex order and degrees") {
  const Polynomial p = poly("x2^3 + x1^2*x2 + x1");
  CHECK(p.total_degree() == 3);
  // leading term has max total degree, ties broken lexicographically
  CHECK(p.leading_monomial() == Monomial{2, 1});
  CHECK(Polynomial::zero(XY).total_degree() == std::nullopt);
  CHECK(poly("5").total_degree() == 0);
}

TEST_CASE("scalar_arith examples") {
  CHECK((rf("x1") + rf("-x1")).is_zero());
  CHECK((rf("x1/x2") * rf("x2/x1")).is_one());
  CHECK(rf("1/x1") + rf("1/x2") == rf("(x1+x2)/(x1*x2)"));
  CHECK_THROWS_AS(rf("x1") / RationalFunction::zero(XY), DivisionByZero);
}

TEST_CASE("partial_derivative examples") {
  CHECK(rf("x1^2").derivative(0) == rf("2*x1"));
  CHECK(rf("x2").derivative(0).is_zero());
  CHECK(rf("x1*x2/(x1+x2)").derivative(0) == rf("x2^2/(x1+x2)^2"));
}

TEST_CASE("normalization: canonical denominator") {
  // gcd cancellation plus primitive positive denominator
  const RationalFunction f(poly("2*x1^2 - 2*x2^2"), poly("4*x1 + 4*x2"));
  CHECK(f == rf("(x1-x2)/2"));
  const RationalFunction g(poly("x1"), poly("-x2"));
  CHECK(g.num() == poly("-x1"));
  CHECK(g.den() == poly("x2"));
  CHECK(RationalFunction(poly("0"), poly("x1")).den().is_one());
}

TEST_CASE("normalization idempotence on random inputs") {
  tu::Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const RationalFunction f = tu::random_rational_function(rng, XY);
    CHECK(RationalFunction(f.num(), f.den()) == f);
    // scaling numerator and denominator by a common factor is invisible
    const Polynomial s = tu::random_nonzero_polynomial(rng, XY);
    CHECK(RationalFunction(f.num() * s, f.den() * s) == f);
  }
}

TEST_CASE("ring axioms hold exactly on randomized inputs") {
  tu::Rng rng(7);
  for (int t = 0; t < 60; ++t) {
    const RationalFunction a = tu::random_rational_function(rng, XY);
    const RationalFunction b = tu::random_rational_function(rng, XY);
    const RationalFunction c = tu::random_rational_function(rng, XY);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("Leibniz rule for the formal derivative") {
  tu::Rng rng(13);
  for (int t = 0; t < 40; ++t) {
    const RationalFunction f = tu::random_rational_function(rng, XY);
    const RationalFunction g = tu::random_rational_function(rng, XY);
    for (std::size_t v = 0; v < 2; ++v)
      CHECK((f * g).derivative(v) == f * g.derivative(v) + g * f.derivative(v));
  }
}

TEST_CASE("equality agrees with cross-multiplication") {
  tu::Rng rng(17);
  for (int t = 0; t < 60; ++t) {
    const RationalFunction a = tu::random_rational_function(rng, XY);
    const RationalFunction b = tu::random_rational_function(rng, XY);
    const Polynomial cross = a.num() * b.den() - b.num() * a.den();
    CHECK((a == b) == cross.is_zero());
  }
}

TEST_CASE("polynomial gcd via content and subresultant PRS") {
  const Polynomial a = poly("x1^2 - x2^2");
  const Polynomial b = poly("x1^2 + 2*x1*x2 + x2^2");
  CHECK(Polynomial::gcd(a, b) == poly("x1 + x2"));
  CHECK(Polynomial::gcd(poly("0"), poly("-3*x1")) == poly("x1"));
  CHECK(Polynomial::gcd(poly("6"), poly("4")) == poly("1"));
  CHECK(Polynomial::gcd(poly("2*x1 + 2"), poly("4*x1^2 - 4")) == poly("x1 + 1"));
  // multivariate content recursion
  const Polynomial f = poly("x1^2*x2 + x1*x2^2");            // x1 x2 (x1 + x2)
  const Polynomial g = poly("x1^2*x2^2 + 2*x1*x2^3 + x2^4"); // x2^2 (x1 + x2)^2
  CHECK(Polynomial::gcd(f, g) == poly("x1*x2 + x2^2"));
  tu::Rng rng(23);
  for (int t = 0; t < 30; ++t) {
    const Polynomial p = tu::random_polynomial(rng, XY);
    const Polynomial q = tu::random_polynomial(rng, XY);
    const Polynomial s = tu::random_nonzero_polynomial(rng, XY);
    const Polynomial g2 = Polynomial::gcd(p * s, q * s);
    if (!p.is_zero() || !q.is_zero()) {
      // the common factor must divide the gcd
      CHECK_NOTHROW(Polynomial::div_exact(g2, Polynomial::gcd(s, g2)));
      CHECK(Polynomial::gcd(s, g2) == Polynomial::gcd(s, s));
    }
  }
}

TEST_CASE("content and primitive part") {
  const Polynomial p = poly("2/3*x1 + 4/3");
  CHECK(p.content() == parse_rational("2/3"));
  CHECK(p.primitive_part() == poly("x1 + 2"));
  CHECK(poly("0").content() == 0);
}

TEST_CASE("text rendering and parsing round-trip") {
  CHECK(poly("2*x1^2*x2 - 1/3").to_string() == "2*x1^2*x2 - 1/3");
  CHECK(poly("2*x1^2*x2 - 1/3").to_latex() == "2x_1^2x_2 - \\frac{1}{3}");
  CHECK(rf("x1/(x1+x2)").to_latex() == "\\frac{x_1}{x_1 + x_2}");
  CHECK(rf("0").to_string() == "0");
  tu::Rng rng(29);
  for (int t = 0; t < 60; ++t) {
    const RationalFunction f = tu::random_rational_function(rng, XY);
    CHECK(parse_rational_function(f.to_string(), XY) == f);
  }
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(rf("x3 + 1"), ParseError);
  CHECK_THROWS_AS(rf("x1 +"), ParseError);
  CHECK_THROWS_AS(rf("(x1"), ParseError);
  CHECK_THROWS_AS(rf("x1 ^ x2"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1/x1", XY), ParseError);
  CHECK(rf("-x1^2") == -(rf("x1") * rf("x1"))); // unary minus binds outside '^'
}

TEST_CASE("evaluation and substitution") {
  const std::vector<Rational> pt = {Rational(2), Rational(3)};
  CHECK(rf("x1*x2 + 1/2").evaluate(pt) == parse_rational("13/2"));
  CHECK_THROWS_AS(rf("1/(x1-2)").evaluate(pt), DivisionByZero);
  const Vars Z({"z1"});
  const std::vector<RationalFunction> vals = {parse_rational_function("z1", Z),
                                              parse_rational_function("z1^2", Z)};
  CHECK(rf("x1*x2").substitute(vals) == parse_rational_function("z1^3", Z));
}
