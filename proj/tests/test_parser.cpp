#include "doctest.h"

#include "symalg/errors.hpp"
#include "symalg/parser.hpp"
#include "test_util.hpp"

using namespace symalg;

TEST_CASE("basic expressions") {
  CHECK(parse_poly("0") == MPoly(0));
  CHECK(parse_poly("0", 3) == MPoly(3));
  CHECK(parse_poly("7/3") == MPoly::constant(0, Rational(7, 3)));
  CHECK(parse_poly("x1", 2) == MPoly::variable(2, 1));
  CHECK(parse_poly("-x2 + x2").is_zero());
  CHECK(parse_poly("2*x1^3", 1) ==
        MPoly::from_monomial(Rational{2}, Monomial({3})));
  CHECK(parse_poly("(x1+x2)^2", 2) ==
        parse_poly("x1^2 + 2*x1*x2 + x2^2", 2));
  CHECK(parse_poly("1 - (1 - x1)", 1) == MPoly::variable(1, 1));
}

TEST_CASE("x/y/z aliases") {
  CHECK(parse_poly("x*y*z", 3) == parse_poly("x1*x2*x3", 3));
  CHECK(parse_poly("x + y", 2) == parse_poly("x1 + x2", 2));
  // "x" alone infers arity 1.
  CHECK(parse_poly("x").arity() == 1);
  // Aliases are rejected once a fourth variable is in play.
  CHECK_THROWS_AS(parse_poly("x + x4"), ParseError);
  CHECK_THROWS_AS(parse_poly("y", 4), ParseError);
}

TEST_CASE("arity handling") {
  CHECK(parse_poly("x1 + x3").arity() == 3);
  CHECK(parse_poly("x1", 5).arity() == 5);
  CHECK(parse_poly("5").arity() == 0);
  CHECK_THROWS_AS(parse_poly("x3", 2), ArityError);
  CHECK_THROWS_AS(parse_poly("x0", 2), ParseError);  // indices are 1-based
}

TEST_CASE("syntax errors carry positions") {
  CHECK_THROWS_AS(parse_poly(""), ParseError);
  CHECK_THROWS_AS(parse_poly("x1 +"), ParseError);
  CHECK_THROWS_AS(parse_poly("x1 ^ -2"), ParseError);  // exponents are naturals
  CHECK_THROWS_AS(parse_poly("(x1 + x2", 2), ParseError);
  CHECK_THROWS_AS(parse_poly("x1 x2", 2), ParseError);  // no implicit product
  CHECK_THROWS_AS(parse_poly("3 // 4"), ParseError);
  CHECK_THROWS_AS(parse_poly("w + 1"), ParseError);

  try {
    parse_poly("x1 +\n* x2", 2);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 1);
  }
}

TEST_CASE("the symmetric running example parses") {
  const MPoly p =
      parse_poly("x^3*y + x^3*z + x*y^3 + x*z^3 + y^3*z + y*z^3", 3);
  CHECK(p.total_degree() == 4);
  CHECK(p.terms().size() == 6);
  CHECK(p.coeff(Monomial({3, 1, 0})) == 1);
}

TEST_CASE("printing round-trips through the parser") {
  CHECK(MPoly(3).to_string() == "0");
  // Canonical order is descending graded-lex, so x1*x3 > x2^2 at degree 2.
  CHECK(parse_poly("x1^2*x2 - 2*x2^2 - x1*x3", 3).to_string() ==
        "x1^2*x2 - x1*x3 - 2*x2^2");

  for (int it = 0; it < 50; ++it) {
    const std::size_t n = testutil::rand_int(0, 4);
    const MPoly p = testutil::random_mpoly(n, 6, 5);
    CHECK(parse_poly(p.to_string(), n) == p);
  }
}
