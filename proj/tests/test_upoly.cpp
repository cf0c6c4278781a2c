#include "doctest.h"

#include "symalg/errors.hpp"
#include "symalg/upoly.hpp"
#include "test_util.hpp"

using namespace symalg;

namespace {

using QPoly = UPoly<Rational>;

QPoly Q(std::vector<long> cs) {
  std::vector<Rational> out;
  for (long c : cs) out.emplace_back(c);
  return QPoly(std::move(out));
}

QPoly random_qpoly(std::size_t max_deg, long max_num = 50, long max_den = 10) {
  std::vector<Rational> cs;
  const std::size_t deg = testutil::rand_int(0, max_deg);
  for (std::size_t i = 0; i <= deg; ++i)
    cs.push_back(Rational(testutil::rand_int(-max_num, max_num),
                          testutil::rand_int(1, max_den)));
  return QPoly(std::move(cs));
}

}  // namespace

TEST_CASE("trailing zeros are trimmed and degree is well-defined") {
  CHECK(Q({1, 0, 0}).size() == 1);
  CHECK(QPoly{}.is_zero());
  CHECK(Q({0, 0, 1}).degree() == 2);
  CHECK(!QPoly{}.degree().has_value());
}

TEST_CASE("derivatives") {
  CHECK(uderive(Q({0, 0, 0, 1})) == Q({0, 0, 3}));       // (X^3)' = 3X^2
  CHECK(uderive_n(Q({1, 2, 3}), 3).is_zero());           // beyond the degree
  CHECK(uderive_n(Q({0, 0, 0, 0, 1}), 4) == Q({24}));    // (X^4)'''' = 4!

  for (int it = 0; it < 50; ++it) {
    const QPoly p = random_qpoly(6);
    const QPoly q = random_qpoly(6);
    CHECK(uderive(uadd(p, q)) == uadd(uderive(p), uderive(q)));
    CHECK(uderive(umul(p, q)) ==
          uadd(umul(uderive(p), q), umul(p, uderive(q))));
  }
}

TEST_CASE("divided derivatives match the factorial oracle") {
  CHECK(nderivn(Q({0, 0, 0, 0, 1}), 2) == Q({0, 0, 6}));  // C(4,2) X^2

  for (int it = 0; it < 50; ++it) {
    const QPoly p = random_qpoly(8);
    const unsigned long i = testutil::rand_int(0, 6);
    // Oracle: repeated plain derivative.
    CHECK(uscale(nderivn(p, i), Rational(factorial(i))) == uderive_n(p, i));
  }
}

TEST_CASE("divided derivatives preserve integrality") {
  for (int it = 0; it < 50; ++it) {
    std::vector<Rational> cs;
    for (int j = 0; j <= 8; ++j) cs.emplace_back(testutil::rand_int(-50, 50));
    const QPoly p{std::move(cs)};
    const unsigned long i = testutil::rand_int(0, 6);
    const QPoly dp = nderivn(p, i);
    for (const Rational& c : dp.coeffs()) CHECK(is_integer(c));
    // Equivalently: every coefficient of the plain i-th derivative is
    // divisible by i!.
    const Integer fi = factorial(i);
    const QPoly di = uderive_n(p, i);
    for (const Rational& c : di.coeffs())
      CHECK(numerator(c) % fi == 0);
  }
}

TEST_CASE("sum of derivatives") {
  CHECK(sd(Q({0, 0, 1}), 0) == Q({2, 2, 1}));  // X^2 + 2X + 2
  const QPoly p = random_qpoly(5);
  CHECK(sd(p, p.size()).is_zero());
  CHECK(sd(Q({7}), 0) == Q({7}));
}

TEST_CASE("root multiplicity by synthetic division") {
  // (X-1)^2 (X-2)
  const QPoly p = upoly_from_roots(
      Rational{1}, {Rational{1}, Rational{1}, Rational{2}});
  CHECK(mroot_mult(p, Rational{1}) == 2);
  CHECK(mroot_mult(p, Rational{2}) == 1);
  CHECK(mroot_mult(p, Rational{5}) == 0);
  CHECK_THROWS_AS(mroot_mult(QPoly{}, Rational{1}), ZeroPolyError);

  // A root of multiplicity m stays a root of multiplicity >= m - i of the
  // i-th derivative.
  const QPoly q = upoly_from_roots(
      Rational{1},
      {Rational{3}, Rational{3}, Rational{3}, Rational{3}, Rational(-1)});
  for (unsigned long i = 0; i < 4; ++i)
    CHECK(mroot_mult(uderive_n(q, i), Rational{3}) >= 4 - i);
}

TEST_CASE("ring operations and evaluation") {
  CHECK(ueval(Q({1, 0, 1}), Rational{2}) == 5);
  CHECK(umul(Q({-1, 1}), Q({-2, 1})) == Q({2, -3, 1}));
  CHECK(ueval(Q({4, 7, 9}), Rational{0}) == 4);
  CHECK(ueval(QPoly{}, Rational{3}) == 0);

  for (int it = 0; it < 30; ++it) {
    const QPoly p = random_qpoly(5);
    const QPoly q = random_qpoly(5);
    const Rational x = testutil::random_rational(9, 5);
    CHECK(ueval(uadd(p, q), x) == ueval(p, x) + ueval(q, x));
    CHECK(ueval(umul(p, q), x) == ueval(p, x) * ueval(q, x));
  }
}

TEST_CASE("linear composition") {
  // p(X) = X^2 composed with 2X + 1.
  CHECK(ucompose_linear(Q({0, 0, 1}), Rational{2}, Rational{1}) ==
        Q({1, 4, 4}));
  const QPoly p = random_qpoly(4);
  CHECK(ucompose_linear(p, Rational{1}, Rational{0}) == p);
}

TEST_CASE("rendering") {
  CHECK(to_string(Q({-6, 11, -6, 1})) == "X^3 - 6*X^2 + 11*X - 6");
  CHECK(to_string(QPoly{}) == "0");
  CHECK(to_string(Q({5})) == "5");
}
