#include "doctest.h"

#include <cmath>

#include "symalg/quadrature.hpp"

using namespace symalg;

TEST_CASE("adaptive Simpson on closed forms") {
  const double i1 = adaptive_simpson(
      [](double x) { return std::exp(-x); }, 0.0, 1.0, 1e-12);
  CHECK(std::fabs(i1 - (1.0 - std::exp(-1.0))) < 1e-11);

  const double i2 = adaptive_simpson(
      [](double x) { return x * x; }, 0.0, 1.0, 1e-12);
  CHECK(std::fabs(i2 - 1.0 / 3.0) < 1e-12);  // Simpson is exact on cubics

  const double i3 = adaptive_simpson(
      [](double x) { return std::sin(x); }, 0.0, 3.141592653589793, 1e-10);
  CHECK(std::fabs(i3 - 2.0) < 1e-9);
}

TEST_CASE("oscillatory integrand still converges") {
  const double i = adaptive_simpson(
      [](double x) { return std::cos(20.0 * x); }, 0.0, 1.0, 1e-10);
  CHECK(std::fabs(i - std::sin(20.0) / 20.0) < 1e-9);
}
