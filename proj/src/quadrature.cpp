#include "symalg/quadrature.hpp"

#include <cmath>

#include "symalg/errors.hpp"

namespace symalg {

namespace {

struct SimpsonState {
  const std::function<double(double)>& f;
  int max_depth;
};

double simpson(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double recurse(const SimpsonState& st, double a, double b, double fa,
               double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = st.f(lm);
  const double frm = st.f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double err = left + right - whole;
  if (std::fabs(err) <= 15.0 * tol)
    return left + right + err / 15.0;
  if (depth >= st.max_depth)
    throw QuadratureError("adaptive_simpson: subdivision limit reached");
  return recurse(st, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
         recurse(st, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, unsigned long max_intervals) {
  int max_depth = 0;
  while ((1ul << max_depth) < max_intervals) ++max_depth;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = simpson(fa, fm, fb, b - a);
  SimpsonState st{f, max_depth};
  return recurse(st, a, b, fa, fm, fb, whole, tol, 0);
}

}  // namespace symalg
