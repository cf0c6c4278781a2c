#include "symalg/niven.hpp"

#include <cmath>

#include "symalg/errors.hpp"
#include "symalg/quadrature.hpp"

namespace symalg {

bool NivenReport::all_ok() const {
  if (!(T_integer && lemma3_ok && Gp_integer && Fpd0_decomposition_ok &&
        Fpd_alpha_divisible && divisible_by_fact_p_minus_1 &&
        !divisible_by_fact_p))
    return false;
  for (double r : quadrature_residuals)
    if (!(r < quadrature_tol)) return false;
  return true;
}

nlohmann::json NivenReport::to_json() const {
  return {{"p_used", p_used},
          {"bound_p", bound_p},
          {"T_integer", T_integer},
          {"Fp_degree", Fp_degree},
          {"lemma3_ok", lemma3_ok},
          {"Gp_integer", Gp_integer},
          {"Fpd0_decomposition_ok", Fpd0_decomposition_ok},
          {"Fpd_alpha_divisible", Fpd_alpha_divisible},
          {"Ep_prime_divisibility",
           {{"divisible_by_fact_p_minus_1", divisible_by_fact_p_minus_1},
            {"divisible_by_fact_p", divisible_by_fact_p}}},
          {"Ep_prime", to_string(ep_prime)},
          {"quadrature_residuals", quadrature_residuals},
          {"quadrature_tol", quadrature_tol},
          {"all_ok", all_ok()}};
}

bool is_integer_upoly(const UPoly<Rational>& p) {
  for (const Rational& c : p.coeffs())
    if (!is_integer(c)) return false;
  return true;
}

UPoly<Rational> build_T(const Integer& c, const std::vector<Rational>& alpha) {
  for (const Rational& a : alpha)
    if (is_zero(a)) throw InvalidInputError("build_T: zero root");
  UPoly<Rational> T = vieta(Rational(c), alpha);
  if (T.degree() != alpha.size())
    throw InternalProgressError("build_T: degree mismatch");
  return T;
}

UPoly<Rational> build_Fp(const UPoly<Rational>& T, unsigned long p) {
  if (T.is_zero()) throw InvalidInputError("build_Fp: zero T");
  return ushift(upow(T, p), p - 1);
}

bool check_lemma3(const UPoly<Rational>& Fp, unsigned long p) {
  if (!is_integer_upoly(Fp))
    throw IntegralityError("check_lemma3: F_p must have integer coefficients");
  const Integer fp = factorial(p);
  const UPoly<Rational> tail = sd(Fp, p);
  for (const Rational& c : tail.coeffs())
    if (numerator(c) % fp != 0) return false;
  return true;
}

UPoly<Rational> build_Gp(const UPoly<Rational>& Fp, unsigned long p) {
  // sum_{i>=p} F_p^(i) / p! = sum_{i>=p} (i!/p!) * nderivn(F_p, i); the
  // multipliers i!/p! are integers, so integer input stays integer.
  UPoly<Rational> acc;
  Integer multiplier{1};  // i!/p!, starting at i = p
  for (unsigned long i = p; i < Fp.size(); ++i) {
    if (i > p) multiplier *= i;
    acc = uadd(acc, uscale(nderivn(Fp, i), Rational(multiplier)));
  }
  if (!usub(uscale(acc, Rational(factorial(p))), sd(Fp, p)).is_zero())
    throw IntegralityError("build_Gp: p! * G_p != sd(F_p, p)");
  return acc;
}

void check_Epd_structure(const SkeletonInput& in, NivenReport& report) {
  if (in.n == 0 || in.c == 0 || in.k == 0)
    throw InvalidInputError("check_Epd_structure: n, c, k must be nonzero");
  if (in.alpha.size() != in.n || in.gamma.size() != in.n)
    throw InvalidInputError("check_Epd_structure: sequence length mismatch");
  if (!is_prime(in.p))
    throw InvalidInputError("check_Epd_structure: p must be prime");

  const UPoly<Rational> T = build_T(in.c, in.alpha);
  report.T_integer = is_integer_upoly(T);
  if (!report.T_integer)
    throw InvalidInputError("check_Epd_structure: T must be integer");

  const unsigned long p = in.p;
  const UPoly<Rational> Fp = build_Fp(T, p);
  report.Fp_degree = *Fp.degree();
  report.lemma3_ok = check_lemma3(Fp, p);
  const UPoly<Rational> Gp = build_Gp(Fp, p);
  report.Gp_integer = is_integer_upoly(Gp);

  const Integer fact_p = factorial(p);
  const Integer fact_p1 = factorial(p - 1);
  const UPoly<Rational> Fpd = sd(Fp, 0);

  const Rational T0 = ueval(T, Rational{0});
  const Rational Fpd0 = ueval(Fpd, Rational{0});
  report.Fpd0_decomposition_ok =
      Fpd0 == Rational(fact_p1) * rational_pow(T0, p) +
                  Rational(fact_p) * ueval(Gp, Rational{0});

  report.Fpd_alpha_divisible = true;
  for (const Rational& a : in.alpha)
    if (ueval(Fpd, a) != Rational(fact_p) * ueval(Gp, a))
      report.Fpd_alpha_divisible = false;

  const Rational cnp{int_pow(in.c, in.n * p)};
  Rational ep = cnp * Rational(in.k) * Fpd0;
  for (std::size_t i = 0; i < in.n; ++i)
    ep += cnp * Rational(in.gamma[i]) * ueval(Fpd, in.alpha[i]);
  report.ep_prime = ep;

  if (is_integer(ep)) {
    const Integer e = numerator(ep);
    report.divisible_by_fact_p_minus_1 = e % fact_p1 == 0;
    report.divisible_by_fact_p = e % fact_p == 0;
  } else {
    report.divisible_by_fact_p_minus_1 = false;
    report.divisible_by_fact_p = false;
  }
}

namespace {

// Residual of the integration-by-parts identity. With relative set, both the
// quadrature target and the returned residual are scaled by the magnitude of
// the two identity terms: for high-degree F_p, P_d(0) and e^(-alpha)
// P_d(alpha) each reach 1e10 and beyond and cancel almost completely, so an
// absolute residual is limited to roughly that magnitude times the double
// epsilon no matter how precise the quadrature is.
double lemma2_residual(const UPoly<Rational>& P, double alpha, double tol,
                       bool relative) {
  if (!(tol > 0)) throw InvalidInputError("quadrature tolerance must be > 0");
  const UPoly<Rational> Pd = sd(P, 0);
  const double lhs = ueval_double(Pd, 0.0);
  const double rhs = std::exp(-alpha) * ueval_double(Pd, alpha);
  const double identity = lhs - rhs;
  const double scale =
      relative ? std::max({1.0, std::fabs(lhs), std::fabs(rhs)}) : 1.0;
  const auto f = [&](double x) {
    return alpha * std::exp(-alpha * x) * ueval_double(P, alpha * x);
  };
  const double integral = adaptive_simpson(f, 0.0, 1.0, scale * tol / 10.0);
  return std::fabs(integral - identity) / scale;
}

}  // namespace

double quadrature_check_lemma2(const UPoly<Rational>& P, double alpha,
                               double tol) {
  return lemma2_residual(P, alpha, tol, false);
}

unsigned long find_p(const Integer& a, const Integer& b,
                     const std::vector<unsigned long>& lower_bounds) {
  if (a < 1 || b < 1) throw InvalidInputError("find_p: a, b must be >= 1");
  for (unsigned long p = 2;; ++p) {
    if (!is_prime(p)) continue;
    bool above = true;
    for (unsigned long bound : lower_bounds)
      if (p <= bound) above = false;
    if (!above) continue;
    if (a * int_pow(b, p - 1) < factorial(p - 1)) return p;
  }
}

NivenReport e_case(std::size_t n_e, const std::vector<Integer>& a,
                   std::optional<unsigned long> p, double tol) {
  if (n_e == 0 || a.size() != n_e + 1)
    throw InvalidInputError("e_case: need n_e + 1 coefficients");
  if (a[0] == 0) throw InvalidInputError("e_case: a_0 must be nonzero");
  bool any = false;
  for (std::size_t i = 1; i <= n_e; ++i)
    if (a[i] != 0) any = true;
  if (!any)
    throw InvalidInputError("e_case: some a_i with i >= 1 must be nonzero");

  SkeletonInput in;
  in.n = n_e;
  in.c = 1;
  in.k = a[0];
  for (std::size_t i = 0; i < n_e; ++i) {
    in.alpha.push_back(Rational(static_cast<unsigned long>(i + 1)));
    in.gamma.push_back(a[i + 1]);
  }

  const UPoly<Rational> T = build_T(in.c, in.alpha);
  const Rational T0 = ueval(T, Rational{0});
  const Integer t0_abs = abs(numerator(T0));  // T(0) is an integer here
  std::vector<unsigned long> bounds{in.c.convert_to<unsigned long>(),
                                    abs(in.k).convert_to<unsigned long>(),
                                    t0_abs.convert_to<unsigned long>()};
  // The analytic constants behind the factorial-dominance bound are not
  // reproduced; the search is run with a = b = 1, leaving the prime and
  // magnitude bounds as the active constraints.
  NivenReport report;
  report.bound_p = find_p(1, 1, bounds);
  in.p = p.value_or(report.bound_p);
  if (!is_prime(in.p)) throw InvalidInputError("e_case: p must be prime");
  report.p_used = in.p;
  report.quadrature_tol = tol;

  check_Epd_structure(in, report);

  const UPoly<Rational> Fp = build_Fp(T, in.p);
  for (const Rational& alpha : in.alpha)
    report.quadrature_residuals.push_back(
        lemma2_residual(Fp, alpha.convert_to<double>(), tol, true));
  return report;
}

PiConstruction pi_construct(std::size_t n_pi) {
  if (n_pi < 1 || n_pi > 4)
    throw InvalidInputError("pi_construct: n_pi must be in 1..4");

  PiConstruction out;
  for (unsigned long mask = 1; mask < (1ul << n_pi); ++mask) {
    MPoly form(n_pi);
    for (std::size_t i = 0; i < n_pi; ++i)
      if (mask & (1ul << i)) form += MPoly::variable(n_pi, i + 1);
    out.alpha_prime.push_back(std::move(form));
  }

  if (!perm_stable_tuple(out.alpha_prime))
    throw InternalProgressError(
        "pi_construct: subset-sum multiset must be permutation-stable");

  const UPoly<MPoly> product = upoly_from_roots(
      MPoly::constant(n_pi, Rational{1}), out.alpha_prime);
  for (const MPoly& coeff : product.coeffs()) {
    if (!is_symmetric(coeff))
      throw InternalProgressError(
          "pi_construct: product coefficient must be symmetric in beta");
    Decomposition d = symf(coeff);
    if (!d.verify() || !is_integer_poly(d.t))
      throw InternalProgressError(
          "pi_construct: decomposition must verify with integer coefficients");
    out.product_coeffs.push_back(coeff);
    out.decompositions.push_back(std::move(d));
  }
  return out;
}

std::vector<Rational> pi_coeff_values(std::size_t n_pi,
                                      const std::vector<Rational>& b) {
  if (b.size() != n_pi)
    throw InvalidInputError("pi_coeff_values: need n_pi coefficients");
  const PiConstruction pc = pi_construct(n_pi);
  // Monic B = X^n + b[n-1] X^(n-1) + ... + b[0]; Vieta gives
  // sigma_j(beta) = (-1)^j b[n-j].
  std::vector<Rational> sigma(n_pi);
  for (std::size_t j = 1; j <= n_pi; ++j)
    sigma[j - 1] = (j % 2 == 0) ? b[n_pi - j] : -b[n_pi - j];
  std::vector<Rational> values;
  values.reserve(pc.decompositions.size());
  for (const Decomposition& d : pc.decompositions)
    values.push_back(d.t.eval(sigma));
  return values;
}

}  // namespace symalg
