#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "symalg/mpoly.hpp"
#include "symalg/symfund.hpp"
#include "symalg/upoly.hpp"

#include "json.hpp"

namespace symalg {

/// One instantiation of the shared transcendence-proof skeleton:
/// T = c * prod (X - alpha_i), the hypothesised relation
/// k + sum gamma_i e^{alpha_i} = 0, and the prime p.
struct SkeletonInput {
  std::size_t n = 0;            ///< count of alphas; nonzero
  Integer c{1};                 ///< leading coefficient of T; nonzero
  Integer k{0};                 ///< nonzero integer
  std::vector<Integer> gamma;   ///< n integers
  std::vector<Rational> alpha;  ///< n nonzero rationals
  unsigned long p = 0;          ///< prime
};

/// Exact divisibility verdicts and numeric quadrature residuals for one
/// skeleton run. On a successful e-skeleton run, E'_p is divisible by
/// (p-1)! and not by p!.
struct NivenReport {
  unsigned long p_used = 0;
  unsigned long bound_p = 0;  ///< smallest admissible prime from the search
  bool T_integer = false;
  std::size_t Fp_degree = 0;
  bool lemma3_ok = false;
  bool Gp_integer = false;
  bool Fpd0_decomposition_ok = false;
  bool Fpd_alpha_divisible = false;
  bool divisible_by_fact_p_minus_1 = false;
  bool divisible_by_fact_p = false;
  Rational ep_prime{0};  ///< exact value of E'_p
  std::vector<double> quadrature_residuals;
  double quadrature_tol = 0.0;

  bool all_ok() const;
  nlohmann::json to_json() const;
};

bool is_integer_upoly(const UPoly<Rational>& p);

/// T = c * prod (X - alpha_i), expanded through Vieta. All alphas must be
/// nonzero (InvalidInputError otherwise).
UPoly<Rational> build_T(const Integer& c, const std::vector<Rational>& alpha);

/// F_p = X^(p-1) * T^p.
UPoly<Rational> build_Fp(const UPoly<Rational>& T, unsigned long p);

/// True iff every coefficient of sum_{i >= p} F_p^(i) is divisible by p!.
/// Requires integer coefficients (IntegralityError otherwise).
bool check_lemma3(const UPoly<Rational>& Fp, unsigned long p);

/// G_p = (sum_{i=p}^{deg F_p} F_p^(i)) / p!, computed through divided
/// derivatives with integer multipliers i!/p! so integrality is preserved
/// term by term.
UPoly<Rational> build_Gp(const UPoly<Rational>& Fp, unsigned long p);

/// Verifies the exact structure of F_pd and E'_p and fills the
/// corresponding report fields:
///   (a) F_pd(0) == (p-1)! T(0)^p + p! G_p(0)
///   (b) F_pd(alpha_i) == p! G_p(alpha_i) for each i
///   (c) E'_p := c^(np) k F_pd(0) + c^(np) sum gamma_i F_pd(alpha_i)
///       is divisible by (p-1)!
///   (d) divisibility of E'_p by p! is recorded (expected false whenever
///       p > max(c, |k|, |T(0)|) and p is prime).
void check_Epd_structure(const SkeletonInput& in, NivenReport& report);

/// |integral_0^1 alpha e^(-alpha x) P(alpha x) dx - (P_d(0) -
/// e^(-alpha) P_d(alpha))|, the integral taken by adaptive Simpson with
/// error target tol/10.
double quadrature_check_lemma2(const UPoly<Rational>& P, double alpha,
                               double tol);

/// Smallest prime p with a * b^(p-1) < (p-1)! that exceeds every lower
/// bound. Terminates because b^n / n! tends to 0.
unsigned long find_p(const Integer& a, const Integer& b,
                     const std::vector<unsigned long>& lower_bounds);

/// Runs the whole skeleton for the e-case instantiation: alpha_i = i+1,
/// gamma_i = a[i+1], k = a[0], c = 1, T = (X-1)...(X-n_e). Requires
/// a[0] != 0 and some a[i] != 0 for i >= 1. Auto-selects p when absent.
/// The recorded quadrature residuals are relative to the magnitude of the
/// identity side, which grows past 1e10 for the high-degree F_p.
NivenReport e_case(std::size_t n_e, const std::vector<Integer>& a,
                   std::optional<unsigned long> p = std::nullopt,
                   double tol = 1e-8);

/// The pi-case subset-sum construction, run symbolically on the roots
/// beta_1..beta_{n_pi} as indeterminates.
struct PiConstruction {
  /// Subset sums sum_{i in S} beta_i over nonempty S, binary-counter order.
  std::vector<MPoly> alpha_prime;
  /// Coefficients of prod_j (X - alpha'_j), ascending by power of X.
  std::vector<MPoly> product_coeffs;
  /// symf decomposition of each coefficient, same order.
  std::vector<Decomposition> decompositions;
};

/// Builds the construction for 1 <= n_pi <= 4 and checks on the way that
/// the alpha' multiset is permutation-stable, every product coefficient is
/// symmetric, and every decomposition verifies with integer coefficients.
PiConstruction pi_construct(std::size_t n_pi);

/// Evaluates the decomposed product coefficients at the elementary
/// symmetric values read off a monic B = X^n + b[n-1] X^(n-1) + ... + b[0]
/// via Vieta: sigma_j = (-1)^j b[n-j]. Returns the rational coefficient
/// values of prod (X - alpha'_j), ascending.
std::vector<Rational> pi_coeff_values(std::size_t n_pi,
                                      const std::vector<Rational>& b);

}  // namespace symalg
