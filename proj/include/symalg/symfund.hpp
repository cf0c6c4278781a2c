#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "symalg/mpoly.hpp"
#include "symalg/upoly.hpp"

#include "json.hpp"

namespace symalg {

/// Elementary symmetric polynomial: sum over the k-element subsets h of
/// {1..n} of the products prod_{i in h} X_i. mesym(n, 0) = 1, and k > n
/// yields the zero polynomial (empty sum).
MPoly mesym(std::size_t n, std::size_t k);

/// The tuple [mesym(n,1), ..., mesym(n,n)] used throughout decomposition.
std::vector<MPoly> esym_basis(std::size_t n);

/// Coefficients of c * prod (X - roots[i]), read off the elementary
/// symmetric polynomials: coeff of X^i is c * (-1)^(n-i) * sigma_{n,n-i}
/// evaluated at the roots.
UPoly<Rational> vieta(const Rational& c, const std::vector<Rational>& roots);

struct Symf1Result {
  MPoly partial;
  MPoly remainder;
};

/// One decomposition step. For nonzero p with leading term
/// alpha * X^(k_1,...,k_n), forms m = (k_1 - k_2, ..., k_{n-1} - k_n, k_n)
/// (truncated subtraction) and returns
/// (alpha * X^m, p - alpha * (X^m composed with the sigma basis)).
/// For symmetric p the remainder is symmetric and is zero or has a strictly
/// smaller leading monomial.
Symf1Result symf1(const MPoly& p);

/// Result of the full decomposition of a symmetric polynomial into the
/// elementary symmetric basis, with its certificate fields.
struct Decomposition {
  MPoly input;           ///< the polynomial that was decomposed
  MPoly t;               ///< decomposition: input == t composed with sigmas
  MPoly remainder;       ///< zero on success
  std::size_t iterations = 0;
  unsigned long weight_bound = 0;  ///< max weight over the support of t
  unsigned long input_degree = 0;  ///< total degree of the input

  /// Re-runs the recomposition certificate exactly.
  bool verify() const;

  nlohmann::json to_json() const;
};

/// Iterates symf1 until the remainder vanishes. Requires symmetric input
/// (NotSymmetricError otherwise). Default fuel is the number of monomials
/// of degree <= deg(p) in n variables, an overcount of the iteration count;
/// exhausting it raises InternalProgressError, as does any step whose
/// remainder fails to shrink.
Decomposition symf(const MPoly& p,
                   std::optional<std::size_t> max_fuel = std::nullopt);

/// Premise of the symmetric-composition lemma: the multiset {t_i} is stable
/// under every permutation of the k variables of the t_i (checked on the
/// adjacent transpositions).
bool perm_stable_tuple(const std::vector<MPoly>& t);

/// Returns perm_stable_tuple(t); when that holds and p is symmetric, also
/// asserts that the composition p(t_1, ..., t_n) is symmetric.
bool check_msym_comp(const MPoly& p, const std::vector<MPoly>& t);

}  // namespace symalg
