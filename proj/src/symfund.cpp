#include "symalg/symfund.hpp"

#include <algorithm>

#include "symalg/errors.hpp"

namespace symalg {

MPoly mesym(std::size_t n, std::size_t k) {
  if (k == 0) return MPoly::constant(n, Rational{1});
  MPoly out(n);
  if (k > n) return out;  // no k-subsets: empty sum
  // Subsets enumerated in increasing binary-counter order over {1..n}.
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountl(mask)) != k) continue;
    std::vector<unsigned> exps(n, 0u);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ul << i)) exps[i] = 1;
    out += MPoly::from_monomial(Rational{1}, Monomial(std::move(exps)));
  }
  return out;
}

std::vector<MPoly> esym_basis(std::size_t n) {
  std::vector<MPoly> basis;
  basis.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) basis.push_back(mesym(n, k));
  return basis;
}

UPoly<Rational> vieta(const Rational& c, const std::vector<Rational>& roots) {
  const std::size_t n = roots.size();
  std::vector<Rational> coeffs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const Rational sigma = mesym(n, n - i).eval(roots);
    coeffs[i] = c * sigma;
    if ((n - i) % 2 != 0) coeffs[i] = -coeffs[i];
  }
  return UPoly<Rational>(std::move(coeffs));
}

namespace {

// X^m composed with the sigma basis: prod_i mesym(n, i+1)^(m_i).
MPoly compose_with_basis(const Monomial& m, const std::vector<MPoly>& basis) {
  const std::size_t n = m.arity();
  MPoly acc = MPoly::constant(n, Rational{1});
  for (std::size_t i = 0; i < n; ++i)
    if (m[i] != 0) acc = acc * pow(basis[i], m[i]);
  return acc;
}

Symf1Result symf1_with_basis(const MPoly& p, const std::vector<MPoly>& basis) {
  if (p.is_zero()) return {MPoly(p.arity()), MPoly(p.arity())};
  const Monomial& lead = p.lead_monomial();
  const Rational& alpha = p.lead_coeff();
  const std::size_t n = p.arity();
  std::vector<unsigned> exps(n);
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned next = (i + 1 < n) ? lead[i + 1] : 0u;
    exps[i] = lead[i] > next ? lead[i] - next : 0u;  // truncated subtraction
  }
  const Monomial m(std::move(exps));
  const MPoly partial = MPoly::from_monomial(alpha, m);
  const MPoly remainder =
      p - compose_with_basis(m, basis).scaled(alpha);
  return {partial, remainder};
}

}  // namespace

Symf1Result symf1(const MPoly& p) {
  return symf1_with_basis(p, esym_basis(p.arity()));
}

bool Decomposition::verify() const {
  return remainder.is_zero() &&
         t.compose(esym_basis(input.arity())) == input;
}

nlohmann::json Decomposition::to_json() const {
  return {{"t", t.to_json()},
          {"iterations", iterations},
          {"weight_bound", weight_bound},
          {"input_degree", input_degree},
          {"verified", verify()}};
}

Decomposition symf(const MPoly& p, std::optional<std::size_t> max_fuel) {
  if (!is_symmetric(p))
    throw NotSymmetricError("symf: input polynomial is not symmetric");
  const std::size_t n = p.arity();
  const std::vector<MPoly> basis = esym_basis(n);

  Decomposition d{p, MPoly(n), MPoly(n), 0, 0, 0};
  d.input_degree = p.is_zero() ? 0 : p.total_degree();

  std::size_t fuel;
  if (max_fuel) {
    fuel = *max_fuel;
  } else {
    // Monomials of degree <= deg(p) in n variables: a safe overcount of
    // the number of strict decreases of the leading monomial.
    const Integer count = binomial(d.input_degree + n, n);
    fuel = count.convert_to<std::size_t>();
  }

  MPoly r = p;
  while (!r.is_zero()) {
    if (d.iterations >= fuel)
      throw InternalProgressError("symf: fuel exhausted before remainder 0");
    const Monomial prev_lead = r.lead_monomial();
    Symf1Result step = symf1_with_basis(r, basis);
    if (!step.remainder.is_zero() &&
        mnmc_cmp(step.remainder.lead_monomial(), prev_lead) >= 0)
      throw InternalProgressError("symf: leading monomial failed to shrink");
    d.t += step.partial;
    r = std::move(step.remainder);
    ++d.iterations;
  }

  d.remainder = r;
  for (const auto& [m, c] : d.t.terms())
    d.weight_bound = std::max(d.weight_bound, m.weight());
  if (d.weight_bound > d.input_degree)
    throw InternalProgressError("symf: weight certificate exceeds degree");
  return d;
}

bool perm_stable_tuple(const std::vector<MPoly>& t) {
  if (t.empty()) return true;
  const std::size_t k = t[0].arity();
  for (const MPoly& q : t)
    if (q.arity() != k) throw ArityError("perm_stable_tuple: mixed arities");
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const Permutation s = Permutation::transposition(k, i, i + 1);
    // Multiset equality by match-and-erase.
    std::vector<MPoly> pool = t;
    for (const MPoly& q : t) {
      const MPoly image = msym(s, q);
      auto it = std::find(pool.begin(), pool.end(), image);
      if (it == pool.end()) return false;
      pool.erase(it);
    }
  }
  return true;
}

bool check_msym_comp(const MPoly& p, const std::vector<MPoly>& t) {
  if (t.size() != p.arity())
    throw ArityError("check_msym_comp: tuple length must equal p's arity");
  if (!perm_stable_tuple(t)) return false;
  if (is_symmetric(p) && !is_symmetric(p.compose(t)))
    throw InternalProgressError(
        "check_msym_comp: composition of a symmetric polynomial with a "
        "permutation-stable tuple must be symmetric");
  return true;
}

}  // namespace symalg
