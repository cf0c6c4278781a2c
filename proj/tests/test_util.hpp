#pragma once

#include <random>
#include <vector>

#include "symalg/mpoly.hpp"

namespace testutil {

using symalg::Monomial;
using symalg::MPoly;
using symalg::Permutation;
using symalg::Rational;

inline std::mt19937& rng() {
  static std::mt19937 gen(0x5eed);
  return gen;
}

inline long rand_int(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng());
}

/// Nonzero rational with |numerator| <= max_num, denominator <= max_den.
inline Rational random_rational(long max_num = 100, long max_den = 100) {
  long num = 0;
  while (num == 0) num = rand_int(-max_num, max_num);
  return Rational(num, rand_int(1, max_den));
}

/// Random monomial with total degree <= max_deg.
inline Monomial random_monomial(std::size_t arity, unsigned max_deg) {
  std::vector<unsigned> exps(arity, 0u);
  unsigned budget = static_cast<unsigned>(rand_int(0, max_deg));
  for (unsigned d = 0; d < budget && arity > 0; ++d)
    ++exps[static_cast<std::size_t>(rand_int(0, arity - 1))];
  return Monomial(std::move(exps));
}

inline MPoly random_mpoly(std::size_t arity, std::size_t max_terms,
                          unsigned max_deg, long max_num = 100,
                          long max_den = 100, bool integer = false) {
  MPoly p(arity);
  const std::size_t terms = static_cast<std::size_t>(rand_int(1, max_terms));
  for (std::size_t t = 0; t < terms; ++t) {
    const Rational c = integer ? Rational(rand_int(-max_num, max_num))
                               : random_rational(max_num, max_den);
    p += MPoly::from_monomial(c, random_monomial(arity, max_deg));
  }
  return p;
}

inline MPoly nonzero_random_mpoly(std::size_t arity, std::size_t max_terms,
                                  unsigned max_deg) {
  for (;;) {
    MPoly p = random_mpoly(arity, max_terms, max_deg);
    if (!p.is_zero()) return p;
  }
}

/// Sum over all permutations of the variables; always symmetric.
inline MPoly symmetrize(const MPoly& p) {
  MPoly acc(p.arity());
  for (const Permutation& s : Permutation::all(p.arity()))
    acc += msym(s, p);
  return acc;
}

}  // namespace testutil
