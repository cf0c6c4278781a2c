#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "symalg/monomial.hpp"
#include "symalg/numbers.hpp"

#include "json.hpp"

namespace symalg {

/// A bijection on {0, ..., n-1}, acting on the variables of an MPoly.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t arity);
  /// Transposition of variables i and j (0-based indices).
  static Permutation transposition(std::size_t arity, std::size_t i,
                                   std::size_t j);

  std::size_t arity() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }

  /// Composition: (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  /// All arity! permutations, for exhaustive symmetry oracles.
  static std::vector<Permutation> all(std::size_t arity);

 private:
  std::vector<std::size_t> images_;
};

/// Sparse multivariate polynomial over exact rationals, stored as a reduced
/// map Monomial -> coefficient (no zero coefficients ever stored). The map
/// is ordered ascending by the graded-lex order, so the leading monomial is
/// the last key.
class MPoly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialLess>;

  /// The zero polynomial of the given arity (arity 0 is allowed; arity-0
  /// polynomials are constants).
  explicit MPoly(std::size_t arity) : arity_(arity) {}

  static MPoly constant(std::size_t arity, const Rational& c);
  /// The variable X_i (i is 1-based).
  static MPoly variable(std::size_t arity, std::size_t i);
  static MPoly from_monomial(const Rational& c, const Monomial& m);

  std::size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  /// Stored coefficient of m, or 0 if absent.
  Rational coeff(const Monomial& m) const;

  /// Support, sorted descending by the graded-lex order; empty for 0.
  std::vector<Monomial> support() const;

  /// Leading (maximum) monomial; throws ZeroLeadError on the zero poly.
  const Monomial& lead_monomial() const;
  const Rational& lead_coeff() const;

  /// Total degree: max monomial degree over the support. Pre: nonzero.
  unsigned long total_degree() const;

  /// Total degree + 1, with size(0) = 0.
  std::size_t size() const;

  MPoly& operator+=(const MPoly& q);
  MPoly& operator-=(const MPoly& q);
  friend MPoly operator+(MPoly p, const MPoly& q) { return p += q; }
  friend MPoly operator-(MPoly p, const MPoly& q) { return p -= q; }
  MPoly operator-() const;
  friend MPoly operator*(const MPoly& p, const MPoly& q);

  MPoly scaled(const Rational& c) const;

  Rational eval(const std::vector<Rational>& point) const;
  MPoly compose(const std::vector<MPoly>& subs) const;
  /// Formal partial derivative with respect to X_i (i is 1-based).
  MPoly derivative(std::size_t i) const;

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  std::string to_string() const;
  nlohmann::json to_json() const;
  static MPoly from_json(const nlohmann::json& j);

 private:
  void add_term(const Monomial& m, const Rational& c);

  std::size_t arity_;
  TermMap terms_;
};

MPoly pow(const MPoly& p, unsigned long e);

/// Action of a permutation on the variables: X_i -> X_{s(i)}.
MPoly msym(const Permutation& s, const MPoly& p);

/// True iff p is fixed by every permutation of its variables; checked on
/// the adjacent transpositions, which generate the symmetric group.
bool is_symmetric(const MPoly& p);

/// True iff every stored coefficient has denominator 1.
bool is_integer_poly(const MPoly& p);

inline bool is_zero(const MPoly& p) { return p.is_zero(); }

}  // namespace symalg
