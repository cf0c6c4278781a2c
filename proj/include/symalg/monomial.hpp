#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace symalg {

/// A generator of the free commutative monoid on {X_1, ..., X_n}: a
/// fixed-arity vector of natural-number exponents. Exponents are stored
/// 0-based (exps()[i] is the exponent of X_{i+1}); the weight formula is
/// rank-weighted 1-based, so exps()[i] is multiplied by i+1.
class Monomial {
 public:
  explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

  static Monomial zero(std::size_t arity) {
    return Monomial(std::vector<unsigned>(arity, 0u));
  }

  /// Unit vector: the monomial X_i (i is 1-based).
  static Monomial unit(std::size_t arity, std::size_t i);

  std::size_t arity() const { return exps_.size(); }
  const std::vector<unsigned>& exps() const { return exps_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }

  bool is_zero() const;

  /// Total degree: sum of all exponents.
  unsigned long degree() const;

  /// Rank-weighted degree: sum of (i+1) * exps()[i].
  unsigned long weight() const;

  /// "x1^2*x2"; exponent 1 omitted, zero-exponent variables omitted,
  /// the all-zero monomial renders "1".
  std::string to_string() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }

 private:
  std::vector<unsigned> exps_;
};

/// Componentwise sum; throws ArityError on arity mismatch.
Monomial madd(const Monomial& a, const Monomial& b);

/// Three-way comparison for the graded-lexicographic total order: compares
/// (degree, exponent vector) lexicographically. Returns <0, 0, >0.
/// Throws ArityError on arity mismatch.
int mnmc_cmp(const Monomial& a, const Monomial& b);

inline bool mnmc_le(const Monomial& a, const Monomial& b) {
  return mnmc_cmp(a, b) <= 0;
}

/// Strict-less functor usable as a std::map comparator.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return mnmc_cmp(a, b) < 0;
  }
};

}  // namespace symalg
