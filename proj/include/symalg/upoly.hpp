#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "symalg/errors.hpp"
#include "symalg/mpoly.hpp"
#include "symalg/numbers.hpp"

#include "json.hpp"

namespace symalg {

// Coefficient-ring hooks. A coefficient type needs +, -, unary -, *, ==,
// a free is_zero overload, and these two scalings.
inline Rational mul_nat(const Rational& c, unsigned long k) {
  return c * Rational{k};
}
inline MPoly mul_nat(const MPoly& c, unsigned long k) {
  return c.scaled(Rational{k});
}
inline Rational mul_integer(const Rational& c, const Integer& k) {
  return c * Rational(k);
}
inline MPoly mul_integer(const MPoly& c, const Integer& k) {
  return c.scaled(Rational(k));
}

template <class C>
C zero_like(const C& c) {
  return c - c;
}

/// Dense univariate polynomial generic over a coefficient ring; index i is
/// the coefficient of X^i, trailing zeros trimmed. The zero polynomial is
/// the empty sequence (its degree is "none", never -1).
template <class C>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static UPoly constant(const C& c) { return UPoly(std::vector<C>{c}); }

  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  const std::vector<C>& coeffs() const { return coeffs_; }
  const C& operator[](std::size_t i) const { return coeffs_[i]; }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

 private:
  void trim() {
    while (!coeffs_.empty() && symalg::is_zero(coeffs_.back()))
      coeffs_.pop_back();
  }

  std::vector<C> coeffs_;
};

template <class C>
UPoly<C> uadd(const UPoly<C>& a, const UPoly<C>& b) {
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<C> out = x.size() >= y.size() ? x : y;
  const auto& small = x.size() >= y.size() ? y : x;
  for (std::size_t i = 0; i < small.size(); ++i) out[i] = out[i] + small[i];
  return UPoly<C>(std::move(out));
}

template <class C>
UPoly<C> uneg(const UPoly<C>& a) {
  std::vector<C> out;
  out.reserve(a.size());
  for (const C& c : a.coeffs()) out.push_back(-c);
  return UPoly<C>(std::move(out));
}

template <class C>
UPoly<C> usub(const UPoly<C>& a, const UPoly<C>& b) {
  return uadd(a, uneg(b));
}

template <class C>
UPoly<C> umul(const UPoly<C>& a, const UPoly<C>& b) {
  if (a.is_zero() || b.is_zero()) return UPoly<C>{};
  const C zero = zero_like(a[0]);
  std::vector<C> out(a.size() + b.size() - 1, zero);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = out[i + j] + a[i] * b[j];
  return UPoly<C>(std::move(out));
}

template <class C>
UPoly<C> uscale(const UPoly<C>& a, const C& c) {
  std::vector<C> out;
  out.reserve(a.size());
  for (const C& x : a.coeffs()) out.push_back(x * c);
  return UPoly<C>(std::move(out));
}

/// Multiplication by X^k.
template <class C>
UPoly<C> ushift(const UPoly<C>& a, std::size_t k) {
  if (a.is_zero()) return a;
  std::vector<C> out(a.size() + k, zero_like(a[0]));
  for (std::size_t i = 0; i < a.size(); ++i) out[i + k] = a[i];
  return UPoly<C>(std::move(out));
}

/// a^e for e >= 1; a generic ring has no unit to return for e = 0.
template <class C>
UPoly<C> upow(const UPoly<C>& a, unsigned long e) {
  if (e == 0) throw InvalidInputError("upow: exponent must be positive");
  UPoly<C> acc = a;
  for (unsigned long i = 1; i < e; ++i) acc = umul(acc, a);
  return acc;
}

/// Expands one * (X - roots[0]) * ... * (X - roots[k-1]).
template <class C>
UPoly<C> upoly_from_roots(const C& one, const std::vector<C>& roots) {
  UPoly<C> acc = UPoly<C>::constant(one);
  for (const C& r : roots) acc = umul(acc, UPoly<C>(std::vector<C>{-r, one}));
  return acc;
}

template <class C>
C ueval(const UPoly<C>& p, const C& x) {
  if (p.is_zero()) return zero_like(x);
  C acc = p.coeffs().back();
  for (std::size_t i = p.size() - 1; i-- > 0;) acc = acc * x + p[i];
  return acc;
}

inline double ueval_double(const UPoly<Rational>& p, double x) {
  double acc = 0.0;
  for (std::size_t i = p.size(); i-- > 0;)
    acc = acc * x + p[i].convert_to<double>();
  return acc;
}

/// Formal derivative.
template <class C>
UPoly<C> uderive(const UPoly<C>& p) {
  if (p.size() <= 1) return UPoly<C>{};
  std::vector<C> out;
  out.reserve(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i)
    out.push_back(mul_nat(p[i], i));
  return UPoly<C>(std::move(out));
}

/// i-th derivative; zero whenever i >= size(p).
template <class C>
UPoly<C> uderive_n(UPoly<C> p, unsigned long i) {
  for (unsigned long k = 0; k < i && !p.is_zero(); ++k) p = uderive(p);
  return p;
}

/// Divided i-th derivative: coefficient of X^j is C(j+i, i) * coeff(j+i).
/// Satisfies uderive_n(p, i) == i! * nderivn(p, i) and preserves coefficient
/// integrality.
template <class C>
UPoly<C> nderivn(const UPoly<C>& p, unsigned long i) {
  if (p.size() <= i) return UPoly<C>{};
  std::vector<C> out;
  out.reserve(p.size() - i);
  for (std::size_t j = 0; j + i < p.size(); ++j)
    out.push_back(mul_integer(p[j + i], binomial(j + i, i)));
  return UPoly<C>(std::move(out));
}

/// Sum of derivatives of order j0 and above: sum_{j0 <= j < size(p)} p^(j).
template <class C>
UPoly<C> sd(const UPoly<C>& p, unsigned long j0) {
  UPoly<C> acc;
  UPoly<C> cur = uderive_n(p, j0);
  for (unsigned long j = j0; j < p.size(); ++j) {
    acc = uadd(acc, cur);
    cur = uderive(cur);
  }
  return acc;
}

/// Largest m such that (X - x)^m divides p, by repeated synthetic division.
/// Throws ZeroPolyError on the zero polynomial.
template <class C>
unsigned long mroot_mult(UPoly<C> p, const C& x) {
  if (p.is_zero()) throw ZeroPolyError("mroot_mult of the zero polynomial");
  unsigned long m = 0;
  for (;;) {
    // Synthetic division of p by (X - x): quotient via Horner, remainder
    // is p(x).
    std::vector<C> q(p.size() - 1, zero_like(x));
    C carry = p.coeffs().back();
    for (std::size_t i = p.size() - 1; i-- > 0;) {
      q[i] = carry;
      carry = carry * x + p[i];
    }
    if (!symalg::is_zero(carry)) return m;
    ++m;
    p = UPoly<C>(std::move(q));
    if (p.is_zero()) return m;
  }
}

/// p(a*X + b), via Horner over the ring of univariate polynomials.
template <class C>
UPoly<C> ucompose_linear(const UPoly<C>& p, const C& a, const C& b) {
  if (p.is_zero()) return p;
  const UPoly<C> lin(std::vector<C>{b, a});
  UPoly<C> acc = UPoly<C>::constant(p.coeffs().back());
  for (std::size_t i = p.size() - 1; i-- > 0;)
    acc = uadd(umul(acc, lin), UPoly<C>::constant(p[i]));
  return acc;
}

/// "a_k*X^k + ... + a_0" with zero coefficients omitted; "0" for zero.
std::string to_string(const UPoly<Rational>& p);

nlohmann::json to_json(const UPoly<Rational>& p);

}  // namespace symalg
