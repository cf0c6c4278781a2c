#include "symalg/monomial.hpp"

#include <algorithm>

#include "symalg/errors.hpp"

namespace symalg {

Monomial Monomial::unit(std::size_t arity, std::size_t i) {
  if (i < 1 || i > arity) throw IndexError("variable index out of range");
  std::vector<unsigned> e(arity, 0u);
  e[i - 1] = 1;
  return Monomial(std::move(e));
}

bool Monomial::is_zero() const {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](unsigned e) { return e == 0; });
}

unsigned long Monomial::degree() const {
  unsigned long d = 0;
  for (unsigned e : exps_) d += e;
  return d;
}

unsigned long Monomial::weight() const {
  unsigned long w = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    w += (i + 1) * static_cast<unsigned long>(exps_[i]);
  return w;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (exps_[i] != 1) out += "^" + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

Monomial madd(const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity())
    throw ArityError("madd: arity mismatch (" + std::to_string(a.arity()) +
                     " vs " + std::to_string(b.arity()) + ")");
  std::vector<unsigned> e(a.arity());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
  return Monomial(std::move(e));
}

int mnmc_cmp(const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity())
    throw ArityError("mnmc_cmp: arity mismatch (" + std::to_string(a.arity()) +
                     " vs " + std::to_string(b.arity()) + ")");
  const unsigned long da = a.degree();
  const unsigned long db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

}  // namespace symalg
