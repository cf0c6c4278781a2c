#include "symalg/mpoly.hpp"

#include <algorithm>
#include <numeric>

#include "symalg/errors.hpp"

namespace symalg {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<std::size_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i : images_) {
    if (i >= images_.size() || seen[i])
      throw InvalidInputError("Permutation: images are not a bijection");
    seen[i] = true;
  }
}

Permutation Permutation::identity(std::size_t arity) {
  std::vector<std::size_t> im(arity);
  std::iota(im.begin(), im.end(), std::size_t{0});
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(std::size_t arity, std::size_t i,
                                       std::size_t j) {
  if (i >= arity || j >= arity)
    throw IndexError("Permutation::transposition: index out of range");
  std::vector<std::size_t> im(arity);
  std::iota(im.begin(), im.end(), std::size_t{0});
  std::swap(im[i], im[j]);
  return Permutation(std::move(im));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.arity() != b.arity())
    throw ArityError("Permutation composition: arity mismatch");
  std::vector<std::size_t> im(a.arity());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = a(b(i));
  return Permutation(std::move(im));
}

std::vector<Permutation> Permutation::all(std::size_t arity) {
  std::vector<std::size_t> im(arity);
  std::iota(im.begin(), im.end(), std::size_t{0});
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(im));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

// ---------------------------------------------------------------------------
// MPoly

MPoly MPoly::constant(std::size_t arity, const Rational& c) {
  MPoly p(arity);
  p.add_term(Monomial::zero(arity), c);
  return p;
}

MPoly MPoly::variable(std::size_t arity, std::size_t i) {
  MPoly p(arity);
  p.add_term(Monomial::unit(arity, i), Rational{1});
  return p;
}

MPoly MPoly::from_monomial(const Rational& c, const Monomial& m) {
  MPoly p(m.arity());
  p.add_term(m, c);
  return p;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
  if (m.arity() != arity_) throw ArityError("MPoly: monomial arity mismatch");
  if (symalg::is_zero(c)) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (symalg::is_zero(it->second)) terms_.erase(it);
  }
}

Rational MPoly::coeff(const Monomial& m) const {
  if (m.arity() != arity_) throw ArityError("coeff: arity mismatch");
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational{0} : it->second;
}

std::vector<Monomial> MPoly::support() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    out.push_back(it->first);
  return out;
}

const Monomial& MPoly::lead_monomial() const {
  if (terms_.empty()) throw ZeroLeadError("mlead of the zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& MPoly::lead_coeff() const {
  if (terms_.empty()) throw ZeroLeadError("lead_coeff of the zero polynomial");
  return terms_.rbegin()->second;
}

unsigned long MPoly::total_degree() const {
  // Graded order: the last key has maximal degree.
  return lead_monomial().degree();
}

std::size_t MPoly::size() const {
  return terms_.empty() ? 0 : static_cast<std::size_t>(total_degree()) + 1;
}

MPoly& MPoly::operator+=(const MPoly& q) {
  if (arity_ != q.arity_) throw ArityError("add: arity mismatch");
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& q) {
  if (arity_ != q.arity_) throw ArityError("sub: arity mismatch");
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly out(arity_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

MPoly operator*(const MPoly& p, const MPoly& q) {
  if (p.arity() != q.arity()) throw ArityError("mul: arity mismatch");
  MPoly out(p.arity());
  for (const auto& [m1, c1] : p.terms())
    for (const auto& [m2, c2] : q.terms()) out.add_term(madd(m1, m2), c1 * c2);
  return out;
}

MPoly MPoly::scaled(const Rational& c) const {
  MPoly out(arity_);
  if (symalg::is_zero(c)) return out;
  for (const auto& [m, a] : terms_) out.terms_.emplace(m, a * c);
  return out;
}

Rational MPoly::eval(const std::vector<Rational>& point) const {
  if (point.size() != arity_) throw ArityError("meval: arity mismatch");
  Rational acc{0};
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < arity_; ++i)
      if (m[i] != 0) term *= rational_pow(point[i], m[i]);
    acc += term;
  }
  return acc;
}

MPoly MPoly::compose(const std::vector<MPoly>& subs) const {
  if (subs.size() != arity_) throw ArityError("mcompose: arity mismatch");
  const std::size_t out_arity = subs.empty() ? 0 : subs[0].arity();
  for (const MPoly& s : subs)
    if (s.arity() != out_arity)
      throw ArityError("mcompose: substituents must share one arity");
  MPoly acc(out_arity);
  for (const auto& [m, c] : terms_) {
    MPoly term = MPoly::constant(out_arity, c);
    for (std::size_t i = 0; i < arity_; ++i)
      if (m[i] != 0) term = term * pow(subs[i], m[i]);
    acc += term;
  }
  return acc;
}

MPoly MPoly::derivative(std::size_t i) const {
  if (i < 1 || i > arity_) throw IndexError("mderiv: index out of range");
  MPoly out(arity_);
  for (const auto& [m, c] : terms_) {
    const unsigned e = m[i - 1];
    if (e == 0) continue;
    std::vector<unsigned> exps = m.exps();
    exps[i - 1] = e - 1;
    out.add_term(Monomial(std::move(exps)), c * Rational{e});
  }
  return out;
}

MPoly pow(const MPoly& p, unsigned long e) {
  MPoly acc = MPoly::constant(p.arity(), Rational{1});
  MPoly b = p;
  while (e > 0) {
    if (e & 1) acc = acc * b;
    if (e >>= 1) b = b * b;
  }
  return acc;
}

MPoly msym(const Permutation& s, const MPoly& p) {
  if (s.arity() != p.arity()) throw ArityError("msym: arity mismatch");
  MPoly out(p.arity());
  for (const auto& [m, c] : p.terms()) {
    std::vector<unsigned> exps(p.arity());
    for (std::size_t i = 0; i < p.arity(); ++i) exps[s(i)] = m[i];
    out += MPoly::from_monomial(c, Monomial(std::move(exps)));
  }
  return out;
}

bool is_symmetric(const MPoly& p) {
  // Adjacent transpositions generate S_n.
  for (std::size_t i = 0; i + 1 < p.arity(); ++i)
    if (msym(Permutation::transposition(p.arity(), i, i + 1), p) != p)
      return false;
  return true;
}

bool is_integer_poly(const MPoly& p) {
  for (const auto& [m, c] : p.terms())
    if (!is_integer(c)) return false;
  return true;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Monomial& m = it->first;
    const Rational& c = it->second;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.is_zero()) {
      out += symalg::to_string(mag);
    } else if (mag == 1) {
      out += m.to_string();
    } else {
      out += symalg::to_string(mag) + "*" + m.to_string();
    }
  }
  return out;
}

nlohmann::json MPoly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    terms.push_back({{"coeff", symalg::to_string(it->second)},
                     {"exps", it->first.exps()}});
  }
  return {{"arity", arity_}, {"terms", terms}};
}

MPoly MPoly::from_json(const nlohmann::json& j) {
  MPoly p(j.at("arity").get<std::size_t>());
  for (const auto& t : j.at("terms")) {
    const std::string cs = t.at("coeff").get<std::string>();
    p.add_term(Monomial(t.at("exps").get<std::vector<unsigned>>()),
               Rational(cs));
  }
  return p;
}

}  // namespace symalg
