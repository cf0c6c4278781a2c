#include "symalg/parser.hpp"

#include <cctype>
#include <map>

#include "symalg/errors.hpp"

namespace symalg {

namespace {

// Arity-free sparse polynomial used while the arity is still unknown:
// monomials are maps variable-index (1-based) -> exponent.
using GMono = std::map<std::size_t, unsigned>;
using GPoly = std::map<GMono, Rational>;

void gadd_term(GPoly& p, const GMono& m, const Rational& c) {
  if (is_zero(c)) return;
  auto it = p.find(m);
  if (it == p.end()) {
    p.emplace(m, c);
  } else {
    it->second += c;
    if (is_zero(it->second)) p.erase(it);
  }
}

GPoly gadd(const GPoly& a, const GPoly& b) {
  GPoly out = a;
  for (const auto& [m, c] : b) gadd_term(out, m, c);
  return out;
}

GPoly gneg(const GPoly& a) {
  GPoly out;
  for (const auto& [m, c] : a) out.emplace(m, -c);
  return out;
}

GPoly gmul(const GPoly& a, const GPoly& b) {
  GPoly out;
  for (const auto& [m1, c1] : a) {
    for (const auto& [m2, c2] : b) {
      GMono m = m1;
      for (const auto& [v, e] : m2) m[v] += e;
      gadd_term(out, m, c1 * c2);
    }
  }
  return out;
}

GPoly gconst(const Rational& c) {
  GPoly out;
  gadd_term(out, GMono{}, c);
  return out;
}

GPoly gpow(const GPoly& a, unsigned long e) {
  GPoly acc = gconst(Rational{1});
  for (unsigned long i = 0; i < e; ++i) acc = gmul(acc, a);
  return acc;
}

class Parser {
 public:
  explicit Parser(const std::string& src) : src_(src) {}

  GPoly run() {
    GPoly p = parse_sum();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected character");
    return p;
  }

  std::size_t max_index() const { return max_index_; }
  bool alias_used() const { return alias_used_; }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  unsigned long parse_nat() {
    skip_ws();
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      fail("expected a natural number");
    unsigned long v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(src_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  Integer parse_nat_big() {
    skip_ws();
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      fail("expected a natural number");
    Integer v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      v = v * 10 + (src_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  GPoly parse_sum() {
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    GPoly acc = parse_term();
    if (negate) acc = gneg(acc);
    for (;;) {
      if (accept('+')) {
        acc = gadd(acc, parse_term());
      } else if (accept('-')) {
        acc = gadd(acc, gneg(parse_term()));
      } else {
        return acc;
      }
    }
  }

  GPoly parse_term() {
    GPoly acc = parse_factor();
    while (accept('*')) acc = gmul(acc, parse_factor());
    return acc;
  }

  GPoly parse_factor() {
    GPoly base = parse_base();
    if (accept('^')) {
      skip_ws();
      if (peek() == '-') fail("exponent must be a natural number");
      const unsigned long e = parse_nat();
      return gpow(base, e);
    }
    return base;
  }

  GPoly parse_base() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      GPoly inner = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const Integer num = parse_nat_big();
      if (accept('/')) {
        const Integer den = parse_nat_big();
        if (den == 0) fail("zero denominator");
        return gconst(Rational(num, den));
      }
      return gconst(Rational(num));
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      std::size_t index;
      if (c == 'x' && pos_ < src_.size() &&
          std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        index = parse_nat();
        if (index == 0) fail("variable indices start at 1");
      } else {
        index = static_cast<std::size_t>(c - 'x') + 1;
        alias_used_ = true;
      }
      max_index_ = std::max(max_index_, index);
      GMono m;
      m[index] = 1;
      GPoly out;
      gadd_term(out, m, Rational{1});
      return out;
    }
    fail("expected a rational, a variable, or '('");
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  std::size_t max_index_ = 0;
  bool alias_used_ = false;
};

}  // namespace

MPoly parse_poly(const std::string& src, std::optional<std::size_t> arity) {
  Parser parser(src);
  const GPoly g = parser.run();

  const std::size_t n = arity.value_or(parser.max_index());
  if (parser.max_index() > n)
    throw ArityError("parse_poly: variable index " +
                     std::to_string(parser.max_index()) +
                     " exceeds arity " + std::to_string(n));
  if (parser.alias_used() && n > 3)
    throw ParseError("x/y/z aliases require arity <= 3", 1, 1);

  MPoly out(n);
  for (const auto& [m, c] : g) {
    std::vector<unsigned> exps(n, 0u);
    for (const auto& [v, e] : m) exps[v - 1] = e;
    out += MPoly::from_monomial(c, Monomial(std::move(exps)));
  }
  return out;
}

}  // namespace symalg
