#include "symalg/upoly.hpp"

namespace symalg {

std::string to_string(const UPoly<Rational>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = p.size(); i-- > 0;) {
    const Rational& c = p[i];
    if (symalg::is_zero(c)) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string body;
    if (i == 0) {
      body = symalg::to_string(mag);
    } else {
      if (mag != 1) body = symalg::to_string(mag) + "*";
      body += "X";
      if (i > 1) body += "^" + std::to_string(i);
    }
    out += body;
  }
  return out;
}

nlohmann::json to_json(const UPoly<Rational>& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Rational& c : p.coeffs()) coeffs.push_back(symalg::to_string(c));
  return {{"coeffs", coeffs}};
}

}  // namespace symalg
