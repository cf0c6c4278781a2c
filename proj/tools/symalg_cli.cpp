#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "symalg/errors.hpp"
#include "symalg/mpoly.hpp"
#include "symalg/niven.hpp"
#include "symalg/parser.hpp"
#include "symalg/symfund.hpp"
#include "symalg/upoly.hpp"

namespace {

using namespace symalg;

void emit(const std::string& text, const std::string& out_file) {
  if (!out_file.empty()) {
    std::ofstream out(out_file);
    out << text << "\n";
  }
  std::cout << text << "\n";
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw InvalidInputError("empty entry in list");
    out.emplace_back(item);
  }
  return out;
}

std::vector<Integer> parse_integer_list(const std::string& csv) {
  std::vector<Integer> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    out.emplace_back(item);
  return out;
}

std::optional<std::size_t> arity_opt(int n) {
  if (n < 0) return std::nullopt;
  return static_cast<std::size_t>(n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact sparse multivariate polynomials, symmetric "
               "decomposition, and transcendence-skeleton checks"};
  app.require_subcommand(1);

  std::string expr, out_file, roots_csv, coeffs_csv, bounds_csv;
  std::string c_str = "1", a_str = "1", b_str = "1";
  int arity = -1;
  std::size_t k = 0, degree = 0, npi = 0;
  long p_flag = -1;
  double tol = 1e-8;
  bool json_out = false, verify = false;

  auto* check = app.add_subcommand("check-sym", "Test a polynomial for symmetry");
  check->add_option("expr", expr)->required();
  check->add_option("-n,--n", arity, "arity (default: inferred)");
  check->add_flag("--json", json_out);
  check->add_option("--out", out_file);

  auto* decomp = app.add_subcommand(
      "decompose", "Decompose a symmetric polynomial into the sigma basis");
  decomp->add_option("expr", expr)->required();
  decomp->add_option("-n,--n", arity);
  decomp->add_flag("--verify", verify, "re-run the recomposition certificate");
  decomp->add_flag("--json", json_out);
  decomp->add_option("--out", out_file);

  auto* mes = app.add_subcommand("mesym", "Print an elementary symmetric polynomial");
  mes->add_option("-n,--n", arity)->required();
  mes->add_option("-k,--k", k)->required();
  mes->add_flag("--json", json_out);
  mes->add_option("--out", out_file);

  auto* vie = app.add_subcommand("vieta", "Expand c * prod (X - r_i)");
  vie->add_option("--c", c_str, "leading coefficient (rational)");
  vie->add_option("--roots", roots_csv, "comma-separated rational roots");
  vie->add_flag("--json", json_out);
  vie->add_option("--out", out_file);

  auto* ne = app.add_subcommand("niven-e", "Run the e-case skeleton checks");
  ne->add_option("--degree", degree)->required();
  ne->add_option("--coeffs", coeffs_csv, "a_0,...,a_degree")->required();
  ne->add_option("--p", p_flag, "prime (default: auto-selected)");
  ne->add_option("--tol", tol, "quadrature residual tolerance");
  ne->add_flag("--json", json_out);
  ne->add_option("--out", out_file);

  auto* npi_cmd = app.add_subcommand("niven-pi", "Run the pi-case subset-sum construction");
  npi_cmd->add_option("--npi", npi)->required();
  npi_cmd->add_option("--coeffs", coeffs_csv,
                      "b_0,...,b_{npi-1} of a monic B (optional)");
  npi_cmd->add_flag("--json", json_out);
  npi_cmd->add_option("--out", out_file);

  auto* fp = app.add_subcommand("findp", "Factorial-dominance prime search");
  fp->add_option("--a", a_str)->required();
  fp->add_option("--b", b_str)->required();
  fp->add_option("--bounds", bounds_csv, "comma-separated lower bounds");
  fp->add_option("--out", out_file);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) {
      const MPoly p = parse_poly(expr, arity_opt(arity));
      const bool sym = is_symmetric(p);
      if (json_out) {
        emit(nlohmann::json{{"symmetric", sym}, {"poly", p.to_json()}}.dump(),
             out_file);
      } else {
        emit(sym ? "symmetric" : "not symmetric", out_file);
      }
      return sym ? 0 : 1;
    }

    if (*decomp) {
      const MPoly p = parse_poly(expr, arity_opt(arity));
      const Decomposition d = symf(p);
      const bool ok = !verify || d.verify();
      if (json_out) {
        emit(d.to_json().dump(), out_file);
      } else {
        std::string text = "t = " + d.t.to_string() + "\nweight " +
                           std::to_string(d.weight_bound) + " <= degree " +
                           std::to_string(d.input_degree) + "\niterations " +
                           std::to_string(d.iterations);
        if (verify) text += ok ? "\nverified" : "\nNOT verified";
        emit(text, out_file);
      }
      return ok ? 0 : 1;
    }

    if (*mes) {
      const MPoly p = mesym(static_cast<std::size_t>(arity), k);
      emit(json_out ? p.to_json().dump() : p.to_string(), out_file);
      return 0;
    }

    if (*vie) {
      const UPoly<Rational> p =
          vieta(Rational(c_str),
                roots_csv.empty() ? std::vector<Rational>{}
                                  : parse_rational_list(roots_csv));
      emit(json_out ? to_json(p).dump() : to_string(p), out_file);
      return 0;
    }

    if (*ne) {
      const std::vector<Integer> a = parse_integer_list(coeffs_csv);
      std::optional<unsigned long> p;
      if (p_flag >= 0) p = static_cast<unsigned long>(p_flag);
      const NivenReport report = e_case(degree, a, p, tol);
      emit(report.to_json().dump(json_out ? -1 : 2), out_file);
      return report.all_ok() ? 0 : 1;
    }

    if (*npi_cmd) {
      const PiConstruction pc = pi_construct(npi);
      nlohmann::json j;
      j["n_pi"] = npi;
      j["alpha_prime_count"] = pc.alpha_prime.size();
      j["alpha_prime"] = nlohmann::json::array();
      for (const MPoly& f : pc.alpha_prime) j["alpha_prime"].push_back(f.to_string());
      j["coefficients"] = nlohmann::json::array();
      for (std::size_t i = 0; i < pc.product_coeffs.size(); ++i) {
        j["coefficients"].push_back(
            {{"power", i},
             {"coeff", pc.product_coeffs[i].to_string()},
             {"decomposition", pc.decompositions[i].to_json()}});
      }
      if (!coeffs_csv.empty()) {
        const std::vector<Rational> values =
            pi_coeff_values(npi, parse_rational_list(coeffs_csv));
        j["coeff_values"] = nlohmann::json::array();
        for (const Rational& v : values)
          j["coeff_values"].push_back(symalg::to_string(v));
      }
      emit(j.dump(json_out ? -1 : 2), out_file);
      return 0;
    }

    if (*fp) {
      std::vector<unsigned long> bounds;
      if (!bounds_csv.empty()) {
        std::stringstream ss(bounds_csv);
        std::string item;
        while (std::getline(ss, item, ','))
          bounds.push_back(std::stoul(item));
      }
      const unsigned long p = find_p(Integer(a_str), Integer(b_str), bounds);
      emit(std::to_string(p), out_file);
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ArityError& e) {
    std::cerr << "arity error: " << e.what() << "\n";
    return 2;
  } catch (const NotSymmetricError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
