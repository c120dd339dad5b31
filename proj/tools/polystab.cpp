// Batch front-end: build family tables, run property suites, verify
// identities, compare enumerations against family recurrences, and emit
// machine-readable certificates.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "polystab/combinatorics.hpp"
#include "polystab/errors.hpp"
#include "polystab/families.hpp"
#include "polystab/identities.hpp"
#include "polystab/suites.hpp"

using namespace polystab;

namespace {

Params parse_params(const std::string& spec) {
  Params out;
  if (spec.empty()) return out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    auto eq = cur.find('=');
    if (eq == std::string::npos) throw bad_params("bad --params entry '" + cur + "'");
    out[cur.substr(0, eq)] = cur.substr(eq + 1);
    cur.clear();
  };
  for (char ch : spec) {
    if (ch == ',') {
      flush();
    } else {
      cur.push_back(ch);
    }
  }
  flush();
  return out;
}

std::string coeff_csv(const Rational& c) {
  // Exact values only; integers print bare, other rationals as num/den.
  if (c.get_den() == 1) return c.get_num().get_str();
  return rational_to_string(c);
}

void print_table(const FamilyTable& t, const std::string& format) {
  if (format == "csv") {
    for (const auto& p : t.polys) {
      std::string line;
      long deg = std::max(p.degree(), 0);
      for (long k = 0; k <= deg; ++k) {
        if (k) line += ",";
        line += coeff_csv(p[static_cast<std::size_t>(k)]);
      }
      std::cout << line << "\n";
    }
    return;
  }
  nlohmann::json j;
  j["family"] = t.name;
  j["params"] = t.params;
  j["first_index"] = t.first_index;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& p : t.polys) rows.push_back(poly_to_json(p));
  j["rows"] = rows;
  std::cout << j.dump() << "\n";
}

void print_triangle(const Triangle& t, const std::string& format) {
  if (format == "csv") {
    for (const auto& row : t.rows) {
      std::string line;
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (k) line += ",";
        line += coeff_csv(row[k]);
      }
      std::cout << line << "\n";
    }
    return;
  }
  nlohmann::json j;
  j["triangle"] = t.name;
  j["params"] = t.params;
  j["first_index"] = t.first_index;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& c : row) r.push_back(rational_to_string(c));
    rows.push_back(r);
  }
  j["rows"] = rows;
  std::cout << j.dump() << "\n";
}

int emit_certificates(const SuiteResult& res) {
  for (const auto& c : res.certificates) std::cout << certificate_to_json(c).dump() << "\n";
  return res.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact stability and positivity checks for combinatorial polynomial families"};
  app.require_subcommand(1);

  std::string params_arg, format = "json", suite, identity, kind, stat, compare_family,
              family_name, triangle_name;
  long n_arg = -1, order = -1, jobs = 1, guard = -1;

  app.add_option("--guard", guard, "size guard: max table coefficients / enumerated objects");

  auto* fam = app.add_subcommand("family", "emit a family table");
  fam->add_option("name", family_name, "family identifier")->required();
  fam->add_option("--n", n_arg, "largest index")->required();
  fam->add_option("--params", params_arg, "k=v,... family parameters");
  fam->add_option("--format", format, "json or csv");

  auto* tri = app.add_subcommand("triangle", "emit a triangle");
  tri->add_option("name", triangle_name, "triangle identifier")->required();
  tri->add_option("--n", n_arg, "largest row")->required();
  tri->add_option("--params", params_arg, "k=v,...");
  tri->add_option("--format", format, "json or csv");

  auto* check = app.add_subcommand("check", "run a property suite");
  check->add_option("--suite", suite, "suite identifier")->required();
  check->add_option("--family", family_name, "restrict to one family");
  check->add_option("--params", params_arg, "k=v,...");
  check->add_option("--n", n_arg, "index bound");
  check->add_option("--order", order, "truncation order for identity suites");
  check->add_option("--jobs", jobs, "worker threads");

  auto* verify = app.add_subcommand("verify", "verify one named identity");
  verify->add_option("--identity", identity, "egf|jcf|xd|convolution|counting|gamma-basis")
      ->required();
  verify->add_option("--family", family_name, "identity target");
  verify->add_option("--params", params_arg, "k=v,...");
  verify->add_option("--n", n_arg, "index bound");
  verify->add_option("--order", order, "truncation order");

  auto* oracle = app.add_subcommand("oracle", "compare an enumeration with a family");
  oracle->add_option("--kind", kind, "enumeration kind")->required();
  oracle->add_option("--stat", stat, "statistic identifier")->required();
  oracle->add_option("--compare", compare_family, "family to compare against")->required();
  oracle->add_option("--params", params_arg, "k=v,...");
  oracle->add_option("--n", n_arg, "index bound");
  oracle->add_option("--jobs", jobs, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (const char* env = std::getenv("POLYSTAB_GUARD")) {
      set_size_guard(std::stol(env));
      combinat::set_enumeration_guard(std::stol(env));
    }
    if (guard > 0) {
      set_size_guard(guard);
      combinat::set_enumeration_guard(guard);
    }
    Params params = parse_params(params_arg);

    if (*fam) {
      print_table(family(family_name, params, n_arg), format);
      return 0;
    }
    if (*tri) {
      print_triangle(triangle(triangle_name, params, n_arg), format);
      return 0;
    }
    if (*check) {
      SuiteOptions opt;
      opt.family = family_name;
      opt.params = params;
      opt.n_max = n_arg;
      opt.order = order;
      opt.jobs = jobs;
      return emit_certificates(run_suite(suite, opt));
    }
    if (*verify) {
      long ord = order < 0 ? 10 : order;
      Verdict v;
      if (identity == "egf") {
        v = verify_egf_crossmul(family_name, params, ord);
      } else if (identity == "jcf") {
        v = verify_jcf(family_name, params, ord);
      } else if (identity == "xd") {
        v = verify_xd_identity(family_name, n_arg < 0 ? 6 : n_arg, order);
      } else if (identity == "convolution") {
        v = verify_convolution(param_long(params, "delta1"), param_long(params, "delta2"),
                               n_arg < 0 ? 8 : n_arg);
      } else if (identity == "counting") {
        v = verify_counting_identity(family_name, params, n_arg < 0 ? 10 : n_arg);
      } else if (identity == "gamma-basis") {
        v = verify_gamma_basis(family_name, n_arg < 0 ? 8 : n_arg);
      } else {
        throw bad_params("unknown identity '" + identity + "'");
      }
      nlohmann::json j;
      j["identity"] = identity;
      j["family"] = family_name;
      j["params"] = params;
      j["verdict"] = v.pass ? "pass" : "fail";
      if (!v.pass) {
        j["first_failure_index"] = v.first_failure->index;
        j["expected"] = v.first_failure->expected.to_string();
        j["got"] = v.first_failure->got.to_string();
      }
      std::cout << j.dump() << "\n";
      return v.pass ? 0 : 1;
    }
    if (*oracle) {
      return emit_certificates(
          run_oracle_compare(kind, stat, compare_family, params, n_arg, jobs));
    }
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
