#include "polystab/suites.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>
#include <tuple>

#include "polystab/combinatorics.hpp"
#include "polystab/errors.hpp"
#include "polystab/hurwitz.hpp"
#include "polystab/identities.hpp"
#include "polystab/properties.hpp"
#include "polystab/realroots.hpp"

namespace polystab {

nlohmann::json poly_to_json(const Poly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(rational_to_string(c));
  return arr;
}

Poly poly_from_json(const nlohmann::json& j) {
  std::vector<Rational> c;
  for (const auto& v : j) c.push_back(rational_from_string(v.get<std::string>()));
  return Poly(std::move(c));
}

nlohmann::json certificate_to_json(const Certificate& c) {
  nlohmann::json j;
  j["family"] = c.family;
  j["params"] = c.params;
  j["n"] = c.n;
  j["property"] = c.property;
  j["verdict"] = c.pass ? "pass" : "fail";
  if (c.conjecture) j["conjecture"] = true;
  if (!c.witness.is_null()) j["witness"] = c.witness;
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  Certificate c;
  c.family = j.at("family").get<std::string>();
  c.params = j.at("params").get<Params>();
  c.n = j.at("n").get<long>();
  c.property = j.at("property").get<std::string>();
  c.pass = j.at("verdict").get<std::string>() == "pass";
  c.conjecture = j.value("conjecture", false);
  if (j.contains("witness")) c.witness = j.at("witness");
  return c;
}

namespace {

using Task = std::function<Certificate()>;

std::string params_key(const Params& p) {
  std::string s;
  for (const auto& [k, v] : p) s += k + "=" + v + ",";
  return s;
}

// Deterministic: results land by task index, then sort by key.
std::vector<Certificate> run_tasks(std::vector<Task> tasks, long jobs) {
  if (jobs < 1) jobs = 1;
  std::vector<Certificate> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      out[i] = tasks[i]();
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (long j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::stable_sort(out.begin(), out.end(), [](const Certificate& a, const Certificate& b) {
    auto key = [](const Certificate& c) {
      return std::tuple<const std::string&, const std::string&, std::string, long>(
          c.property, c.family, params_key(c.params), c.n);
    };
    return key(a) < key(b);
  });
  return out;
}

Certificate make_cert(const std::string& family, const Params& params, long n,
                      const std::string& property, bool pass, nlohmann::json witness = {}) {
  Certificate c;
  c.family = family;
  c.params = params;
  c.n = n;
  c.property = property;
  c.pass = pass;
  if (!pass && witness.is_null()) witness = "unexpected failure";
  c.witness = std::move(witness);
  return c;
}

nlohmann::json stability_witness(const Poly& p) {
  RhpCountReport rep = rhp_root_count(p);
  nlohmann::json w;
  w["strictly_right"] = rep.strictly_right;
  w["imaginary_axis"] = rep.imaginary_axis;
  w["origin_multiplicity"] = rep.origin_multiplicity;
  if (rep.strictly_right > 0) {
    w["note"] = "roots with positive real part present";
    w["isolated_real_roots"] = isolate_roots(p).to_string();
  }
  return w;
}

struct FamilyTarget {
  std::string name;
  Params params;
  long first = 0;
  long last = 0;
};

std::vector<FamilyTarget> default_hurwitz_targets(long n_max) {
  long n12 = n_max < 0 ? 12 : n_max;
  long n10 = n_max < 0 ? 10 : n_max;
  return {{"stirling_runs", {}, 0, n12},
          {"alt_desc_A", {}, 1, n10},
          {"alt_desc_B", {}, 0, n10}};
}

// Admissible Stirling-Whitney-Riordan parameter grid (nonnegative with
// a1(b1+b2) >= a2 b1 and nontrivial degree growth).
std::vector<Params> swr_grid() {
  std::vector<Params> grid;
  for (int a1 = 0; a1 <= 2; ++a1)
    for (int a2 = 0; a2 <= 2; ++a2)
      for (int b1 = 0; b1 <= 2; ++b1)
        for (int b2 = 0; b2 <= 1; ++b2)
          for (int lam = 0; lam <= 1; ++lam) {
            if (b1 + b2 == 0) continue;
            if (a1 * (b1 + b2) < a2 * b1) continue;
            grid.push_back({{"a1", std::to_string(a1)},
                            {"a2", std::to_string(a2)},
                            {"b1", std::to_string(b1)},
                            {"b2", std::to_string(b2)},
                            {"lambda", std::to_string(lam)}});
            if (grid.size() >= 30) return grid;
          }
  return grid;
}

// Generalized Eulerian grid under the paper's conditions: a1, b1, lambda
// positive; a2, b2, d nonnegative; a2 + b2 > 0; b1 - d a1 >= 0.
std::vector<Params> gen_eulerian_grid() {
  std::vector<Params> grid;
  for (int a1 = 1; a1 <= 2; ++a1)
    for (int b1 = 1; b1 <= 2; ++b1)
      for (int lam = 1; lam <= 2; ++lam)
        for (int a2 = 0; a2 <= 1; ++a2)
          for (int b2 = 0; b2 <= 1; ++b2)
            for (int d = 0; d <= 1; ++d) {
              if (a2 + b2 == 0) continue;
              if (b1 - d * a1 < 0) continue;
              grid.push_back({{"a1", std::to_string(a1)},
                              {"a2", std::to_string(a2)},
                              {"b1", std::to_string(b1)},
                              {"b2", std::to_string(b2)},
                              {"d", std::to_string(d)},
                              {"lambda", std::to_string(lam)}});
              if (grid.size() >= 30) return grid;
            }
  return grid;
}

void add_table_tasks(std::vector<Task>& tasks, const FamilyTarget& t,
                     const std::string& property,
                     const std::function<bool(const Poly&, long)>& decide,
                     const std::function<nlohmann::json(const Poly&)>& witness = {}) {
  tasks.push_back([t, property, decide, witness]() -> Certificate {
    FamilyTable table = family(t.name, t.params, t.last);
    for (long n = std::max(t.first, table.first_index); n <= t.last; ++n) {
      const Poly& p = table.at(n);
      if (!decide(p, n)) {
        nlohmann::json w = witness ? witness(p) : nlohmann::json(p.to_string());
        return make_cert(t.name, t.params, n, property, false, w);
      }
    }
    return make_cert(t.name, t.params, t.last, property, true);
  });
}

SuiteResult finish(std::vector<Task> tasks, long jobs) {
  SuiteResult res;
  res.certificates = run_tasks(std::move(tasks), jobs);
  for (const auto& c : res.certificates)
    if (!c.pass && !c.conjecture) res.all_pass = false;
  return res;
}

std::vector<FamilyTarget> targets_for(const SuiteOptions& opt,
                                      std::vector<FamilyTarget> defaults) {
  if (opt.family.empty()) return defaults;
  FamilyTable probe = family(opt.family, opt.params, opt.n_max < 0 ? 8 : opt.n_max);
  return {{opt.family, opt.params, probe.first_index, probe.last_index()}};
}

SuiteResult suite_hurwitz(const SuiteOptions& opt) {
  std::vector<Task> tasks;
  for (const auto& t : targets_for(opt, default_hurwitz_targets(opt.n_max)))
    add_table_tasks(
        tasks, t, "hurwitz", [](const Poly& p, long) { return is_hurwitz_stable(p); },
        stability_witness);
  return finish(std::move(tasks), opt.jobs);
}

SuiteResult suite_real_rooted(const SuiteOptions& opt) {
  std::vector<Task> tasks;
  std::vector<FamilyTarget> defaults;
  long n10 = opt.n_max < 0 ? 10 : opt.n_max;
  for (const auto& p : swr_grid()) defaults.push_back({"swr_rows", p, 0, n10});
  for (const auto& p : gen_eulerian_grid())
    defaults.push_back({"gen_eulerian_rows", p, 0, n10});
  for (const auto& t : targets_for(opt, defaults))
    add_table_tasks(tasks, t, "real-rooted",
                    [](const Poly& p, long) { return p.is_zero() || is_real_rooted(p); });
  return finish(std::move(tasks), opt.jobs);
}

SuiteResult suite_turan_hurwitz(const SuiteOptions& opt) {
  long n10 = opt.n_max < 0 ? 10 : opt.n_max;
  struct TuranTarget {
    std::string name;
    Params params;
    Rational shift;
    long first;
  };
  std::vector<TuranTarget> targets;
  if (!opt.family.empty()) {
    Rational shift = param_rational_or(opt.params, "shift", Rational(0));
    targets.push_back({opt.family, opt.params, shift, 0});
  } else {
    targets.push_back({"eulerian", {}, Rational(0), 0});
    targets.push_back({"bell", {}, Rational(0), 0});
    targets.push_back({"alt_runs_A", {}, Rational(0), 1});
    targets.push_back({"updown", {}, Rational(0), 0});
    targets.push_back({"peaks_M", {}, Rational(0), 1});
    targets.push_back({"alt_runs_B", {}, Rational(0), 1});
    for (long r = 2; r <= 3; ++r) {
      targets.push_back(
          {"stirling_peaks_interior", {{"r", std::to_string(r)}}, Rational(0), 1});
      targets.push_back({"stirling_peaks_left", {{"r", std::to_string(r)}}, Rational(0), 0});
    }
    for (const auto& p : gen_eulerian_grid())
      targets.push_back({"gen_eulerian_rows", p, Rational(0), 0});
    for (const auto& p : swr_grid())
      targets.push_back({"swr_rows", p, -rational_from_string(p.at("lambda")), 0});
  }
  std::vector<Task> tasks;
  for (const auto& t : targets) {
    tasks.push_back([t, n10]() -> Certificate {
      FamilyTable table = family(t.name, t.params, t.first + n10 + 2);
      for (long n = 0; n + 2 < static_cast<long>(table.polys.size()); ++n) {
        Poly expr = turan(table.polys, n, t.shift);
        if (!is_hurwitz_stable(expr))
          return make_cert(t.name, t.params, table.first_index + n, "turan-hurwitz", false,
                           stability_witness(expr));
      }
      return make_cert(t.name, t.params, t.first + n10, "turan-hurwitz", true);
    });
  }
  return finish(std::move(tasks), opt.jobs);
}

SuiteResult suite_interlacing_chain(const SuiteOptions& opt) {
  std::vector<Task> tasks;
  long n7 = opt.n_max < 0 ? 7 : opt.n_max;
  std::vector<FamilyTarget> defaults = {{"eulerian", {}, 1, n7 + 1}};
  for (auto t : targets_for(opt, defaults)) {
    tasks.push_back([t]() -> Certificate {
      FamilyTable table = family(t.name, t.params, t.last);
      for (long n = std::max(t.first, table.first_index); n < t.last; ++n) {
        auto v = interlacing_relation(table.at(n), table.at(n + 1));
        if (!v.g_ll_f)
          return make_cert(t.name, t.params, n, "interlacing-chain", false, v.witness);
      }
      return make_cert(t.name, t.params, t.last, "interlacing-chain", true);
    });
  }
  return finish(std::move(tasks), opt.jobs);
}

SuiteResult suite_gamma(const SuiteOptions& opt, bool semi) {
  std::vector<Task> tasks;
  long n10 = opt.n_max < 0 ? 10 : opt.n_max;
  long n12 = opt.n_max < 0 ? 12 : opt.n_max;
  std::vector<FamilyTarget> defaults;
  if (semi)
    defaults = {{"stirling_runs", {}, 0, n12},
                {"alt_desc_A", {}, 1, n10},
                {"alt_desc_B", {}, 0, n10}};
  else
    defaults = {{"eulerian", {}, 0, n10}};
  for (const auto& t : targets_for(opt, defaults)) {
    if (semi) {
      add_table_tasks(tasks, t, "semi-gamma", [](const Poly& p, long) {
        return p.is_zero() || semi_gamma(p).nonnegative();
      });
    } else {
      add_table_tasks(tasks, t, "gamma", [](const Poly& p, long) {
        return p.is_zero() || gamma_vector(p, p.degree()).nonnegative();
      });
    }
  }
  return finish(std::move(tasks), opt.jobs);
}

SuiteResult suite_alt_increasing(const SuiteOptions& opt) {
  std::vector<Task> tasks;
  std::vector<FamilyTarget> defaults;
  long n7 = opt.n_max < 0 ? 7 : opt.n_max;
  for (long r = 2; r <= 4; ++r)
    defaults.push_back({"colored_plus", {{"r", std::to_string(r)}}, 1, n7});
  for (long r = 2; r <= 2; ++r) {
    defaults.push_back({"stirling_peaks_interior", {{"r", std::to_string(r)}}, 1,
                        opt.n_max < 0 ? 10 : opt.n_max});
    defaults.push_back({"stirling_peaks_left", {{"r", std::to_string(r)}}, 1,
                        opt.n_max < 0 ? 10 : opt.n_max});
  }
  for (const auto& t : targets_for(opt, defaults))
    add_table_tasks(tasks, t, "alt-increasing", [](const Poly& p, long) {
      return p.is_zero() || is_alternatingly_increasing(p, p.degree());
    });
  if (opt.family.empty()) {
    for (long s = 1; s <= 7; ++s) {
      tasks.push_back([s]() -> Certificate {
        std::string parts;
        for (long j = 0; j < s; ++j) parts += (j ? ":1" : "1");
        Params p{{"s", parts}};
        FamilyTable t = family("signed_multiset", p, 0);
        const Poly& poly = t.at(t.first_index);
        bool ok = is_alternatingly_increasing(poly, poly.degree());
        return make_cert("signed_multiset", p, s, "alt-increasing", ok);
      });
    }
  }
  return finish(std::move(tasks), opt.jobs);
}

SuiteResult suite_qlogconvex(const SuiteOptions& opt, bool strong) {
  std::vector<Task> tasks;
  long N = opt.n_max < 0 ? 8 : opt.n_max;
  std::vector<FamilyTarget> defaults;
  if (strong)
    defaults = {{"alt_desc_A", {}, 1, N + 3},
                {"alt_desc_B", {}, 0, N + 2},
                {"derivative_Q", {{"delta", "2"}}, 0, N + 2}};
  else
    defaults = {{"eulerian", {}, 0, N + 2},
                {"bell", {}, 0, N + 2},
                {"alt_runs_A", {}, 1, N + 3},
                {"updown", {}, 0, N + 2},
                {"peaks_M", {}, 1, N + 3}};
  for (const auto& t : targets_for(opt, defaults)) {
    bool is_strong = strong;
    tasks.push_back([t, N, is_strong]() -> Certificate {
      FamilyTable table = family(t.name, t.params, t.last);
      Verdict v = is_strong ? strong_q_log_convexity(table.polys, N)
                            : q_log_convexity(table.polys, N);
      std::string prop = is_strong ? "strong-qlogconvex" : "qlogconvex";
      if (!v.pass)
        return make_cert(t.name, t.params, v.first_failure->index, prop, false,
                         v.first_failure->got.to_string());
      return make_cert(t.name, t.params, N, prop, true);
    });
  }
  return finish(std::move(tasks), opt.jobs);
}

Certificate verdict_cert(const std::string& family, const Params& params, long n,
                         const std::string& property, const Verdict& v) {
  if (v.pass) return make_cert(family, params, n, property, true);
  nlohmann::json w;
  w["first_failure_index"] = v.first_failure->index;
  w["expected"] = v.first_failure->expected.to_string();
  w["got"] = v.first_failure->got.to_string();
  return make_cert(family, params, n, property, false, w);
}

SuiteResult suite_identities(const SuiteOptions& opt) {
  long order = opt.order < 0 ? 10 : opt.order;
  std::vector<Task> tasks;
  auto push = [&tasks](const std::string& fam, const Params& p, long n,
                       const std::string& prop, std::function<Verdict()> run) {
    tasks.push_back([=]() -> Certificate { return verdict_cert(fam, p, n, prop, run()); });
  };
  push("alt_desc_A", {}, order, "identity-jcf",
       [=] { return verify_jcf("alt_desc_A", {}, order); });
  push("alt_desc_B", {}, order, "identity-jcf",
       [=] { return verify_jcf("alt_desc_B", {}, order); });
  for (long delta = 1; delta <= 3; ++delta) {
    Params p{{"delta", std::to_string(delta)}};
    push("derivative_Q", p, order, "identity-jcf",
         [=] { return verify_jcf("derivative_Q", p, order); });
    push("derivative_Q", p, order, "identity-egf",
         [=] { return verify_egf_crossmul("derivative_Q", p, order); });
  }
  Params sparams{{"beta", "1"}, {"nu", "1/2"}};
  push("s_triangle_rows", sparams, order, "identity-jcf",
       [=] { return verify_jcf("s_triangle_rows", sparams, order); });
  push("alt_desc_A", {}, order, "identity-egf",
       [=] { return verify_egf_crossmul("alt_desc_A", {}, order); });
  push("alt_desc_B", {}, order, "identity-egf",
       [=] { return verify_egf_crossmul("alt_desc_B", {}, order); });
  push("eulerian", {}, 6, "identity-xd", [=] { return verify_xd_identity("eulerian", 6, 17); });
  push("stirling_runs", {}, 6, "identity-xd",
       [=] { return verify_xd_identity("stirling_runs", 6, 17); });
  for (long d1 = 1; d1 <= 3; ++d1)
    for (long d2 = d1; d2 <= 3; ++d2)
      push("sym_T", {{"delta1", std::to_string(d1)}, {"delta2", std::to_string(d2)}}, 8,
           "identity-convolution", [=] { return verify_convolution(d1, d2, 8); });
  for (long r = 2; r <= 3; ++r)
    for (long n = 1; n <= 4; ++n) {
      Params p{{"r", std::to_string(r)}, {"n", std::to_string(n)}};
      push("colored_full", p, n, "identity-counting",
           [=] { return verify_counting_identity("colored_full", p, 10); });
      push("colored_plus", p, n, "identity-counting",
           [=] { return verify_counting_identity("colored_plus", p, 10); });
      push("colored_minus", p, n, "identity-counting",
           [=] { return verify_counting_identity("colored_minus", p, 10); });
    }
  for (long k = 2; k <= 4; ++k)
    for (long n = 1; n <= 4; ++n) {
      Params p{{"k", std::to_string(k)}, {"n", std::to_string(n)}};
      push("kary_ascent", p, n, "identity-counting",
           [=] { return verify_counting_identity("kary_ascent", p, 10); });
    }
  push("signed_multiset", {{"s", "2:1:2"}}, 5, "identity-counting",
       [=] { return verify_counting_identity("signed_multiset", {{"s", "2:1:2"}}, 10); });
  Params cq{{"r", "2"}, {"n", "4"}, {"q", "1:1/2:2:1"}};
  push("colored_q_eulerian", cq, 4, "identity-counting",
       [=] { return verify_counting_identity("colored_q_eulerian", cq, 10); });
  push("alt_desc_A", {}, 8, "identity-gamma-basis",
       [=] { return verify_gamma_basis("alt_desc_A", 8); });
  push("alt_desc_B", {}, 8, "identity-gamma-basis",
       [=] { return verify_gamma_basis("alt_desc_B", 8); });
  return finish(std::move(tasks), opt.jobs);
}

struct OraclePair {
  std::string kind;
  Params kind_params;
  std::string stat;
  std::string family_name;
  Params family_params;
  long index;
};

Certificate compare_oracle(const OraclePair& op) {
  Poly enumerated = combinat::distribution(op.kind, op.kind_params, op.stat);
  FamilyTable t = family(op.family_name, op.family_params, op.index);
  const Poly& expected = t.at(op.index);
  bool ok = expected == enumerated;
  nlohmann::json w;
  if (!ok) {
    w["family_poly"] = expected.to_string();
    w["enumeration"] = enumerated.to_string();
  }
  Certificate c =
      make_cert(op.family_name, op.family_params, op.index, "oracle-compare", ok, w);
  c.params["kind"] = op.kind;
  c.params["stat"] = op.stat;
  return c;
}

std::vector<OraclePair> default_oracle_pairs() {
  std::vector<OraclePair> pairs;
  auto np = [](long n) { return Params{{"n", std::to_string(n)}}; };
  for (long n = 1; n <= 8; ++n) pairs.push_back({"S_n", np(n), "des", "eulerian", {}, n});
  for (long r = 1; r <= 3; ++r)
    for (long n = r; n <= 8; ++n) {
      Params kp = np(n);
      kp["r"] = std::to_string(r);
      pairs.push_back({"S_n", kp, "exc_r", "r_eulerian", {{"r", std::to_string(r)}}, n});
    }
  for (long n = 1; n <= 8; ++n) pairs.push_back({"S_n", np(n), "alt_runs", "alt_runs_A", {}, n});
  for (long n = 1; n <= 8; ++n) pairs.push_back({"S_n", np(n), "las", "updown", {}, n});
  for (long n = 1; n <= 8; ++n) {
    pairs.push_back({"S_n", np(n), "ipk", "peaks_W", {}, n});
    pairs.push_back({"S_n", np(n), "lpk", "peaks_Wtilde", {}, n});
    pairs.push_back({"S_n", np(n), "altdes_A", "alt_desc_A", {}, n});
  }
  for (long n = 1; n <= 6; ++n) {
    pairs.push_back({"B_n", np(n), "altdes_B", "alt_desc_B", {}, n});
    pairs.push_back({"B_n_up", np(n), "alt_runs_B", "alt_runs_B", {}, n});
  }
  for (long r = 2; r <= 3; ++r)
    for (long n = 1; n <= 5; ++n) {
      Params kp = np(n);
      kp["r"] = std::to_string(r);
      Params fp{{"r", std::to_string(r)}};
      pairs.push_back({"Z_r_wr_S_n", kp, "des_colored", "colored_full", fp, n});
      pairs.push_back({"Z_r_plus", kp, "des_colored", "colored_plus", fp, n});
      pairs.push_back({"Z_r_minus", kp, "des_colored", "colored_minus", fp, n});
    }
  for (long r = 2; r <= 4; ++r)
    for (long n = 1; r * n <= 12; ++n) {
      Params kp = np(n);
      kp["r"] = std::to_string(r);
      Params fp{{"r", std::to_string(r)}};
      pairs.push_back({"phi_r_stirling", kp, "ipk_r", "stirling_peaks_interior", fp, n});
      pairs.push_back({"phi_r_stirling", kp, "lpk_r", "stirling_peaks_left", fp, n});
    }
  for (long k = 2; k <= 4; ++k)
    for (long n = 1; n <= 6; ++n) {
      Params kp = np(n);
      kp["k"] = std::to_string(k);
      pairs.push_back({"k_ary", kp, "asc", "kary_ascent", {{"k", std::to_string(k)}}, n});
    }
  for (long n2 = 0; n2 <= 3; ++n2)
    for (long n1 = (n2 == 0 ? 1 : 0); n1 + 2 * n2 <= 7; ++n1) {
      std::string parts;
      for (long j = 0; j < n2; ++j) parts += (parts.empty() ? "2" : ":2");
      for (long j = 0; j < n1; ++j) parts += (parts.empty() ? "1" : ":1");
      Params sp{{"s", parts}};
      pairs.push_back({"multiset_signed", sp, "des", "signed_multiset", sp, n1 + 2 * n2});
    }
  return pairs;
}

SuiteResult suite_oracle_compare(const SuiteOptions& opt) {
  std::vector<OraclePair> pairs;
  if (!opt.kind.empty()) {
    long n_max = opt.n_max < 0 ? 6 : opt.n_max;
    for (long n = 1; n <= n_max; ++n) {
      OraclePair op{opt.kind, opt.params, opt.stat, opt.family, opt.params, n};
      op.kind_params["n"] = std::to_string(n);
      pairs.push_back(op);
    }
  } else {
    pairs = default_oracle_pairs();
  }
  std::vector<Task> tasks;
  for (const auto& op : pairs)
    tasks.push_back([op]() -> Certificate { return compare_oracle(op); });
  return finish(std::move(tasks), opt.jobs);
}

// Wherever a hypothesis predicate holds over a deterministic grid, the
// corresponding conclusion decider must agree.
SuiteResult suite_criteria_soundness(const SuiteOptions& opt) {
  std::vector<Task> tasks;
  for (const auto& p : swr_grid()) {
    tasks.push_back([p]() -> Certificate {
      RecurrenceSpec spec = swr_spec(param_rational(p, "a1"), param_rational(p, "a2"),
                                     param_rational(p, "b1"), param_rational(p, "b2"),
                                     param_rational(p, "lambda"));
      bool hyp = criterion_check_params("swr_corollary", p);
      for (long n = 0; n <= 8 && hyp; ++n)
        if (!criterion_check("thm_RS_1", spec, n)) hyp = false;
      if (!hyp)
        return make_cert("swr_rows", p, 8, "criteria-soundness", true, "hypothesis open");
      FamilyTable t = family("swr_rows", p, 8);
      for (long n = 0; n <= 8; ++n)
        if (!t.at(n).is_zero() && !is_real_rooted(t.at(n)))
          return make_cert("swr_rows", p, n, "criteria-soundness", false);
      return make_cert("swr_rows", p, 8, "criteria-soundness", true);
    });
  }
  for (long scale = 1; scale <= 4; ++scale) {
    tasks.push_back([scale]() -> Certificate {
      RecurrenceSpec spec = stirling_runs_spec();
      spec.alpha = [scale](long n) { return Rational(scale * 2 * n); };
      spec.mu = constant_coeff(Rational(-scale));
      Params p{{"scale", std::to_string(scale)}};
      bool hyp = true;
      for (long n = 1; n <= 8; ++n)
        if (!criterion_check("thm_HS_2", spec, n)) hyp = false;
      if (!hyp)
        return make_cert("stirling_runs", p, 8, "criteria-soundness", true, "hypothesis open");
      auto polys = generate_T(spec, 8);
      for (const auto& q : polys)
        if (!is_hurwitz_stable(q))
          return make_cert("stirling_runs", p, 0, "criteria-soundness", false);
      return make_cert("stirling_runs", p, 8, "criteria-soundness", true);
    });
  }
  for (long delta = 1; delta <= 3; ++delta)
    for (long num = 1; num <= 3; ++num) {
      tasks.push_back([delta, num]() -> Certificate {
        Rational nu = make_rational(num, 2);
        RecurrenceSpec spec = sym_T_spec(delta, Rational(1), nu, -nu);
        Params p{{"delta", std::to_string(delta)}, {"nu", rational_to_string(nu)}};
        bool hyp = true;
        for (long n = delta - 1; n <= delta + 6; ++n)
          if (!criterion_check("thm_sym_HS", spec, n)) hyp = false;
        if (!hyp)
          return make_cert("sym_T", p, delta + 6, "criteria-soundness", true,
                           "hypothesis open");
        auto polys = generate_T(spec, delta + 6);
        for (const auto& q : polys)
          if (!is_hurwitz_stable(q) || !semi_gamma(q).nonnegative())
            return make_cert("sym_T", p, 0, "criteria-soundness", false);
        return make_cert("sym_T", p, delta + 6, "criteria-soundness", true);
      });
    }
  for (long n = 2; n <= 5; ++n) {
    tasks.push_back([n]() -> Certificate {
      std::vector<std::vector<Rational>> lists;
      for (long k = 0; k < n; ++k) {
        std::vector<Rational> roots;
        for (long i = 0; i < n; ++i)
          roots.push_back(i < k ? Rational(0) : make_rational(1, 2));
        lists.push_back(roots);
      }
      Params p{{"n", std::to_string(n)}};
      if (!alter_incr_hypothesis(lists))
        return make_cert("carlitz", p, n, "criteria-soundness", true, "hypothesis open");
      std::vector<WeightedRootList> wls;
      for (const auto& roots : lists) wls.push_back({Rational(1), roots});
      Poly h = carlitz_h(wls, n);
      long d = h.degree();
      bool ok = ll(reciprocal(h, d), h) && is_alternatingly_increasing(h, d);
      return make_cert("carlitz", p, n, "criteria-soundness", ok);
    });
  }
  return finish(std::move(tasks), opt.jobs);
}

SuiteResult suite_conjecture_Tnr(const SuiteOptions& opt) {
  long n10 = opt.n_max < 0 ? 10 : opt.n_max;
  std::vector<Task> tasks;
  for (long r = 2; r <= 4; ++r) {
    Params p{{"r", std::to_string(r)}};
    tasks.push_back([p, n10]() -> Certificate {
      FamilyTable t = family("stirling_peaks_T", p, n10);
      for (long n = 0; n <= n10; ++n)
        if (!is_hurwitz_stable(t.at(n))) {
          Certificate c = make_cert("stirling_peaks_T", p, n, "conjecture-Tnr", false,
                                    stability_witness(t.at(n)));
          c.conjecture = true;
          return c;
        }
      Certificate c = make_cert("stirling_peaks_T", p, n10, "conjecture-Tnr", true);
      c.conjecture = true;
      return c;
    });
  }
  return finish(std::move(tasks), opt.jobs);
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"real-rooted",       "hurwitz",      "turan-hurwitz",
          "interlacing-chain", "gamma",        "semi-gamma",
          "alt-increasing",    "qlogconvex",   "strong-qlogconvex",
          "identities",        "oracle-compare", "criteria-soundness",
          "conjecture-Tnr"};
}

SuiteResult run_suite(const std::string& suite, const SuiteOptions& opt) {
  if (suite == "hurwitz") return suite_hurwitz(opt);
  if (suite == "real-rooted") return suite_real_rooted(opt);
  if (suite == "turan-hurwitz") return suite_turan_hurwitz(opt);
  if (suite == "interlacing-chain") return suite_interlacing_chain(opt);
  if (suite == "gamma") return suite_gamma(opt, false);
  if (suite == "semi-gamma") return suite_gamma(opt, true);
  if (suite == "alt-increasing") return suite_alt_increasing(opt);
  if (suite == "qlogconvex") return suite_qlogconvex(opt, false);
  if (suite == "strong-qlogconvex") return suite_qlogconvex(opt, true);
  if (suite == "identities") return suite_identities(opt);
  if (suite == "oracle-compare") return suite_oracle_compare(opt);
  if (suite == "criteria-soundness") return suite_criteria_soundness(opt);
  if (suite == "conjecture-Tnr") return suite_conjecture_Tnr(opt);
  throw bad_params("unknown suite '" + suite + "'");
}

SuiteResult run_oracle_compare(const std::string& kind, const std::string& stat,
                               const std::string& family_name, const Params& params,
                               long n_max, long jobs) {
  SuiteOptions opt;
  opt.kind = kind;
  opt.stat = stat;
  opt.family = family_name;
  opt.params = params;
  opt.n_max = n_max;
  opt.jobs = jobs;
  return suite_oracle_compare(opt);
}

}  // namespace polystab
