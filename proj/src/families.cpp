#include "polystab/families.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

#include "polystab/errors.hpp"

namespace polystab {

namespace {

std::atomic<long> g_size_guard{1000000};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

long checked_total(const DegreeLaw& law, long first, long N) {
  long total = 0;
  for (long n = first; n <= N; ++n) total += law(n) + 1;
  if (total > size_guard())
    throw size_guard_exceeded("table would hold " + std::to_string(total) +
                              " coefficients; guard is " + std::to_string(size_guard()));
  return total;
}

FamilyTable from_spec(const std::string& name, const Params& params,
                      const RecurrenceSpec& spec, long N) {
  if (N < spec.seed_index)
    throw bad_params(name + ": N must be at least " + std::to_string(spec.seed_index));
  checked_total(spec.degree_law, spec.seed_index, N);
  FamilyTable t;
  t.name = name;
  t.params = params;
  t.first_index = spec.seed_index;
  t.polys = generate_T(spec, N);
  return t;
}

Rational half(long num) { return make_rational(num, 2); }

}  // namespace

const Poly& FamilyTable::at(long n) const {
  if (!has(n))
    throw index_out_of_range(name + ": index " + std::to_string(n) + " outside [" +
                             std::to_string(first_index) + ", " +
                             std::to_string(last_index()) + "]");
  return polys[static_cast<std::size_t>(n - first_index)];
}

const std::vector<Rational>& Triangle::row(long n) const {
  long i = n - first_index;
  if (i < 0 || i >= static_cast<long>(rows.size()))
    throw index_out_of_range(name + ": row " + std::to_string(n));
  return rows[static_cast<std::size_t>(i)];
}

Poly Triangle::row_poly(long n) const { return Poly(row(n)); }

long size_guard() { return g_size_guard.load(); }
void set_size_guard(long max_total_coefficients) { g_size_guard.store(max_total_coefficients); }

Rational param_rational(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw missing_params("missing parameter '" + key + "'");
  return rational_from_string(it->second);
}

Rational param_rational_or(const Params& p, const std::string& key, const Rational& dflt) {
  auto it = p.find(key);
  return it == p.end() ? dflt : rational_from_string(it->second);
}

long param_long(const Params& p, const std::string& key) {
  return to_long(param_rational(p, key));
}

long param_long_or(const Params& p, const std::string& key, long dflt) {
  auto it = p.find(key);
  return it == p.end() ? dflt : to_long(rational_from_string(it->second));
}

std::vector<Rational> param_list(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw missing_params("missing parameter '" + key + "'");
  std::vector<Rational> out;
  for (const auto& part : split_list(it->second)) out.push_back(rational_from_string(part));
  return out;
}

// ---------------------------------------------------------------------------
// Recurrence specs for the registry.
// ---------------------------------------------------------------------------

RecurrenceSpec eulerian_spec() {
  RecurrenceSpec s;
  s.beta = [](long n) { return Rational(n); };
  s.gamma = constant_coeff(1);
  s.nu = constant_coeff(-1);
  s.phi = constant_coeff(1);
  s.seed = Poly(1);
  s.seed_index = 0;
  s.degree_law = [](long n) { return n == 0 ? 0 : n - 1; };
  return s;
}

namespace {

RecurrenceSpec r_eulerian_spec(long r) {
  RecurrenceSpec s;
  s.beta = [r](long n) { return Rational(n + 1 - r); };
  s.gamma = constant_coeff(Rational(r));
  s.nu = constant_coeff(-1);
  s.phi = constant_coeff(1);
  s.seed = Poly(Rational(factorial(static_cast<unsigned long>(r))));
  s.seed_index = r;
  s.degree_law = [r](long n) { return n - r; };
  return s;
}

RecurrenceSpec j_poly_spec(Poly seed, long seed_index) {
  RecurrenceSpec s;
  s.beta = [](long n) { return Rational(n); };
  s.gamma = constant_coeff(1);
  s.nu = constant_coeff(-1);
  s.phi = constant_coeff(1);
  long drop = seed_index - seed.degree();
  s.seed = std::move(seed);
  s.seed_index = seed_index;
  s.degree_law = [drop](long n) { return n - drop; };
  return s;
}

// Mixed-Eulerian step: only the last composition part grows, so the chain
// needs a caller-supplied starting polynomial.
RecurrenceSpec mixed_eulerian_spec(long r, long n0, Poly seed) {
  RecurrenceSpec s;
  s.beta = [r](long n) { return Rational(n - r + 1); };
  s.gamma = constant_coeff(Rational(r));
  s.nu = constant_coeff(-1);
  s.phi = constant_coeff(1);
  s.seed = std::move(seed);
  s.seed_index = n0;
  s.degree_law = [r](long n) { return n - r; };
  return s;
}

RecurrenceSpec alt_runs_A_spec() {
  RecurrenceSpec s;
  s.alpha = [](long n) { return Rational(n - 1); };
  s.beta = constant_coeff(2);
  s.mu = constant_coeff(-1);
  s.phi = constant_coeff(1);
  s.seed = Poly(1);
  s.seed_index = 1;
  s.degree_law = [](long n) { return n == 1 ? 0 : n - 1; };
  return s;
}

RecurrenceSpec alt_runs_B_spec() {
  RecurrenceSpec s;
  s.alpha = [](long n) { return Rational(2 * n); };
  s.beta = constant_coeff(3);
  s.gamma = constant_coeff(-1);
  s.mu = constant_coeff(-2);
  s.phi = constant_coeff(2);
  s.seed = Poly::x();
  s.seed_index = 1;
  s.degree_law = [](long n) { return n; };
  return s;
}

RecurrenceSpec peaks_M_spec() {
  RecurrenceSpec s;
  s.alpha = [](long n) { return Rational(n); };
  s.gamma = constant_coeff(1);
  s.mu = constant_coeff(-1);
  s.phi = constant_coeff(1);
  s.seed = Poly{Rational(1), Rational(1)};
  s.seed_index = 1;
  s.degree_law = [](long n) { return n; };
  return s;
}

RecurrenceSpec andre_spec() {
  RecurrenceSpec s;
  s.beta = [](long n) { return Rational(n + 1); };
  s.nu = constant_coeff(-2);
  s.phi = constant_coeff(1);
  s.seed = Poly::x();
  s.seed_index = 1;
  s.degree_law = [](long n) { return (n + 1) / 2; };
  return s;
}

RecurrenceSpec derivative_Q_spec(long delta) {
  RecurrenceSpec s;
  s.beta = constant_coeff(Rational(delta));
  s.nu = constant_coeff(1);
  s.psi = constant_coeff(1);
  s.seed = Poly(1);
  s.seed_index = 0;
  s.degree_law = [](long n) { return n; };
  return s;
}

RecurrenceSpec alt_desc_A_spec() {
  RecurrenceSpec s;
  s.alpha = [](long n) { return half(n - 1); };
  s.beta = constant_coeff(1);
  s.gamma = [](long n) { return half(n + 1); };
  s.mu = constant_coeff(half(-1));
  s.nu = constant_coeff(half(1));
  s.phi = constant_coeff(half(-1));
  s.psi = constant_coeff(half(1));
  s.seed = Poly(1);
  s.seed_index = 1;
  s.degree_law = [](long n) { return n - 1; };
  return s;
}

RecurrenceSpec alt_desc_B_spec() {
  RecurrenceSpec s;
  s.alpha = [](long n) { return Rational(n); };
  s.beta = constant_coeff(1);
  s.gamma = [](long n) { return Rational(n + 1); };
  s.mu = constant_coeff(-1);
  s.nu = constant_coeff(1);
  s.phi = constant_coeff(-1);
  s.psi = constant_coeff(1);
  s.seed = Poly(1);
  s.seed_index = 0;
  s.degree_law = [](long n) { return n; };
  return s;
}

RecurrenceSpec s_triangle_spec(const Rational& beta, const Rational& nu) {
  if (!(nu > 0) || !(beta > 0)) throw bad_params("s_triangle_rows needs beta > 0 and nu > 0");
  RecurrenceSpec s;
  s.beta = [nu](long n) -> Rational { return 2 * Rational(n) * nu; };
  s.gamma = constant_coeff(beta);
  s.nu = constant_coeff(-4 * nu);
  s.phi = constant_coeff(2 * nu);
  s.seed = Poly(1);
  s.seed_index = 0;
  s.degree_law = [](long n) { return n / 2; };
  return s;
}

RecurrenceSpec stirling_peaks_interior_spec(long r) {
  RecurrenceSpec s;
  s.beta = [r](long n) { return Rational(r * n); };
  s.gamma = constant_coeff(1);
  s.nu = constant_coeff(Rational(-r));
  s.phi = constant_coeff(Rational(r));
  s.seed = Poly(1);
  s.seed_index = 1;
  s.degree_law = [](long n) { return n - 1; };
  return s;
}

RecurrenceSpec stirling_peaks_left_spec(long r) {
  RecurrenceSpec s;
  s.beta = [r](long n) { return Rational(r * n + 1); };
  s.nu = constant_coeff(Rational(-r));
  s.phi = constant_coeff(Rational(r));
  s.seed = Poly(1);
  s.seed_index = 0;
  s.degree_law = [](long n) { return n; };
  return s;
}

RecurrenceSpec colored_q_spec(long r, std::vector<Rational> qs, long N) {
  if (r < 1) throw bad_params("colored_q_eulerian needs r >= 1");
  if (static_cast<long>(qs.size()) == 1 && N > 1)
    qs.assign(static_cast<std::size_t>(N), qs[0]);
  if (static_cast<long>(qs.size()) < N)
    throw bad_params("colored_q_eulerian: q list shorter than N");
  std::vector<Rational> bracket;  // [r]_{q_i}, 1-based
  bracket.emplace_back(0);
  for (const auto& q : qs) bracket.push_back(q_integer(r, q));
  RecurrenceSpec s;
  auto br = [bracket](long i) { return bracket[static_cast<std::size_t>(i)]; };
  s.beta = [br](long n) -> Rational { return Rational(n + 1) * br(n + 1) - 1; };
  s.gamma = constant_coeff(1);
  s.nu = [br](long n) -> Rational { return -br(n + 1); };
  s.phi = [br](long n) { return br(n + 1); };
  s.seed = Poly{Rational(1), br(1) - 1};
  s.seed_index = 1;
  // Degree follows the leading-coefficient recursion; coefficients stay
  // nonnegative for q_i >= 0, so only the top term can cancel.
  std::vector<long> degs(static_cast<std::size_t>(std::max<long>(N, 1)) + 1, 0);
  degs[1] = br(1) == 1 ? 0 : 1;
  for (long m = 1; m < N; ++m) {
    Rational lead_factor =
        Rational(m + 1) * br(m + 1) - 1 - Rational(degs[static_cast<std::size_t>(m)]) * br(m + 1);
    degs[static_cast<std::size_t>(m + 1)] =
        degs[static_cast<std::size_t>(m)] + (lead_factor != 0 ? 1 : 0);
  }
  s.degree_law = [degs](long n) { return degs[static_cast<std::size_t>(n)]; };
  return s;
}

FamilyTable build_updown(const Params& params, long N) {
  FamilyTable t;
  t.name = "updown";
  t.params = params;
  t.first_index = 0;
  t.polys.push_back(Poly(1));
  if (N >= 1) t.polys.push_back(Poly::x());
  if (N >= 2) {
    FamilyTable runs = family("alt_runs_A", {}, N);
    Poly onepx{Rational(1), Rational(1)};
    for (long n = 2; n <= N; ++n) t.polys.push_back(half(1) * (onepx * runs.at(n)));
  }
  return t;
}

FamilyTable build_quasi_stirling(const Params& params, long N) {
  FamilyTable t;
  t.name = "quasi_stirling";
  t.params = params;
  t.first_index = 1;
  long total = 0;
  for (long n = 1; n <= N; ++n) total += n;
  if (total > size_guard()) throw size_guard_exceeded("quasi_stirling: guard exceeded");
  for (long n = 1; n <= N; ++n)
    t.polys.push_back(generate_T(j_poly_spec(Poly(1), n + 1), 2 * n).back());
  return t;
}

FamilyTable build_peaks_split(const std::string& which, const Params& params, long N) {
  FamilyTable m = family("peaks_M", {}, std::max<long>(N, 1));
  FamilyTable t;
  t.name = which;
  t.params = params;
  if (which == "peaks_W") {
    t.first_index = 1;
    for (long n = 1; n <= N; ++n) t.polys.push_back(even_odd_split(m.at(n)).second);
  } else {
    t.first_index = 0;
    t.polys.push_back(Poly(1));
    for (long n = 1; n <= N; ++n) t.polys.push_back(even_odd_split(m.at(n)).first);
  }
  return t;
}

FamilyTable build_stirling_peaks_T(const Params& params, long N) {
  FamilyTable mi = family("stirling_peaks_interior", params, std::max<long>(N, 1));
  FamilyTable le = family("stirling_peaks_left", params, N);
  FamilyTable t;
  t.name = "stirling_peaks_T";
  t.params = params;
  t.first_index = 0;
  Poly onepx{Rational(1), Rational(1)};
  for (long n = 0; n <= N; ++n) {
    Poly mn = n == 0 ? Poly(1) : mi.at(n);  // M_{0,r} = 1 extends the recurrence
    Poly num = Poly::x() * substitute_square(mn) + substitute_square(le.at(n));
    t.polys.push_back(exact_div(num, onepx));
  }
  return t;
}

FamilyTable build_counting(const std::string& name, const Params& params, long N) {
  FamilyTable t;
  t.name = name;
  t.params = params;
  long total = (N + 1) * (N + 2) / 2;
  if (total > size_guard()) throw size_guard_exceeded(name + ": guard exceeded");
  if (name == "colored_full") {
    long r = param_long(params, "r");
    t.first_index = 0;
    for (long n = 0; n <= N; ++n) {
      auto i = [r, n](long m) -> Rational { return rational_pow(Rational(r * m + 1), n); };
      t.polys.push_back(h_from_counts(i, n, n + 1));
    }
  } else if (name == "colored_plus") {
    long r = param_long(params, "r");
    t.first_index = 1;
    for (long n = 1; n <= N; ++n) {
      auto i = [r, n](long m) -> Rational {
        return rational_pow(Rational(r * m + 1), n) - rational_pow(Rational(r * m), n);
      };
      t.polys.push_back(h_from_counts(i, n - 1, n));
    }
  } else if (name == "colored_minus") {
    long r = param_long(params, "r");
    t.first_index = 1;
    for (long n = 1; n <= N; ++n) {
      auto i = [r, n](long m) -> Rational {
        return rational_pow(Rational(r * m), n) - rational_pow(Rational(r * m - r + 1), n);
      };
      t.polys.push_back(h_from_counts(i, n - 1, n));
    }
  } else {  // kary_ascent
    long k = param_long(params, "k");
    if (k < 1) throw bad_params("kary_ascent needs k >= 1");
    t.first_index = 0;
    for (long n = 0; n <= N; ++n) {
      auto i = [k, n](long m) {
        Rational prod(1);  // C(n + km, n)
        for (long j = 1; j <= n; ++j) prod *= make_rational(k * m + j, j);
        return prod;
      };
      t.polys.push_back(h_from_counts(i, n, n + 1));
    }
  }
  return t;
}

FamilyTable build_signed_multiset(const Params& params) {
  std::vector<Rational> parts = param_list(params, "s");
  long n = static_cast<long>(parts.size());
  long s = 0;
  for (const auto& p : parts) {
    long v = to_long(p);
    if (v != 1 && v != 2) throw bad_params("signed_multiset: parts must be 1 or 2");
    s += v;
  }
  FamilyTable t;
  t.name = "signed_multiset";
  t.params = params;
  t.first_index = s;
  auto i = [s, n](long m) -> Rational {
    return rational_pow(Rational(m + 1), s - n) * rational_pow(Rational(2 * m + 1), n);
  };
  t.polys.push_back(h_from_counts(i, s, s + 1));
  return t;
}

}  // namespace

RecurrenceSpec stirling_runs_spec() {
  RecurrenceSpec s;
  s.alpha = [](long n) { return Rational(2 * n); };
  s.beta = constant_coeff(1);
  s.mu = constant_coeff(-1);
  s.phi = constant_coeff(1);
  s.seed = Poly(1);
  s.seed_index = 0;
  s.degree_law = [](long n) { return n == 0 ? 0 : 2 * n - 1; };
  return s;
}

RecurrenceSpec sym_T_spec(long delta, const Rational& beta, const Rational& nu,
                          const Rational& mu) {
  if (delta < 1) throw bad_params("sym_T needs delta >= 1");
  RecurrenceSpec s;
  auto mn = [delta](long n) { return Rational(n - delta + 1); };
  s.alpha = [mn, mu](long n) -> Rational { return -mn(n) * mu; };
  s.beta = constant_coeff(beta);
  s.gamma = [mn, beta, nu](long n) -> Rational { return beta + mn(n) * nu; };
  s.mu = constant_coeff(mu);
  s.nu = constant_coeff(nu);
  s.phi = constant_coeff(-nu);
  s.psi = constant_coeff(-mu);
  s.seed = Poly(1);
  s.seed_index = delta - 1;
  s.degree_law = [delta](long n) { return n - delta + 1; };
  return s;
}

RecurrenceSpec swr_spec(const Rational& a1, const Rational& a2, const Rational& b1,
                        const Rational& b2, const Rational& lambda) {
  RecurrenceSpec s;
  s.beta = constant_coeff(b1 + b2);
  s.gamma = constant_coeff(lambda * (b1 + b2) + a2);
  s.nu = constant_coeff(b1);
  s.phi = constant_coeff(a1 + 2 * lambda * b1);
  s.psi = constant_coeff(lambda * (a1 + lambda * b1));
  s.seed = Poly(1);
  s.seed_index = 0;
  bool grows = b1 + b2 > 0;
  s.degree_law = [grows](long n) { return grows ? n : 0; };
  return s;
}

RecurrenceSpec gen_eulerian_spec(const Rational& a1, const Rational& a2, const Rational& b1,
                                 const Rational& b2, const Rational& d,
                                 const Rational& lambda) {
  if (lambda == 0) throw bad_params("gen_eulerian needs lambda != 0");
  RecurrenceSpec s;
  Rational top = d * (b1 - d * a1) / lambda;
  s.alpha = [top](long n) -> Rational { return Rational(n) * top; };
  s.beta = [b1, d, a1, b2, a2](long n) -> Rational { return Rational(n) * (b1 - d * a1) + b2 + d * a2; };
  s.gamma = constant_coeff(lambda * a2);
  s.mu = constant_coeff(-top);
  s.nu = constant_coeff(2 * d * a1 - b1);
  s.phi = constant_coeff(lambda * a1);
  s.seed = Poly(1);
  s.seed_index = 0;
  bool full = !(d == 0 && b2 == 0);
  s.degree_law = [full](long n) { return full ? n : std::max<long>(n - 1, 0); };
  return s;
}

RecurrenceSpec flower_spec() {
  RecurrenceSpec s;
  s.beta = [](long n) { return Rational(2 * n + 1); };
  s.gamma = constant_coeff(1);
  s.nu = constant_coeff(-2);
  s.phi = constant_coeff(1);
  s.seed = Poly(1);
  s.seed_index = 0;
  s.degree_law = [](long n) { return n; };
  return s;
}

RecurrenceSpec bell_spec() {
  RecurrenceSpec s;
  s.beta = constant_coeff(1);
  s.phi = constant_coeff(1);
  s.seed = Poly(1);
  s.seed_index = 0;
  s.degree_law = [](long n) { return n; };
  return s;
}

Poly h_from_counts(const std::function<Rational(long)>& i, long n, long d) {
  if (d < 1 || n > d - 1) throw bad_params("h_from_counts: need degree n <= d-1");
  // (1-x)^d * sum_{m=0}^{2d} i(m) x^m, truncated at degree 2d; the block
  // x^d..x^{2d} must vanish for a genuine polynomial counting function.
  std::vector<Rational> binom_alt(static_cast<std::size_t>(d) + 1);
  for (long j = 0; j <= d; ++j) {
    Rational b{binomial(static_cast<unsigned long>(d), static_cast<unsigned long>(j))};
    binom_alt[static_cast<std::size_t>(j)] = (j % 2 == 0) ? b : -b;
  }
  std::vector<Rational> counts(static_cast<std::size_t>(2 * d) + 1);
  for (long m = 0; m <= 2 * d; ++m) counts[static_cast<std::size_t>(m)] = i(m);
  std::vector<Rational> conv(static_cast<std::size_t>(2 * d) + 1, Rational(0));
  for (long j = 0; j <= 2 * d; ++j) {
    Rational acc(0);
    for (long k = std::max<long>(0, j - d); k <= j; ++k)
      acc += counts[static_cast<std::size_t>(k)] * binom_alt[static_cast<std::size_t>(j - k)];
    conv[static_cast<std::size_t>(j)] = acc;
  }
  for (long j = d; j <= 2 * d; ++j)
    if (conv[static_cast<std::size_t>(j)] != 0)
      throw not_polynomial_counting("h_from_counts: residue at x^" + std::to_string(j));
  conv.resize(static_cast<std::size_t>(d));
  return Poly(std::move(conv));
}

Poly carlitz_h(const std::vector<WeightedRootList>& lists, long n) {
  for (const auto& wl : lists)
    if (static_cast<long>(wl.roots.size()) != n)
      throw bad_root_list("carlitz_h: every root list must have length n");
  auto i = [&lists](long m) {
    Rational acc(0);
    for (const auto& wl : lists) {
      Rational prod = wl.weight;
      for (const auto& r : wl.roots) prod *= Rational(m) + r;
      acc += prod;
    }
    return acc;
  };
  return h_from_counts(i, n, n + 1);
}

FamilyTable family(const std::string& name, const Params& params, long N) {
  if (name == "eulerian") return from_spec(name, params, eulerian_spec(), N);
  if (name == "r_eulerian")
    return from_spec(name, params, r_eulerian_spec(param_long(params, "r")), N);
  if (name == "j_poly") {
    long r = param_long(params, "r");
    return from_spec(name, params, j_poly_spec(Poly(1), r), N);
  }
  if (name == "mixed_eulerian_chain") {
    if (params.find("seed") == params.end())
      throw missing_seed("mixed_eulerian_chain needs a seed polynomial");
    long r = param_long(params, "r");
    long n0 = param_long(params, "n0");
    Poly seed{param_list(params, "seed")};
    return from_spec(name, params, mixed_eulerian_spec(r, n0, seed), N);
  }
  if (name == "quasi_stirling") return build_quasi_stirling(params, N);
  if (name == "alt_runs_A") return from_spec(name, params, alt_runs_A_spec(), N);
  if (name == "alt_runs_B") return from_spec(name, params, alt_runs_B_spec(), N);
  if (name == "stirling_runs") return from_spec(name, params, stirling_runs_spec(), N);
  if (name == "updown") return build_updown(params, N);
  if (name == "peaks_M") return from_spec(name, params, peaks_M_spec(), N);
  if (name == "peaks_W" || name == "peaks_Wtilde") return build_peaks_split(name, params, N);
  if (name == "bell") return from_spec(name, params, bell_spec(), N);
  if (name == "andre") return from_spec(name, params, andre_spec(), N);
  if (name == "flower") return from_spec(name, params, flower_spec(), N);
  if (name == "swr_rows")
    return from_spec(name, params,
                     swr_spec(param_rational(params, "a1"), param_rational(params, "a2"),
                              param_rational(params, "b1"), param_rational(params, "b2"),
                              param_rational(params, "lambda")),
                     N);
  if (name == "gen_eulerian_rows")
    return from_spec(name, params,
                     gen_eulerian_spec(param_rational(params, "a1"), param_rational(params, "a2"),
                                       param_rational(params, "b1"), param_rational(params, "b2"),
                                       param_rational(params, "d"),
                                       param_rational(params, "lambda")),
                     N);
  if (name == "sym_T") {
    Rational nu = param_rational(params, "nu");
    return from_spec(name, params,
                     sym_T_spec(param_long(params, "delta"), param_rational(params, "beta"), nu,
                                param_rational_or(params, "mu", -nu)),
                     N);
  }
  if (name == "derivative_Q")
    return from_spec(name, params, derivative_Q_spec(param_long(params, "delta")), N);
  if (name == "alt_desc_A") return from_spec(name, params, alt_desc_A_spec(), N);
  if (name == "alt_desc_B") return from_spec(name, params, alt_desc_B_spec(), N);
  if (name == "s_triangle_rows")
    return from_spec(name, params,
                     s_triangle_spec(param_rational(params, "beta"), param_rational(params, "nu")),
                     N);
  if (name == "colored_q_eulerian")
    return from_spec(name, params,
                     colored_q_spec(param_long(params, "r"), param_list(params, "q"), N), N);
  if (name == "stirling_peaks_interior")
    return from_spec(name, params, stirling_peaks_interior_spec(param_long(params, "r")), N);
  if (name == "stirling_peaks_left")
    return from_spec(name, params, stirling_peaks_left_spec(param_long(params, "r")), N);
  if (name == "stirling_peaks_T") return build_stirling_peaks_T(params, N);
  if (name == "colored_full" || name == "colored_plus" || name == "colored_minus" ||
      name == "kary_ascent")
    return build_counting(name, params, N);
  if (name == "signed_multiset") return build_signed_multiset(params);
  throw unknown_family("unknown family '" + name + "'");
}

std::vector<std::string> family_names() {
  return {"eulerian",
          "r_eulerian",
          "j_poly",
          "mixed_eulerian_chain",
          "quasi_stirling",
          "alt_runs_A",
          "alt_runs_B",
          "stirling_runs",
          "updown",
          "peaks_M",
          "peaks_W",
          "peaks_Wtilde",
          "bell",
          "andre",
          "flower",
          "swr_rows",
          "gen_eulerian_rows",
          "sym_T",
          "derivative_Q",
          "alt_desc_A",
          "alt_desc_B",
          "s_triangle_rows",
          "colored_q_eulerian",
          "stirling_peaks_interior",
          "stirling_peaks_left",
          "stirling_peaks_T",
          "colored_full",
          "colored_plus",
          "colored_minus",
          "kary_ascent",
          "signed_multiset"};
}

// ---------------------------------------------------------------------------
// Triangles.
// ---------------------------------------------------------------------------

namespace {

using RowRule = std::function<Rational(long n, long k, const std::vector<Rational>& prev)>;

Rational prev_at(const std::vector<Rational>& prev, long k) {
  if (k < 0 || k >= static_cast<long>(prev.size())) return Rational(0);
  return prev[static_cast<std::size_t>(k)];
}

Triangle grow_triangle(const std::string& name, const Params& params, long first,
                       std::vector<Rational> first_row, long max_k_growth, const RowRule& rule,
                       long N) {
  Triangle t;
  t.name = name;
  t.params = params;
  t.first_index = first;
  t.rows.push_back(std::move(first_row));
  long total = static_cast<long>(t.rows[0].size());
  for (long n = first + 1; n <= N; ++n) {
    const auto& prev = t.rows.back();
    long width = static_cast<long>(prev.size()) + max_k_growth;
    std::vector<Rational> row(static_cast<std::size_t>(width), Rational(0));
    for (long k = 0; k < width; ++k) row[static_cast<std::size_t>(k)] = rule(n, k, prev);
    while (!row.empty() && row.back() == 0) row.pop_back();
    total += static_cast<long>(row.size());
    if (total > size_guard()) throw size_guard_exceeded(name + ": guard exceeded");
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace

Triangle triangle(const std::string& name, const Params& params, long N) {
  if (name == "rec_A") {
    Rational a1 = param_rational(params, "a1"), a2 = param_rational(params, "a2"),
             a3 = param_rational(params, "a3"), b1 = param_rational(params, "b1"),
             b2 = param_rational(params, "b2"), b3 = param_rational(params, "b3");
    return grow_triangle(
        name, params, 0, {Rational(1)}, 1,
        [=](long n, long k, const std::vector<Rational>& prev) -> Rational {
          return (a1 * Rational(n) + a2 * Rational(k) + a3) * prev_at(prev, k) +
                 (b1 * Rational(n) + b2 * Rational(k) + b3) * prev_at(prev, k - 1);
        },
        N);
  }
  if (name == "swr") {
    Rational a1 = param_rational(params, "a1"), a2 = param_rational(params, "a2"),
             b1 = param_rational(params, "b1"), b2 = param_rational(params, "b2"),
             lam = param_rational(params, "lambda");
    return grow_triangle(
        name, params, 0, {Rational(1)}, 1,
        [=](long, long k, const std::vector<Rational>& prev) -> Rational {
          return (b1 * Rational(k) + b2) * prev_at(prev, k - 1) +
                 ((2 * lam * b1 + a1) * Rational(k) + lam * (b1 + b2) + a2) * prev_at(prev, k) +
                 lam * (a1 + lam * b1) * Rational(k + 1) * prev_at(prev, k + 1);
        },
        N);
  }
  if (name == "gen_eulerian") {
    Rational a1 = param_rational(params, "a1"), a2 = param_rational(params, "a2"),
             b1 = param_rational(params, "b1"), b2 = param_rational(params, "b2"),
             d = param_rational(params, "d"), lam = param_rational(params, "lambda");
    if (lam == 0) throw bad_params("gen_eulerian needs lambda != 0");
    return grow_triangle(
        name, params, 0, {Rational(1)}, 2,
        [=](long n, long k, const std::vector<Rational>& prev) -> Rational {
          return lam * (a1 * Rational(k) + a2) * prev_at(prev, k) +
                 ((b1 - d * a1) * Rational(n) - (b1 - 2 * d * a1) * Rational(k) + b2 -
                  d * (a1 - a2)) *
                     prev_at(prev, k - 1) +
                 d * (b1 - d * a1) / lam * Rational(n - k + 1) * prev_at(prev, k - 2);
        },
        N);
  }
  if (name == "s_triangle") {
    Rational beta = param_rational(params, "beta"), nu = param_rational(params, "nu");
    return grow_triangle(
        name, params, 0, {Rational(1)}, 1,
        [=](long n, long k, const std::vector<Rational>& prev) -> Rational {
          return (2 * nu * Rational(k) + beta) * prev_at(prev, k) +
                 2 * nu * Rational(n - 2 * k + 1) * prev_at(prev, k - 1);
        },
        N);
  }
  if (name == "alt_runs_A") {
    return grow_triangle(
        name, params, 1, {Rational(1)}, 2,
        [](long n, long k, const std::vector<Rational>& prev) -> Rational {
          return Rational(k) * prev_at(prev, k) + 2 * prev_at(prev, k - 1) +
                 Rational(n - k) * prev_at(prev, k - 2);
        },
        N);
  }
  if (name == "alt_runs_B") {
    return grow_triangle(
        name, params, 1, {Rational(0), Rational(1)}, 2,
        [](long n, long k, const std::vector<Rational>& prev) -> Rational {
          return Rational(2 * k - 1) * prev_at(prev, k) + 3 * prev_at(prev, k - 1) +
                 Rational(2 * n - 2 * k + 2) * prev_at(prev, k - 2);
        },
        N);
  }
  if (name == "peaks_r") {
    long r = param_long(params, "r");
    return grow_triangle(
        name, params, 1, {Rational(1)}, 1,
        [r](long n, long k, const std::vector<Rational>& prev) -> Rational {
          return Rational(r * k + 1) * prev_at(prev, k) +
                 Rational(r) * Rational(n - k) * prev_at(prev, k - 1);
        },
        N);
  }
  if (name == "andre") {
    return grow_triangle(
        name, params, 1, {Rational(0), Rational(1)}, 1,
        [](long n, long k, const std::vector<Rational>& prev) -> Rational {
          // d_{n,k} = k d_{n-1,k} + (n - 2k + 2) d_{n-1,k-1}
          return Rational(k) * prev_at(prev, k) + Rational(n - 2 * k + 2) * prev_at(prev, k - 1);
        },
        N);
  }
  if (name == "flower") {
    return grow_triangle(
        name, params, 0, {Rational(1)}, 1,
        [](long n, long k, const std::vector<Rational>& prev) -> Rational {
          return Rational(1 + k) * prev_at(prev, k) +
                 Rational(2 * n - 2 * k + 1) * prev_at(prev, k - 1);
        },
        N);
  }
  if (name == "peaks_W" || name == "peaks_Wtilde") {
    FamilyTable f = family(name, params, N);
    Triangle t;
    t.name = name;
    t.params = params;
    t.first_index = f.first_index;
    for (const auto& p : f.polys) {
      std::vector<Rational> row(p.coeffs());
      if (row.empty()) row.push_back(Rational(0));
      t.rows.push_back(std::move(row));
    }
    return t;
  }
  throw unknown_family("unknown triangle '" + name + "'");
}

std::vector<std::string> triangle_names() {
  return {"rec_A",      "swr",     "gen_eulerian", "s_triangle", "alt_runs_A",
          "alt_runs_B", "peaks_r", "andre",        "flower",     "peaks_W",
          "peaks_Wtilde"};
}

}  // namespace polystab
