#include "polystab/properties.hpp"

#include <algorithm>

#include "polystab/errors.hpp"
#include "polystab/realroots.hpp"

namespace polystab {

Poly turan(const std::vector<Poly>& seq, long n, const Rational& shift) {
  if (n < 0 || n + 2 >= static_cast<long>(seq.size()))
    throw index_out_of_range("turan: need entries n, n+1, n+2");
  const Poly& p0 = seq[static_cast<std::size_t>(n)];
  const Poly& p1 = seq[static_cast<std::size_t>(n + 1)];
  const Poly& p2 = seq[static_cast<std::size_t>(n + 2)];
  Poly t = p1 * p1 - p2 * p0;
  if (shift != 0) t = taylor_shift(t, shift);
  return t;
}

namespace {
bool coeffs_nonnegative(const Poly& p) {
  for (const auto& c : p.coeffs())
    if (c < 0) return false;
  return true;
}
}  // namespace

Verdict q_log_convexity(const std::vector<Poly>& seq, long N) {
  for (long n = 0; n < N; ++n) {
    Poly neg = -turan(seq, n);
    if (!coeffs_nonnegative(neg)) return Verdict::fail(n, Poly(), neg);
  }
  return Verdict::ok();
}

Verdict strong_q_log_convexity(const std::vector<Poly>& seq, long N) {
  for (long n = 1; n < N; ++n) {
    for (long m = 1; m <= n; ++m) {
      if (n + 1 >= static_cast<long>(seq.size()))
        throw index_out_of_range("strong_q_log_convexity: table too short");
      Poly diff = seq[static_cast<std::size_t>(n + 1)] * seq[static_cast<std::size_t>(m - 1)] -
                  seq[static_cast<std::size_t>(n)] * seq[static_cast<std::size_t>(m)];
      if (!coeffs_nonnegative(diff)) return Verdict::fail(n, Poly(), diff);
    }
  }
  return Verdict::ok();
}

bool GammaData::nonnegative() const {
  for (const auto& g : gamma)
    if (g < 0) return false;
  return true;
}

GammaData gamma_vector(const Poly& p, long n) {
  if (p.degree() > n) throw degree_too_large("gamma_vector: degree above the center");
  if (reciprocal(p, n) != p) throw not_symmetric("gamma_vector: input not symmetric");
  GammaData out;
  out.center = n;
  Poly rem = p;
  Poly one_plus_x{Rational(1), Rational(1)};
  for (long k = 0; 2 * k <= n; ++k) {
    Rational gk = rem[static_cast<std::size_t>(n - k)];
    out.gamma.push_back(gk);
    if (gk != 0)
      rem -= gk * (Poly::monomial(static_cast<std::size_t>(k)) *
                   one_plus_x.pow(static_cast<unsigned long>(n - 2 * k)));
  }
  if (!rem.is_zero()) throw error("internal: gamma peel left a remainder");
  return out;
}

bool SemiGammaData::nonnegative() const {
  for (const auto& c : g.coeffs())
    if (c < 0) return false;
  return true;
}

SemiGammaData semi_gamma(const Poly& p) {
  if (p.is_zero()) throw zero_polynomial("semi_gamma of the zero polynomial");
  SemiGammaData out;
  std::size_t k = 0;
  while (k < p.size() && p[k] == 0) ++k;
  out.stripped_power = static_cast<long>(k);
  std::vector<Rational> core_coeffs(p.coeffs().begin() + static_cast<long>(k),
                                    p.coeffs().end());
  Poly core{std::move(core_coeffs)};
  long d = core.degree();
  if (reciprocal(core, d) != core)
    throw not_symmetric_after_strip("semi_gamma: not symmetric after stripping x^" +
                                    std::to_string(out.stripped_power));
  out.nu = static_cast<int>(d % 2);
  Poly q = core;
  if (out.nu == 1) q = exact_div(core, Poly{Rational(1), Rational(1)});
  long half_n = q.degree() / 2;
  // Peel from the top: x^k (1+x^2)^{n-k} has top term x^{2n-k}.
  Poly one_plus_x2{Rational(1), Rational(0), Rational(1)};
  std::vector<Rational> gs;
  Poly rem = q;
  for (long j = 0; j <= half_n; ++j) {
    Rational gj = rem[static_cast<std::size_t>(2 * half_n - j)];
    gs.push_back(gj);
    if (gj != 0)
      rem -= gj * (Poly::monomial(static_cast<std::size_t>(j)) *
                   one_plus_x2.pow(static_cast<unsigned long>(half_n - j)));
  }
  if (!rem.is_zero()) throw error("internal: semi-gamma peel left a remainder");
  out.g = Poly(std::move(gs));
  return out;
}

SymDecomp sym_decomposition(const Poly& p, long n, DecompFlavor flavor) {
  if (p.degree() > n) throw degree_too_large("sym_decomposition: degree above n");
  SymDecomp out;
  out.n = n;
  out.flavor = flavor;
  if (flavor == DecompFlavor::I) {
    // Forced linear recursion: a_k = a_{n-k}, b_k = b_{n-1-k}, p = a + x b.
    std::vector<Rational> a(static_cast<std::size_t>(n) + 1, Rational(0));
    std::vector<Rational> b(n > 0 ? static_cast<std::size_t>(n) : 0, Rational(0));
    for (long k = 0; 2 * k <= n; ++k) {
      a[static_cast<std::size_t>(k)] =
          p[static_cast<std::size_t>(k)] - (k > 0 ? b[static_cast<std::size_t>(k - 1)] : Rational(0));
      a[static_cast<std::size_t>(n - k)] = a[static_cast<std::size_t>(k)];
      if (n - k - 1 >= k) {
        b[static_cast<std::size_t>(n - k - 1)] =
            p[static_cast<std::size_t>(n - k)] - a[static_cast<std::size_t>(n - k)];
        b[static_cast<std::size_t>(k)] = b[static_cast<std::size_t>(n - k - 1)];
      }
    }
    out.a = Poly(std::move(a));
    out.b = Poly(std::move(b));
    if (out.a + Poly::x() * out.b != p) throw error("internal: I-decomposition mismatch");
    return out;
  }
  // R-flavor through the f-polynomial transform of the I-decomposition of
  // the h-polynomial image.
  Poly h = moebius_numerator(p, n, 1, 0, -1, 1);  // (1-x)^n p(x/(1-x))
  SymDecomp base = sym_decomposition(h, n, DecompFlavor::I);
  out.a = moebius_numerator(base.a, n, 1, 0, 1, 1);
  out.b = n > 0 ? moebius_numerator(base.b, n - 1, 1, 0, 1, 1) : Poly();
  if (out.a + Poly::x() * out.b != p) throw error("internal: R-decomposition mismatch");
  if (reflect(out.a, n) != out.a || (n > 0 && reflect(out.b, n - 1) != out.b))
    throw error("internal: R-decomposition parts not reflection-symmetric");
  return out;
}

bool is_alternatingly_increasing(const Poly& p, long n) {
  if (p.degree() > n) throw degree_too_large("is_alternatingly_increasing: degree above n");
  // 0 <= p_0 <= p_n <= p_1 <= p_{n-1} <= ... <= p_{floor((n+1)/2)}
  std::vector<Rational> chain;
  chain.emplace_back(0);
  long lo = 0, hi = n;
  while (lo <= hi) {
    chain.push_back(p[static_cast<std::size_t>(lo)]);
    if (hi != lo) chain.push_back(p[static_cast<std::size_t>(hi)]);
    ++lo;
    --hi;
  }
  // chain order is 0, p_0, p_n, p_1, p_{n-1}, ...
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (chain[i] > chain[i + 1]) return false;
  return true;
}

bool is_unimodal(const Poly& p) {
  long d = p.degree();
  bool rising = true;
  for (long i = 0; i < d; ++i) {
    const Rational& a = p[static_cast<std::size_t>(i)];
    const Rational& b = p[static_cast<std::size_t>(i + 1)];
    if (rising) {
      if (a > b) rising = false;
    } else if (a < b) {
      return false;
    }
  }
  return true;
}

Poly epsilon_subdivision(const Poly& p) {
  // Newton's forward differences give the coefficients in the C(x, k) basis.
  long d = p.degree();
  if (d < 0) return Poly();
  std::vector<Rational> diffs;
  for (long j = 0; j <= d; ++j) diffs.push_back(p.eval(Rational(j)));
  std::vector<Rational> out(static_cast<std::size_t>(d) + 1);
  for (long k = 0; k <= d; ++k) {
    out[static_cast<std::size_t>(k)] = diffs[0];
    for (std::size_t j = 0; j + 1 < diffs.size(); ++j) diffs[j] = diffs[j + 1] - diffs[j];
    diffs.pop_back();
  }
  return Poly(std::move(out));
}

DecAbReport dec_ab_equivalence_check(const Poly& p, long n) {
  SymDecomp dec = sym_decomposition(p, n, DecompFlavor::I);
  for (const Poly* q : {&dec.a, &dec.b})
    for (const auto& c : q->coeffs())
      if (c < 0)
        throw precondition_violated("dec_ab_equivalence_check: decomposition part has a "
                                    "negative coefficient");
  DecAbReport rep;
  rep.b_ll_a = ll(dec.b, dec.a);
  rep.a_ll_p = ll(dec.a, p);
  rep.b_ll_p = ll(dec.b, p);
  rep.rec_ll_p = ll(reciprocal(p, n), p);
  return rep;
}

namespace {

int poly_deg(const Poly& p) { return p.degree(); }

bool leading_positive(const Poly& p) { return !p.is_zero() && p.leading() > 0; }

}  // namespace

bool criterion_check(const std::string& criterion, const RecurrenceSpec& spec, long n,
                     const Params& extra) {
  Rational alpha = spec.alpha(n), beta = spec.beta(n), gamma = spec.gamma(n);
  Rational mu = spec.mu(n), nu = spec.nu(n), phi = spec.phi(n), psi = spec.psi(n);
  long mn = spec.degree_law ? spec.degree_law(n) : 0;
  Poly F = spec.factor_poly(n);
  Poly G{Rational(mn) * psi, gamma + Rational(mn) * phi, beta + Rational(mn) * nu,
         alpha + Rational(mn) * mu};

  if (criterion == "thm_FG") return ll(F, G);
  if (criterion == "thm_RS_1") {
    if (!(leading_positive(F) && leading_positive(G))) return false;
    long gap = poly_deg(G) - poly_deg(F);
    if (gap < 0 || gap > 1) return false;
    if (poly_deg(F) > 1) return false;
    return beta * gamma * phi - gamma * gamma * nu - beta * beta * psi >= 0;
  }
  if (criterion == "thm_RS_2") {
    if (!(leading_positive(F) && leading_positive(G))) return false;
    if (poly_deg(F) != 2 || poly_deg(G) != 2) return false;
    if (psi != 0) return false;
    return Rational(mn) * (beta + Rational(mn) * nu) * (beta * phi - gamma * nu) -
               alpha * (gamma + Rational(mn) * phi) * (gamma + Rational(mn) * phi) >=
           0;
  }
  if (criterion == "thm_HS_1" || criterion == "thm_HS_2") {
    if (nu != 0 || psi != 0) return false;
    if (beta < 0 || gamma < 0 || phi < 0) return false;
    if (criterion == "thm_HS_1") return mn == n && alpha == -Rational(n) * mu && alpha >= 0;
    return mn != n && alpha >= -Rational(mn) * mu && -Rational(mn) * mu >= 0;
  }
  if (criterion == "thm_sym_HS") {
    return mu + nu <= 0 && 2 * beta + Rational(mn) * (mu + nu) >= 0;
  }
  if (criterion == "prop_HS_linear_comb") {
    Rational rho = param_rational(extra, "rho");
    Rational eta = param_rational(extra, "eta");
    if (phi < 0 || rho < 0) return false;
    return (beta + Rational(mn) * nu) * nu <= 0 &&
           (beta * phi - gamma * nu) * rho + phi * eta >= 0;
  }
  throw unknown_criterion("unknown criterion '" + criterion + "'");
}

bool criterion_check_params(const std::string& criterion, const Params& params) {
  if (criterion == "prop_oper_A") {
    Rational a1 = param_rational(params, "a1"), a2 = param_rational(params, "a2"),
             a3 = param_rational(params, "a3"), b1 = param_rational(params, "b1"),
             b2 = param_rational(params, "b2"), b3 = param_rational(params, "b3");
    long n = param_long(params, "n");
    Rational U = b1 * a2 - a1 * b2;
    Rational V = (b1 + b2 + b3) * a2 - (a1 + a3) * b2;
    return V + Rational(n) * U >= 0;
  }
  if (criterion == "swr_corollary") {
    Rational a1 = param_rational(params, "a1"), a2 = param_rational(params, "a2"),
             b1 = param_rational(params, "b1"), b2 = param_rational(params, "b2"),
             lam = param_rational(params, "lambda");
    if (a1 < 0 || a2 < 0 || b1 < 0 || b2 < 0 || lam < 0) return false;
    return a1 * (b1 + b2) >= a2 * b1;
  }
  throw unknown_criterion("unknown criterion '" + criterion + "'");
}

bool alter_incr_hypothesis(const std::vector<std::vector<Rational>>& root_lists) {
  if (root_lists.empty()) throw missing_params("alter_incr_hypothesis: no root lists");
  std::size_t n = root_lists.front().size();
  for (const auto& list : root_lists)
    if (list.size() != n) throw bad_root_list("alter_incr_hypothesis: unequal lengths");
  for (const auto& k : root_lists)
    for (const auto& l : root_lists)
      for (std::size_t i = 0; i < n; ++i) {
        Rational sum = k[i] + l[n - 1 - i];
        if (sum < 0 || sum > 1) return false;
      }
  return true;
}

Poly linear_combination(const FamilyTable& table, const RecurrenceSpec& spec,
                        const Rational& rho, const Rational& eta, long n) {
  if (spec.alpha(n) != 0 || spec.mu(n) != 0 || spec.psi(n) != 0)
    throw precondition_violated("linear_combination: spec must have alpha = mu = psi = 0");
  Rational nu = spec.nu(n), phi = spec.phi(n), gamma = spec.gamma(n);
  Poly lead{phi * rho, -nu * rho};  // (phi - nu x) rho
  Poly trail{(phi - gamma) * phi * rho, phi * eta};
  return lead * table.at(n + 1) + trail * table.at(n);
}

}  // namespace polystab
