#include "polystab/hurwitz.hpp"

#include <cassert>

#include "polystab/errors.hpp"
#include "polystab/realroots.hpp"

namespace polystab {

namespace {

Poly primitive_signed(const Poly& p) {
  if (p.is_zero()) return p;
  Poly r = primitive_part(p);
  if (sign(r.leading()) != sign(p.leading())) r = -r;
  return r;
}

int variations(const std::vector<int>& signs) {
  int var = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

// Cauchy index of num/den over the whole real line via the Euclidean sign
// chain: I = Var(-inf) - Var(+inf).
long cauchy_index_line(const Poly& den, const Poly& num) {
  std::vector<Poly> chain;
  chain.push_back(primitive_signed(den));
  chain.push_back(primitive_signed(num));
  while (!chain.back().is_zero()) {
    const Poly& a = chain[chain.size() - 2];
    const Poly& b = chain.back();
    if (a.degree() < b.degree()) {
      chain.push_back(-a);
      continue;
    }
    long delta = a.degree() - b.degree();
    Rational s = rational_pow(Rational(b.leading()), delta + 1);
    if (s < 0) s = -s;
    chain.push_back(primitive_signed(-divrem(a * s, b).second));
  }
  chain.pop_back();
  std::vector<int> at_pos, at_neg;
  for (const auto& q : chain) {
    int s = q.is_zero() ? 0 : sign(q.leading());
    at_pos.push_back(s);
    at_neg.push_back(q.degree() % 2 == 0 ? s : -s);
  }
  return variations(at_neg) - variations(at_pos);
}

// Real and imaginary parts of h(i*w) as polynomials in w.
std::pair<Poly, Poly> on_axis(const Poly& h) {
  std::vector<Rational> re(h.size(), Rational(0)), im(h.size(), Rational(0));
  for (std::size_t k = 0; k < h.size(); ++k) {
    switch (k % 4) {
      case 0: re[k] = h[k]; break;
      case 1: im[k] = h[k]; break;
      case 2: re[k] = -h[k]; break;
      case 3: im[k] = -h[k]; break;
    }
  }
  return {Poly(std::move(re)), Poly(std::move(im))};
}

// Strictly-right root count of h, where h has no origin or axis zeros and no
// root pair symmetric about the imaginary axis.
long right_count_asymmetric(const Poly& h) {
  long n = h.degree();
  if (n <= 0) return 0;
  auto [u, v] = on_axis(h);
  long left;
  if (n % 2 == 0)
    left = (n - cauchy_index_line(u, v)) / 2;
  else
    left = (n + cauchy_index_line(v, u)) / 2;
  return n - left;
}

}  // namespace

RhpCountReport rhp_root_count(const Poly& p) {
  if (p.is_zero()) throw zero_polynomial("rhp_root_count on the zero polynomial");
  RhpCountReport rep;
  rep.degree = p.degree();

  // (1) origin zeros.
  std::size_t k = 0;
  while (k < p.size() && p[k] == 0) ++k;
  rep.origin_multiplicity = static_cast<long>(k);
  std::vector<Rational> shifted(p.coeffs().begin() + static_cast<long>(k), p.coeffs().end());
  Poly g{std::move(shifted)};
  if (g.degree() <= 0) return rep;

  // (2) the factor carrying every root set symmetric about the axis.
  std::vector<Rational> sc(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    sc[i] = ((static_cast<long>(i) + g.degree()) % 2 == 0) ? g[i] : -g[i];
  }
  Poly sigma{std::move(sc)};
  Poly d = gcd_poly(g, sigma);

  if (d.degree() > 0) {
    // d is even since g(0) != 0; write d(x) = e(x^2).
    std::vector<Rational> ec;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (i % 2 == 1) {
        if (d[i] != 0) throw error("internal: symmetric factor is not even");
      } else {
        ec.push_back(d[i]);
      }
    }
    Poly e{std::move(ec)};
    long axis = 0, right = 0;
    for (const auto& [u, m] : squarefree_decomposition(e)) {
      Rational b = root_bound(u);
      long neg = sturm_count(u, -b, Rational(0));
      long pos = sturm_count(u, Rational(0), b);
      axis += 2 * m * neg;
      right += m * pos;
      right += m * (u.degree() - neg - pos);  // quadruples: half on each side
    }
    rep.imaginary_axis = axis;
    rep.strictly_right = right;
    // The symmetric factor splits evenly; check it against its degree.
    if (axis + 2 * right != d.degree())
      throw error("internal: symmetric-factor root accounting mismatch");
  }

  Poly h = exact_div(g, d.degree() > 0 ? d : Poly(Rational(1)));
  rep.strictly_right += right_count_asymmetric(h);
  assert(rep.left_implied() >= 0);
  return rep;
}

bool is_hurwitz_stable(const Poly& p) {
  if (p.is_zero()) return true;
  return rhp_root_count(p).strictly_right == 0;
}

bool hb_even_odd_test(const Poly& p) {
  auto [fe, fo] = even_odd_split(p);
  if (fe.is_zero() || fo.is_zero())
    throw precondition_violated("hb_even_odd_test: f_even * f_odd is identically zero");
  for (const Poly* q : {&fe, &fo}) {
    if (!is_real_rooted(*q)) return false;
    // No root > 0 permitted; strip any origin zeros before counting.
    std::size_t j = 0;
    while (j < q->size() && (*q)[j] == 0) ++j;
    std::vector<Rational> rest(q->coeffs().begin() + static_cast<long>(j), q->coeffs().end());
    Poly stripped{std::move(rest)};
    if (stripped.degree() > 0) {
      Rational b = root_bound(stripped);
      if (sturm_count(stripped, Rational(0), b) > 0) return false;
    }
  }
  // Hurwitz stability forces all coefficients of f to share one sign, so the
  // opposite-sign branch of << can never certify it; only the same-sign
  // branch (f_odd precedes f_even with equal leading signs) applies here.
  auto v = interlacing_relation(fo, fe);
  return v.g_weak_f && sign(fo.leading()) == sign(fe.leading());
}

}  // namespace polystab
