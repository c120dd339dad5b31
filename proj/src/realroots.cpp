#include "polystab/realroots.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "polystab/errors.hpp"

namespace polystab {

namespace {

// Content normalization that keeps the sign of every value of the
// polynomial (positive scaling only); required inside Sturm chains.
Poly primitive_signed(const Poly& p) {
  if (p.is_zero()) return p;
  Poly r = primitive_part(p);
  if (sign(r.leading()) != sign(p.leading())) r = -r;
  return r;
}

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(primitive_signed(p));
  Poly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(primitive_signed(d));
  while (true) {
    const Poly& a = chain[chain.size() - 2];
    const Poly& b = chain.back();
    // Positive-scale pseudo-remainder, so all signs agree with rem(a, b).
    long delta = a.degree() - b.degree();
    Rational s = rational_pow(Rational(b.leading()), delta + 1);
    if (s < 0) s = -s;
    Poly rem = divrem(a * s, b).second;
    if (rem.is_zero()) break;
    chain.push_back(primitive_signed(-rem));
  }
  return chain;
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

int var_at(const std::vector<Poly>& chain, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(sign(q.eval(x)));
  return variations(signs);
}

int var_at_infinity(const std::vector<Poly>& chain, int dir) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) {
    int s = q.is_zero() ? 0 : sign(q.leading());
    if (dir < 0 && q.degree() % 2 != 0) s = -s;
    signs.push_back(s);
  }
  return variations(signs);
}

long count_open(const std::vector<Poly>& chain, const Rational& a, const Rational& b) {
  return var_at(chain, a) - var_at(chain, b);
}

// One distinct real root of the squarefree factor `u`.
struct IsoRoot {
  RootLocation loc;
};

Rational upper(const RootLocation& l) { return l.is_exact ? l.point : l.hi; }
Rational lower(const RootLocation& l) { return l.is_exact ? l.point : l.lo; }

// Halve an isolating interval; exact points are left alone. The enclosed
// root is simple, so the sign of u flips across it.
void refine_step(const Poly& u, RootLocation& loc) {
  if (loc.is_exact) return;
  Rational mid = (loc.lo + loc.hi) / 2;
  int sm = sign(u.eval(mid));
  if (sm == 0) {
    loc.is_exact = true;
    loc.point = mid;
    return;
  }
  if (sign(u.eval(loc.lo)) * sm < 0)
    loc.hi = mid;
  else
    loc.lo = mid;
}

bool disjoint(const RootLocation& a, const RootLocation& b) {
  if (a.is_exact && b.is_exact) return a.point != b.point;
  return upper(a) <= lower(b) || upper(b) <= lower(a);
}

// Roots of coprime squarefree factors are distinct, so refinement separates
// any two of them in finitely many steps.
void separate(const Poly& ua, RootLocation& a, const Poly& ub, RootLocation& b) {
  while (!disjoint(a, b)) {
    if (!a.is_exact && (b.is_exact || (a.hi - a.lo) >= (b.hi - b.lo)))
      refine_step(ua, a);
    else
      refine_step(ub, b);
  }
}

bool location_less(const RootLocation& a, const RootLocation& b) {
  if (a.is_exact && b.is_exact) return a.point < b.point;
  return upper(a) <= lower(b);
}

Integer floor_rational(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

// The rational with the smallest denominator strictly inside (lo, hi),
// by the Stern-Brocot / continued-fraction walk.
Rational simplest_between(const Rational& lo, const Rational& hi) {
  Integer n = floor_rational(lo);
  Rational candidate(n + 1);
  if (lo < candidate && candidate < hi) return candidate;
  Rational flo = lo - Rational(n), fhi = hi - Rational(n);  // within [0, 1)
  if (flo == 0) {
    // (n, n + fhi): pick n + 1/m for the smallest integer m with 1/m < fhi.
    Integer m = floor_rational(Rational(1) / fhi) + 1;
    return Rational(n) + make_rational(1, m);
  }
  return Rational(n) + Rational(1) / simplest_between(Rational(1) / fhi, Rational(1) / flo);
}

// Try to pin an isolating interval to an exact rational root: alternate
// simplest-rational probes with bisection. Gives up quickly so irrational
// roots stay as intervals.
void detect_exact_root(const Poly& u, RootLocation& loc) {
  for (int round = 0; round < 4 && !loc.is_exact; ++round) {
    Rational s = simplest_between(loc.lo, loc.hi);
    if (sign(u.eval(s)) == 0) {
      loc.is_exact = true;
      loc.point = s;
      return;
    }
    for (int k = 0; k < 5 && !loc.is_exact; ++k) refine_step(u, loc);
  }
}

// Isolate the real roots of a squarefree polynomial, ascending.
std::vector<IsoRoot> isolate_squarefree(const Poly& u) {
  std::vector<IsoRoot> out;
  if (u.degree() <= 0) return out;
  auto chain = sturm_chain(u);
  Rational bound = root_bound(u);

  struct Span {
    Rational lo, hi;
    int vlo, vhi;
  };
  std::vector<Span> work;
  work.push_back({-bound, bound, var_at(chain, -bound), var_at(chain, bound)});
  while (!work.empty()) {
    Span s = work.back();
    work.pop_back();
    int cnt = s.vlo - s.vhi;
    if (cnt <= 0) continue;
    if (cnt == 1) {
      RootLocation loc;
      loc.lo = s.lo;
      loc.hi = s.hi;
      detect_exact_root(u, loc);
      out.push_back({loc});
      continue;
    }
    Rational mid = (s.lo + s.hi) / 2;
    if (sign(u.eval(mid)) == 0) {
      RootLocation loc;
      loc.is_exact = true;
      loc.point = mid;
      out.push_back({loc});
      // Shrink an exclusion window around the exact root, then recurse on
      // the two outer pieces.
      Rational eps = (s.hi - s.lo) / 4;
      while (true) {
        Rational l = mid - eps, r = mid + eps;
        if (sign(u.eval(l)) != 0 && sign(u.eval(r)) != 0 &&
            count_open(chain, l, r) == 1) {
          work.push_back({s.lo, l, s.vlo, var_at(chain, l)});
          work.push_back({r, s.hi, var_at(chain, r), s.vhi});
          break;
        }
        eps /= 2;
      }
    } else {
      int vm = var_at(chain, mid);
      work.push_back({s.lo, mid, s.vlo, vm});
      work.push_back({mid, s.hi, vm, s.vhi});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const IsoRoot& a, const IsoRoot& b) { return lower(a.loc) < lower(b.loc); });
  return out;
}

// Pairwise-coprime squarefree factors carrying multiplicities in f and g.
struct BasisFactor {
  Poly u;
  int mf = 0;
  int mg = 0;
};

void basis_add(std::vector<BasisFactor>& basis, Poly u, int mf, int mg) {
  for (std::size_t i = 0; i < basis.size() && u.degree() > 0; ++i) {
    Poly d = gcd_poly(u, basis[i].u);
    if (d.degree() <= 0) continue;
    Poly rest = primitive_part(exact_div(basis[i].u, d));
    BasisFactor shared{primitive_part(d), basis[i].mf + mf, basis[i].mg + mg};
    if (rest.degree() > 0) {
      basis[i].u = rest;
      basis.push_back(shared);
    } else {
      basis[i].mf = shared.mf;
      basis[i].mg = shared.mg;
    }
    u = primitive_part(exact_div(u, d));
  }
  if (u.degree() > 0) basis.push_back({primitive_part(u), mf, mg});
}

struct OrderedRoot {
  RootLocation loc;
  std::size_t factor;
  int mf = 0;
  int mg = 0;
};

// All distinct roots of f and g in strictly increasing order, tagged with
// multiplicities in each polynomial. Shared roots appear once.
std::vector<OrderedRoot> merged_roots(const Poly& f, const Poly& g,
                                      std::vector<BasisFactor>& basis) {
  for (const auto& [fac, m] : squarefree_decomposition(f)) basis_add(basis, fac, m, 0);
  for (const auto& [fac, m] : squarefree_decomposition(g)) basis_add(basis, fac, 0, m);
  std::vector<OrderedRoot> roots;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (const auto& iso : isolate_squarefree(basis[i].u))
      roots.push_back({iso.loc, i, basis[i].mf, basis[i].mg});
  }
  // Refine across factors until the global order is strict.
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (roots[i].factor != roots[j].factor)
        separate(basis[roots[i].factor].u, roots[i].loc, basis[roots[j].factor].u,
                 roots[j].loc);
  std::sort(roots.begin(), roots.end(), [](const OrderedRoot& a, const OrderedRoot& b) {
    return location_less(a.loc, b.loc);
  });
  return roots;
}

std::string location_to_string(const RootLocation& l) {
  if (l.is_exact) return rational_to_string(l.point);
  return "(" + rational_to_string(l.lo) + ", " + rational_to_string(l.hi) + ")";
}

// Chain conditions on descending root-position lists (with multiplicity).
struct ChainResult {
  bool holds = false;
  bool strict = false;
};

// g interlaces f: deg f = deg g + 1, r_{k+1} <= s_k <= r_k.
ChainResult interlace_chain(const std::vector<long>& rdesc, const std::vector<long>& sdesc) {
  ChainResult res;
  if (rdesc.size() != sdesc.size() + 1) return res;
  bool strict = true;
  for (std::size_t k = 0; k < sdesc.size(); ++k) {
    if (sdesc[k] > rdesc[k] || rdesc[k + 1] > sdesc[k]) return res;
    if (sdesc[k] == rdesc[k] || rdesc[k + 1] == sdesc[k]) strict = false;
  }
  res.holds = true;
  res.strict = strict;
  return res;
}

// g alternates left of f: equal degrees, s_k <= r_k interleaved.
ChainResult altleft_chain(const std::vector<long>& rdesc, const std::vector<long>& sdesc) {
  ChainResult res;
  if (rdesc.size() != sdesc.size()) return res;
  bool strict = true;
  for (std::size_t k = 0; k < rdesc.size(); ++k) {
    if (sdesc[k] > rdesc[k]) return res;
    if (sdesc[k] == rdesc[k]) strict = false;
    if (k + 1 < rdesc.size()) {
      if (rdesc[k + 1] > sdesc[k]) return res;
      if (rdesc[k + 1] == sdesc[k]) strict = false;
    }
  }
  res.holds = true;
  res.strict = strict;
  return res;
}

ChainResult weak_order(const std::vector<long>& rdesc, const std::vector<long>& sdesc) {
  ChainResult inter = interlace_chain(rdesc, sdesc);
  if (inter.holds) return inter;
  return altleft_chain(rdesc, sdesc);
}

}  // namespace

Rational root_bound(const Poly& p) {
  if (p.is_zero()) throw zero_polynomial("root_bound of the zero polynomial");
  Rational maxratio(0);
  Rational lead = p.leading();
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = p[static_cast<std::size_t>(i)] / lead;
    if (r < 0) r = -r;
    if (r > maxratio) maxratio = r;
  }
  Rational b = maxratio + 1;
  // Round up to an integer so endpoints stay small.
  Integer up = b.get_num() / b.get_den() + 1;
  return Rational(up);
}

long sturm_count(const Poly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw zero_polynomial("sturm_count on the zero polynomial");
  if (!(a < b)) throw bad_params("sturm_count: need a < b");
  if (p.eval(a) == 0 || p.eval(b) == 0)
    throw endpoint_is_root("sturm_count: endpoint is a root");
  auto chain = sturm_chain(p);
  return count_open(chain, a, b);
}

long sturm_count_all(const Poly& p) {
  if (p.is_zero()) throw zero_polynomial("sturm_count_all on the zero polynomial");
  if (p.degree() == 0) return 0;
  auto chain = sturm_chain(p);
  return var_at_infinity(chain, -1) - var_at_infinity(chain, +1);
}

long real_root_count_with_multiplicity(const Poly& p) {
  if (p.is_zero()) throw zero_polynomial("root count on the zero polynomial");
  long total = 0;
  for (const auto& [u, m] : squarefree_decomposition(p)) total += m * sturm_count_all(u);
  return total;
}

bool is_real_rooted(const Poly& p) {
  if (p.is_zero()) throw zero_polynomial("is_real_rooted on the zero polynomial");
  return real_root_count_with_multiplicity(p) == p.degree();
}

long RootIntervals::total_multiplicity() const {
  long t = 0;
  for (const auto& e : entries) t += e.multiplicity;
  return t;
}

std::string RootIntervals::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ", ";
    os << location_to_string(entries[i].loc) << " x" << entries[i].multiplicity;
  }
  os << "]";
  return os.str();
}

RootIntervals isolate_roots(const Poly& p) {
  if (p.is_zero()) throw zero_polynomial("isolate_roots on the zero polynomial");
  RootIntervals out;
  auto factors = squarefree_decomposition(p);
  std::vector<std::pair<RootLocation, int>> roots;
  std::vector<Poly> owner;
  for (const auto& [u, m] : factors) {
    for (const auto& iso : isolate_squarefree(u)) {
      roots.emplace_back(iso.loc, m);
      owner.push_back(u);
    }
  }
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (owner[i] != owner[j]) separate(owner[i], roots[i].first, owner[j], roots[j].first);
  std::vector<std::size_t> idx(roots.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return location_less(roots[a].first, roots[b].first);
  });
  for (std::size_t i : idx) out.entries.push_back({roots[i].first, roots[i].second});
  return out;
}

std::string to_string(InterlaceRelation r) {
  switch (r) {
    case InterlaceRelation::not_comparable: return "not_comparable";
    case InterlaceRelation::g_precedes_f_weak: return "g_precedes_f_weak";
    case InterlaceRelation::g_precedes_f_strict: return "g_precedes_f_strict";
    case InterlaceRelation::g_ll_f: return "g_ll_f";
    case InterlaceRelation::f_ll_g: return "f_ll_g";
  }
  return "?";
}

InterlaceVerdict interlacing_relation(const Poly& g, const Poly& f) {
  InterlaceVerdict v;
  if (g.is_zero() || f.is_zero()) {
    // The paper leaves the orders undefined against the zero polynomial; we
    // treat zero as comparable to everything and flag the convention.
    v.zero_convention = true;
    v.g_weak_f = v.f_weak_g = v.g_ll_f = v.f_ll_g = true;
    v.relation = InterlaceRelation::g_precedes_f_weak;
    v.witness = "zero polynomial convention";
    return v;
  }
  if (!is_real_rooted(g) || !is_real_rooted(f)) {
    v.relation = InterlaceRelation::not_comparable;
    v.witness = "input not real-rooted";
    return v;
  }
  std::vector<BasisFactor> basis;
  auto roots = merged_roots(f, g, basis);

  std::vector<long> rdesc, sdesc;
  std::ostringstream wit;
  for (std::size_t i = roots.size(); i-- > 0;) {
    for (int k = 0; k < roots[i].mf; ++k) rdesc.push_back(static_cast<long>(i));
    for (int k = 0; k < roots[i].mg; ++k) sdesc.push_back(static_cast<long>(i));
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i) wit << ", ";
    wit << location_to_string(roots[i].loc) << " f^" << roots[i].mf << " g^" << roots[i].mg;
  }
  v.witness = wit.str();

  ChainResult gf = weak_order(rdesc, sdesc);  // g before f
  ChainResult fg = weak_order(sdesc, rdesc);
  v.g_weak_f = gf.holds;
  v.f_weak_g = fg.holds;
  v.strict = (gf.holds && gf.strict) || (fg.holds && fg.strict);
  if (!gf.holds && !fg.holds) {
    v.relation = InterlaceRelation::not_comparable;
    return v;
  }
  bool same_sign = sign(g.leading()) == sign(f.leading());
  v.g_ll_f = (gf.holds && same_sign) || (fg.holds && !same_sign);
  v.f_ll_g = (fg.holds && same_sign) || (gf.holds && !same_sign);

  if (v.strict && v.g_ll_f)
    v.relation = InterlaceRelation::g_ll_f;
  else if (v.strict && v.f_ll_g)
    v.relation = InterlaceRelation::f_ll_g;
  else if (gf.holds && gf.strict)
    v.relation = InterlaceRelation::g_precedes_f_strict;
  else if (gf.holds)
    v.relation = InterlaceRelation::g_precedes_f_weak;
  else if (v.f_ll_g)
    v.relation = InterlaceRelation::f_ll_g;
  else
    v.relation = InterlaceRelation::g_ll_f;
  return v;
}

bool ll(const Poly& g, const Poly& f) { return interlacing_relation(g, f).g_ll_f; }

bool wronskian_sign_test(const Poly& g, const Poly& f) {
  if (g.is_zero() && f.is_zero())
    throw precondition_violated("wronskian_sign_test: both inputs zero");
  if (!g.is_zero() && !is_real_rooted(g))
    throw precondition_violated("wronskian_sign_test: g not real-rooted");
  if (!f.is_zero() && !is_real_rooted(f))
    throw precondition_violated("wronskian_sign_test: f not real-rooted");
  Poly w = f.derivative() * g - f * g.derivative();
  if (w.is_zero()) return true;
  for (const auto& [u, m] : squarefree_decomposition(w)) {
    if (m % 2 == 1 && sturm_count_all(u) > 0) return false;
  }
  return true;
}

}  // namespace polystab
