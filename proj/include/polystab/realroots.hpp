#ifndef POLYSTAB_REALROOTS_HPP
#define POLYSTAB_REALROOTS_HPP

#include <string>
#include <vector>

#include "polystab/poly.hpp"

namespace polystab {

// Location of one distinct real root: either pinned to an exact rational
// point or enclosed in an open interval (lo, hi) with rational endpoints.
struct RootLocation {
  bool is_exact = false;
  Rational point;
  Rational lo, hi;
};

struct RootEntry {
  RootLocation loc;
  int multiplicity = 1;
};

// Ordered, pairwise-disjoint isolating entries; multiplicities sum to the
// number of real roots counted with multiplicity.
struct RootIntervals {
  std::vector<RootEntry> entries;
  long total_multiplicity() const;
  std::string to_string() const;
};

// Number of distinct real roots of p in the open interval (a, b).
long sturm_count(const Poly& p, const Rational& a, const Rational& b);

// Number of distinct real roots of p on the whole line.
long sturm_count_all(const Poly& p);

// Real roots counted with multiplicity.
long real_root_count_with_multiplicity(const Poly& p);

bool is_real_rooted(const Poly& p);

RootIntervals isolate_roots(const Poly& p);

enum class InterlaceRelation {
  not_comparable,
  g_precedes_f_weak,
  g_precedes_f_strict,
  g_ll_f,
  f_ll_g,
};

std::string to_string(InterlaceRelation r);

// Truth table for the root orders of a pair (g, f). The enum keeps the most
// informative single label; the booleans carry the full outcome, with the
// convention that the zero polynomial is comparable to everything (the
// certificates flag this case through `zero_convention`).
struct InterlaceVerdict {
  InterlaceRelation relation = InterlaceRelation::not_comparable;
  bool g_weak_f = false;  // g interlaces f or g alternates left of f
  bool f_weak_g = false;
  bool strict = false;    // some weak chain holds with no equality
  bool g_ll_f = false;
  bool f_ll_g = false;
  bool zero_convention = false;
  std::string witness;
};

InterlaceVerdict interlacing_relation(const Poly& g, const Poly& f);

// Convenience: the "g << f" boolean of the verdict.
bool ll(const Poly& g, const Poly& f);

// True iff W = f'g - fg' has constant sign on the real line, decided exactly
// (every real root of W must have even multiplicity). Requires f and g
// real-rooted and not both zero.
bool wronskian_sign_test(const Poly& g, const Poly& f);

// Cauchy bound: every real root lies in (-bound, bound).
Rational root_bound(const Poly& p);

}  // namespace polystab

#endif
