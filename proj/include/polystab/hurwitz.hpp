#ifndef POLYSTAB_HURWITZ_HPP
#define POLYSTAB_HURWITZ_HPP

#include "polystab/poly.hpp"

namespace polystab {

// Exact location counts of the roots of a real polynomial relative to the
// imaginary axis. Hurwitz stability in the open-half-plane sense only rules
// out strictly-right roots; axis and origin zeros are permitted.
struct RhpCountReport {
  long strictly_right = 0;
  long imaginary_axis = 0;  // nonzero axis roots (counted with multiplicity)
  long origin_multiplicity = 0;
  long degree = 0;
  long left_implied() const {
    return degree - strictly_right - imaginary_axis - origin_multiplicity;
  }
};

RhpCountReport rhp_root_count(const Poly& p);

// True iff p is identically zero or has no root with positive real part.
bool is_hurwitz_stable(const Poly& p);

// Hermite-Biehler route: f = x f_odd(x^2) + f_even(x^2) is Hurwitz stable
// iff f_even, f_odd are real-rooted with nonpositive roots and
// f_odd << f_even. Requires f_even * f_odd not identically zero.
bool hb_even_odd_test(const Poly& p);

}  // namespace polystab

#endif
