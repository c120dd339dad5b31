#ifndef POLYSTAB_IDENTITIES_HPP
#define POLYSTAB_IDENTITIES_HPP

#include <functional>
#include <optional>
#include <string>

#include "polystab/families.hpp"
#include "polystab/poly.hpp"

namespace polystab {

struct FirstFailure {
  long index = 0;
  Poly expected;
  Poly got;
};

struct Verdict {
  bool pass = true;
  std::optional<FirstFailure> first_failure;

  static Verdict ok() { return {}; }
  static Verdict fail(long index, Poly expected, Poly got) {
    Verdict v;
    v.pass = false;
    v.first_failure = FirstFailure{index, std::move(expected), std::move(got)};
    return v;
  }
};

// Cross-multiplied EGF check: sum_n T_{n+delta-1} t^n/n! times the
// trigonometric denominator to an integer power equals the stated constant.
// Families: alt_desc_A, alt_desc_B, derivative_Q (delta), sym_T
// (delta, beta, nu with beta/nu a positive integer).
Verdict verify_egf_crossmul(const std::string& family_name, const Params& params, long order);

// Jacobi continued fraction: family OGF coefficients against jcf_expand.
// Families: alt_desc_A, alt_desc_B, derivative_Q, s_triangle_rows, sym_T.
Verdict verify_jcf(const std::string& family_name, const Params& params, long order);

// As above with explicit r/s maps (used to exercise failure reporting).
Verdict verify_jcf_custom(const std::vector<Poly>& ogf_terms,
                          const std::function<Poly(long)>& r,
                          const std::function<Poly(long)>& s, long order);

// (xD)^n identities for the Eulerian and Stirling-runs families; both sides
// are cleared to plain x-series. order <= 0 picks 2*n_max + 5.
Verdict verify_xd_identity(const std::string& which, long n_max, long order = 0);

// Convolution of the symmetric families across delta parameters.
Verdict verify_convolution(long delta1, long delta2, long n_max);

// Counting-series identities: h/(1-x)^power re-expanded against the direct
// count for m <= m_max. Families: colored_full, colored_plus, colored_minus,
// kary_ascent, signed_multiset, colored_q_eulerian (params carry n).
Verdict verify_counting_identity(const std::string& family_name, const Params& params,
                                 long m_max);

// Gamma-basis expansions of the alternating descent polynomials from the
// companion triangles.
Verdict verify_gamma_basis(const std::string& which, long n_max);

}  // namespace polystab

#endif
