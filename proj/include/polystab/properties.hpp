#ifndef POLYSTAB_PROPERTIES_HPP
#define POLYSTAB_PROPERTIES_HPP

#include <string>
#include <vector>

#include "polystab/families.hpp"
#include "polystab/identities.hpp"
#include "polystab/poly.hpp"
#include "polystab/recurrence.hpp"

namespace polystab {

// (P_{n+1})^2 - P_{n+2} P_n, optionally composed with x -> x + shift.
Poly turan(const std::vector<Poly>& seq, long n, const Rational& shift = Rational(0));

// Coefficientwise nonnegativity of -Turan_n for all n < N.
Verdict q_log_convexity(const std::vector<Poly>& seq, long N);
// f_{n+1} f_{m-1} - f_n f_m has nonnegative coefficients for 1 <= m <= n < N.
Verdict strong_q_log_convexity(const std::vector<Poly>& seq, long N);

struct GammaData {
  std::vector<Rational> gamma;
  long center = 0;  // the n of the basis x^k (1+x)^{n-2k}
  bool nonnegative() const;
};
GammaData gamma_vector(const Poly& p, long n);

struct SemiGammaData {
  int nu = 0;
  long stripped_power = 0;
  Poly g;
  bool nonnegative() const;
};
SemiGammaData semi_gamma(const Poly& p);

enum class DecompFlavor { I, R };
struct SymDecomp {
  Poly a, b;
  long n = 0;
  DecompFlavor flavor = DecompFlavor::I;
};
SymDecomp sym_decomposition(const Poly& p, long n, DecompFlavor flavor);

bool is_alternatingly_increasing(const Poly& p, long n);
bool is_unimodal(const Poly& p);

// Expand in the binomial basis C(x, k) and map C(x, k) -> x^k.
Poly epsilon_subdivision(const Poly& p);

// The four equivalent interlacing statements attached to an
// I-decomposition with nonnegative parts; passes iff they agree.
struct DecAbReport {
  bool b_ll_a = false;
  bool a_ll_p = false;
  bool b_ll_p = false;
  bool rec_ll_p = false;
  bool all_agree() const {
    return b_ll_a == a_ll_p && a_ll_p == b_ll_p && b_ll_p == rec_ll_p;
  }
  bool all_true() const { return b_ll_a && a_ll_p && b_ll_p && rec_ll_p; }
};
DecAbReport dec_ab_equivalence_check(const Poly& p, long n);

// Pure hypothesis predicates for the named criteria; the conclusion
// deciders never consult these.
// Criteria over a recurrence spec at index n: thm_FG, thm_RS_1, thm_RS_2,
// thm_HS_1, thm_HS_2, thm_sym_HS, prop_HS_linear_comb (needs rho/eta).
bool criterion_check(const std::string& criterion, const RecurrenceSpec& spec, long n,
                     const Params& extra = {});
// Criteria over plain parameter maps: prop_oper_A (a1..a3, b1..b3, n),
// swr_corollary (a1, a2, b1, b2, lambda), thm_alter_incr (root lists).
bool criterion_check_params(const std::string& criterion, const Params& params);
bool alter_incr_hypothesis(const std::vector<std::vector<Rational>>& root_lists);

// (phi - nu x) rho T_{n+1} + [phi eta x + (phi - gamma) phi rho] T_n for a
// spec with alpha = mu = psi = 0.
Poly linear_combination(const FamilyTable& table, const RecurrenceSpec& spec,
                        const Rational& rho, const Rational& eta, long n);

}  // namespace polystab

#endif
