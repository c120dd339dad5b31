#ifndef POLYSTAB_RECURRENCE_HPP
#define POLYSTAB_RECURRENCE_HPP

#include <functional>
#include <vector>

#include "polystab/poly.hpp"

namespace polystab {

using CoeffMap = std::function<Rational(long)>;
using DegreeLaw = std::function<long(long)>;

inline CoeffMap constant_coeff(const Rational& v) {
  return [v](long) { return v; };
}

// The seven coefficient sequences of the master recurrence
//   T_{n+1} = (alpha x^2 + beta x + gamma) T_n
//           + (mu x^3 + nu x^2 + phi x + psi) T_n'
// plus the seed polynomial, its index, and the expected degree law m_n.
struct RecurrenceSpec {
  CoeffMap alpha = constant_coeff(0);
  CoeffMap beta = constant_coeff(0);
  CoeffMap gamma = constant_coeff(0);
  CoeffMap mu = constant_coeff(0);
  CoeffMap nu = constant_coeff(0);
  CoeffMap phi = constant_coeff(0);
  CoeffMap psi = constant_coeff(0);
  Poly seed;
  long seed_index = 0;
  DegreeLaw degree_law;

  // One step: T_{n+1} from T_n using the coefficient values at index n.
  Poly step(const Poly& t, long n) const;
  // Multiplier pair (F_n, operator polynomial) at index n.
  Poly factor_poly(long n) const;
  Poly operator_poly(long n) const;
};

// T_{seed_index}, ..., T_N; the declared degree law is checked at every
// index and a violation reports the offending n.
std::vector<Poly> generate_T(const RecurrenceSpec& spec, long N);

}  // namespace polystab

#endif
