#ifndef POLYSTAB_RATIONAL_HPP
#define POLYSTAB_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "polystab/errors.hpp"

namespace polystab {

// Exact arithmetic throughout; mpq_class keeps values canonical
// (gcd(num, den) = 1, den > 0).
using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Rational& r) { return sgn(r); }

// The two-argument mpq_class constructor does not reduce the fraction;
// every num/den construction must go through here.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw division_by_zero("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational rational_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  Rational b = base;
  bool invert = e < 0;
  unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rational acc(1);
  while (k > 0) {
    if (k & 1UL) acc *= b;
    b *= b;
    k >>= 1UL;
  }
  if (invert) {
    if (acc == 0) throw division_by_zero("rational_pow: 0 to a negative power");
    acc = Rational(1) / acc;
  }
  return acc;
}

inline Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

// C(n, k) for integer n >= 0.
inline Integer binomial(unsigned long n, unsigned long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

// Generalized binomial coefficient C(alpha, k) = alpha(alpha-1)...(alpha-k+1)/k!.
inline Rational binomial_rational(const Rational& alpha, unsigned long k) {
  Rational num(1);
  for (unsigned long j = 0; j < k; ++j) num *= alpha - Rational(static_cast<long>(j));
  return num / Rational(factorial(k));
}

inline std::string rational_to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Accepts "num/den" or a bare integer.
inline Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw bad_params("cannot parse rational: " + s);
  r.canonicalize();
  return r;
}

// [r]_q = 1 + q + ... + q^{r-1}
inline Rational q_integer(long r, const Rational& q) {
  Rational acc(0), p(1);
  for (long i = 0; i < r; ++i) {
    acc += p;
    p *= q;
  }
  return acc;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline long to_long(const Rational& r) {
  if (!is_integer(r)) throw bad_params("expected an integer, got " + rational_to_string(r));
  return r.get_num().get_si();
}

}  // namespace polystab

#endif
