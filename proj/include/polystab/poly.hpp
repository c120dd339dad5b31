#ifndef POLYSTAB_POLY_HPP
#define POLYSTAB_POLY_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "polystab/rational.hpp"

namespace polystab {

// Dense univariate polynomial over Rational. Trailing zero coefficients are
// trimmed on construction, so degree() is always exact; the zero polynomial
// has degree -1, which compares below every natural number.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& constant);  // NOLINT: implicit by design
  Poly(long constant);             // NOLINT
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly x();
  static Poly monomial(std::size_t k, const Rational& coeff = Rational(1));

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }

  // Coefficient of x^k; zero beyond the degree.
  const Rational& operator[](std::size_t k) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  const Rational& leading() const;
  Rational constant_term() const { return c_.empty() ? Rational(0) : c_[0]; }

  Poly& operator+=(const Poly& q);
  Poly& operator-=(const Poly& q);
  Poly& operator*=(const Poly& q);
  Poly& operator*=(const Rational& s);
  Poly& operator/=(const Rational& s);
  Poly operator-() const;

  friend Poly operator+(Poly p, const Poly& q) { return p += q; }
  friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
  friend Poly operator*(const Poly& p, const Poly& q);
  friend Poly operator*(Poly p, const Rational& s) { return p *= s; }
  friend Poly operator*(const Rational& s, Poly p) { return p *= s; }
  friend Poly operator/(Poly p, const Rational& s) { return p /= s; }

  bool operator==(const Poly& q) const { return c_ == q.c_; }
  bool operator!=(const Poly& q) const { return c_ != q.c_; }

  Poly pow(unsigned long e) const;
  Rational eval(const Rational& v) const;
  Poly derivative() const;

  // Multiply by x^k.
  Poly shifted_up(std::size_t k) const;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

// --- transforms the families and properties modules lean on ---

// x^n p(1/x): coefficient reversal within a degree-n window.
Poly reciprocal(const Poly& p, long n);
// (-1)^n p(-1-x).
Poly reflect(const Poly& p, long n);
// (cx+d)^n p((ax+b)/(cx+d)), expanded exactly. Every substitution the
// library performs (x -> x/(1+-x), x -> (x-1)/(x+1), ...) routes through
// this single primitive.
Poly moebius_numerator(const Poly& p, long n, const Rational& a, const Rational& b,
                       const Rational& c, const Rational& d);
// f(x) = fe(x^2) + x*fo(x^2); returns (fe, fo).
std::pair<Poly, Poly> even_odd_split(const Poly& p);
// p(q(x)).
Poly compose(const Poly& p, const Poly& q);
// p(x + c).
Poly taylor_shift(const Poly& p, const Rational& c);
// p(x^2).
Poly substitute_square(const Poly& p);

// --- exact divisibility and gcd ---

// Quotient and remainder with deg rem < deg q.
std::pair<Poly, Poly> divrem(const Poly& p, const Poly& q);
// Quotient when the remainder vanishes; throws inexact_division otherwise.
Poly exact_div(const Poly& p, const Poly& q);
// Monic gcd; gcd(p, 0) is the monic multiple of p.
Poly gcd_poly(const Poly& p, const Poly& q);
// p / gcd(p, p'), normalized primitive with positive leading coefficient.
Poly squarefree_part(const Poly& p);
// Yun decomposition: pairwise-coprime primitive factors with multiplicities;
// the product of factor^mult reproduces p up to a constant.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

// Integer-primitive image of p (coefficients scaled by a positive rational so
// that they are coprime integers with positive leading coefficient).
Poly primitive_part(const Poly& p);

}  // namespace polystab

#endif
