#ifndef POLYSTAB_SERIES_HPP
#define POLYSTAB_SERIES_HPP

#include <functional>
#include <utility>
#include <vector>

#include "polystab/poly.hpp"

namespace polystab {

// Truncated formal power series in t with Poly coefficients. The order is
// explicit everywhere; arithmetic never reads beyond it.
class Series {
 public:
  Series(long order, Poly constant = Poly());
  static Series from_terms(std::vector<Poly> coeffs, long order);

  long order() const { return order_; }
  const Poly& operator[](std::size_t k) const;
  void set(std::size_t k, Poly v);

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);

  bool operator==(const Series& o) const { return order_ == o.order_ && c_ == o.c_; }

 private:
  long order_;
  std::vector<Poly> c_;
};

Series series_mul(const Series& a, const Series& b);
// 1 / a; the constant coefficient must be a nonzero constant polynomial.
Series series_reciprocal(const Series& a);
Series series_int_pow(const Series& a, unsigned long k);
Series series_scale(const Series& a, const Poly& factor);

// (cos(a(x) t), sin(a(x) t)) truncated to the order.
std::pair<Series, Series> trig_series(const Poly& a, long order);

// Forward expansion of the Jacobi continued fraction
// 1 / (1 - r_0 t - s_1 t^2 / (1 - r_1 t - ...)), depth = order.
Series jcf_expand(const std::function<Poly(long)>& r, const std::function<Poly(long)>& s,
                  long order);

// Truncated series in x with rational coefficients.
class XSeries {
 public:
  XSeries(long order, Rational constant = Rational(0));
  static XSeries from_coeffs(std::vector<Rational> coeffs, long order);
  static XSeries from_poly(const Poly& p, long order);

  long order() const { return order_; }
  const Rational& operator[](std::size_t k) const;
  void set(std::size_t k, const Rational& v);

  friend XSeries operator+(const XSeries& a, const XSeries& b);
  friend XSeries operator-(const XSeries& a, const XSeries& b);

  bool operator==(const XSeries& o) const { return order_ == o.order_ && c_ == o.c_; }

 private:
  long order_;
  std::vector<Rational> c_;
};

XSeries xseries_mul(const XSeries& a, const XSeries& b);

// (1 + c x)^alpha via the generalized binomial series.
XSeries binomial_xseries(const Rational& c, const Rational& alpha, long order);

// Coefficient of x^m becomes m^n times the original.
XSeries xd_pow(const XSeries& f, long n);

}  // namespace polystab

#endif
