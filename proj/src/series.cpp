#include "polystab/series.hpp"

#include <algorithm>

#include "polystab/errors.hpp"

namespace polystab {

namespace {
const Poly kZeroPoly;
const Rational kZeroRat(0);
}  // namespace

Series::Series(long order, Poly constant) : order_(order) {
  if (order < 0) throw bad_params("series order must be nonnegative");
  c_.resize(static_cast<std::size_t>(order) + 1);
  c_[0] = std::move(constant);
}

Series Series::from_terms(std::vector<Poly> coeffs, long order) {
  Series s(order);
  coeffs.resize(static_cast<std::size_t>(order) + 1);
  s.c_ = std::move(coeffs);
  return s;
}

const Poly& Series::operator[](std::size_t k) const {
  return k < c_.size() ? c_[k] : kZeroPoly;
}

void Series::set(std::size_t k, Poly v) {
  if (k < c_.size()) c_[k] = std::move(v);
}

Series operator+(const Series& a, const Series& b) {
  long order = std::min(a.order_, b.order_);
  Series r(order);
  for (std::size_t k = 0; k <= static_cast<std::size_t>(order); ++k) r.c_[k] = a[k] + b[k];
  return r;
}

Series operator-(const Series& a, const Series& b) {
  long order = std::min(a.order_, b.order_);
  Series r(order);
  for (std::size_t k = 0; k <= static_cast<std::size_t>(order); ++k) r.c_[k] = a[k] - b[k];
  return r;
}

Series series_mul(const Series& a, const Series& b) {
  long order = std::min(a.order(), b.order());
  Series r(order);
  for (long k = 0; k <= order; ++k) {
    Poly acc;
    for (long j = 0; j <= k; ++j)
      acc += a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(k - j)];
    r.set(static_cast<std::size_t>(k), std::move(acc));
  }
  return r;
}

Series series_reciprocal(const Series& a) {
  const Poly& c0 = a[0];
  if (c0.degree() != 0)
    throw non_unit_constant_term("series_reciprocal: constant term is not a unit");
  Rational inv = Rational(1) / c0.constant_term();
  Series r(a.order());
  r.set(0, Poly(inv));
  for (long k = 1; k <= a.order(); ++k) {
    Poly acc;
    for (long j = 1; j <= k; ++j)
      acc += a[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(k - j)];
    r.set(static_cast<std::size_t>(k), acc * (-inv));
  }
  return r;
}

Series series_int_pow(const Series& a, unsigned long k) {
  Series acc(a.order(), Poly(1));
  Series base = a;
  while (k > 0) {
    if (k & 1UL) acc = series_mul(acc, base);
    if (k >>= 1UL) base = series_mul(base, base);
  }
  return acc;
}

Series series_scale(const Series& a, const Poly& factor) {
  Series r(a.order());
  for (long k = 0; k <= a.order(); ++k)
    r.set(static_cast<std::size_t>(k), a[static_cast<std::size_t>(k)] * factor);
  return r;
}

std::pair<Series, Series> trig_series(const Poly& a, long order) {
  Series cos_s(order), sin_s(order);
  Poly apow(Rational(1));  // a^k
  Rational fact(1);        // k!
  for (long k = 0; k <= order; ++k) {
    if (k > 0) {
      apow *= a;
      fact *= Rational(k);
    }
    Rational coeff = Rational(1) / fact;
    if ((k / 2) % 2 == 1) coeff = -coeff;  // signs go +, +, -, -, +, +, ...
    if (k % 2 == 0)
      cos_s.set(static_cast<std::size_t>(k), apow * coeff);
    else
      sin_s.set(static_cast<std::size_t>(k), apow * coeff);
  }
  return {cos_s, sin_s};
}

Series jcf_expand(const std::function<Poly(long)>& r, const std::function<Poly(long)>& s,
                  long order) {
  // Evaluate the fraction bottom-up from the cutoff depth; levels at or
  // beyond the cutoff only influence t-powers above the order.
  long depth = order;
  Series level(order, Poly(1));
  for (long i = depth; i >= 0; --i) {
    Series denom(order, Poly(1));
    Series lin(order);
    lin.set(0, Poly(1));
    if (order >= 1) lin.set(1, -r(i));
    denom = lin;
    if (i < depth && order >= 2) {
      Series tail = series_scale(level, -s(i + 1));
      Series shifted(order);
      for (long k = 2; k <= order; ++k)
        shifted.set(static_cast<std::size_t>(k), tail[static_cast<std::size_t>(k - 2)]);
      denom = denom + shifted;
    }
    level = series_reciprocal(denom);
  }
  return level;
}

XSeries::XSeries(long order, Rational constant) : order_(order) {
  if (order < 0) throw bad_params("series order must be nonnegative");
  c_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
  c_[0] = std::move(constant);
}

XSeries XSeries::from_coeffs(std::vector<Rational> coeffs, long order) {
  XSeries s(order);
  coeffs.resize(static_cast<std::size_t>(order) + 1, Rational(0));
  s.c_ = std::move(coeffs);
  return s;
}

XSeries XSeries::from_poly(const Poly& p, long order) {
  return from_coeffs(p.coeffs(), order);
}

const Rational& XSeries::operator[](std::size_t k) const {
  return k < c_.size() ? c_[k] : kZeroRat;
}

void XSeries::set(std::size_t k, const Rational& v) {
  if (k < c_.size()) c_[k] = v;
}

XSeries operator+(const XSeries& a, const XSeries& b) {
  long order = std::min(a.order_, b.order_);
  XSeries r(order);
  for (std::size_t k = 0; k <= static_cast<std::size_t>(order); ++k) r.c_[k] = a[k] + b[k];
  return r;
}

XSeries operator-(const XSeries& a, const XSeries& b) {
  long order = std::min(a.order_, b.order_);
  XSeries r(order);
  for (std::size_t k = 0; k <= static_cast<std::size_t>(order); ++k) r.c_[k] = a[k] - b[k];
  return r;
}

XSeries xseries_mul(const XSeries& a, const XSeries& b) {
  long order = std::min(a.order(), b.order());
  XSeries r(order);
  for (long k = 0; k <= order; ++k) {
    Rational acc(0);
    for (long j = 0; j <= k; ++j)
      acc += a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(k - j)];
    r.set(static_cast<std::size_t>(k), acc);
  }
  return r;
}

XSeries binomial_xseries(const Rational& c, const Rational& alpha, long order) {
  XSeries r(order);
  Rational term(1);
  r.set(0, term);
  for (long k = 1; k <= order; ++k) {
    term *= (alpha - Rational(k - 1)) * c / Rational(k);
    r.set(static_cast<std::size_t>(k), term);
  }
  return r;
}

XSeries xd_pow(const XSeries& f, long n) {
  XSeries r(f.order());
  for (long m = 0; m <= f.order(); ++m) {
    Rational scale = n == 0 ? Rational(1) : rational_pow(Rational(m), n);
    r.set(static_cast<std::size_t>(m), f[static_cast<std::size_t>(m)] * scale);
  }
  return r;
}

}  // namespace polystab
