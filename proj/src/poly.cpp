#include "polystab/poly.hpp"

#include <algorithm>
#include <sstream>

#include "polystab/errors.hpp"

namespace polystab {

namespace {
const Rational kZero(0);
}

Poly::Poly(const Rational& constant) {
  if (constant != 0) c_.push_back(constant);
}

Poly::Poly(long constant) {
  if (constant != 0) c_.push_back(Rational(constant));
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }

Poly Poly::x() { return monomial(1); }

Poly Poly::monomial(std::size_t k, const Rational& coeff) {
  std::vector<Rational> c(k + 1, Rational(0));
  c[k] = coeff;
  return Poly(std::move(c));
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& Poly::operator[](std::size_t k) const {
  return k < c_.size() ? c_[k] : kZero;
}

const Rational& Poly::leading() const {
  if (c_.empty()) throw zero_polynomial("leading coefficient of the zero polynomial");
  return c_.back();
}

Poly& Poly::operator+=(const Poly& q) {
  if (c_.size() < q.c_.size()) c_.resize(q.c_.size(), Rational(0));
  for (std::size_t i = 0; i < q.c_.size(); ++i) c_[i] += q.c_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& q) {
  if (c_.size() < q.c_.size()) c_.resize(q.c_.size(), Rational(0));
  for (std::size_t i = 0; i < q.c_.size(); ++i) c_[i] -= q.c_[i];
  normalize();
  return *this;
}

Poly operator*(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return Poly();
  std::vector<Rational> r(p.c_.size() + q.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.c_.size(); ++i) {
    if (p.c_[i] == 0) continue;
    for (std::size_t j = 0; j < q.c_.size(); ++j) {
      if (q.c_[j] == 0) continue;
      r[i + j] += p.c_[i] * q.c_[j];
    }
  }
  return Poly(std::move(r));
}

Poly& Poly::operator*=(const Poly& q) {
  *this = *this * q;
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= s;
  return *this;
}

Poly& Poly::operator/=(const Rational& s) {
  if (s == 0) throw division_by_zero("polynomial / 0");
  for (auto& v : c_) v /= s;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Poly Poly::pow(unsigned long e) const {
  Poly acc(Rational(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1UL) acc *= base;
    base *= base;
    e >>= 1UL;
  }
  return acc;
}

Rational Poly::eval(const Rational& v) const {
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Poly(std::move(r));
}

Poly Poly::shifted_up(std::size_t k) const {
  if (is_zero() || k == 0) return k == 0 ? *this : Poly();
  std::vector<Rational> r(c_.size() + k, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
  return Poly(std::move(r));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << rational_to_string(c_[i]);
    if (i == 1) os << "*x";
    if (i > 1) os << "*x^" << i;
    first = false;
  }
  return os.str();
}

Poly reciprocal(const Poly& p, long n) {
  if (n < p.degree())
    throw degree_too_large("reciprocal: window " + std::to_string(n) + " below degree " +
                           std::to_string(p.degree()));
  std::vector<Rational> r(static_cast<std::size_t>(n) + 1, Rational(0));
  for (long k = 0; k <= p.degree(); ++k) r[static_cast<std::size_t>(n - k)] = p[static_cast<std::size_t>(k)];
  return Poly(std::move(r));
}

Poly reflect(const Poly& p, long n) {
  if (n < p.degree())
    throw degree_too_large("reflect: window " + std::to_string(n) + " below degree " +
                           std::to_string(p.degree()));
  Poly arg{Rational(-1), Rational(-1)};  // -1 - x
  Poly r = compose(p, arg);
  if (n % 2 != 0) r = -r;
  return r;
}

Poly moebius_numerator(const Poly& p, long n, const Rational& a, const Rational& b,
                       const Rational& c, const Rational& d) {
  if (n < p.degree())
    throw degree_too_large("moebius_numerator: window " + std::to_string(n) +
                           " below degree " + std::to_string(p.degree()));
  Poly num{b, a};  // a x + b
  Poly den{d, c};  // c x + d
  // sum_k p_k (ax+b)^k (cx+d)^{n-k}, with 0^0 = 1 where a factor degenerates.
  Poly acc;
  Poly num_pow(Rational(1));
  std::vector<Poly> den_pows(static_cast<std::size_t>(n) + 1);
  den_pows[0] = Poly(Rational(1));
  for (long j = 1; j <= n; ++j) den_pows[static_cast<std::size_t>(j)] = den_pows[static_cast<std::size_t>(j - 1)] * den;
  for (long k = 0; k <= p.degree(); ++k) {
    const Rational& pk = p[static_cast<std::size_t>(k)];
    if (pk != 0) acc += pk * num_pow * den_pows[static_cast<std::size_t>(n - k)];
    num_pow *= num;
  }
  return acc;
}

std::pair<Poly, Poly> even_odd_split(const Poly& p) {
  std::vector<Rational> even, odd;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i % 2 == 0)
      even.push_back(p[i]);
    else
      odd.push_back(p[i]);
  }
  return {Poly(std::move(even)), Poly(std::move(odd))};
}

Poly compose(const Poly& p, const Poly& q) {
  Poly acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * q + Poly(p[i]);
  return acc;
}

Poly taylor_shift(const Poly& p, const Rational& c) { return compose(p, Poly{c, Rational(1)}); }

Poly substitute_square(const Poly& p) {
  if (p.is_zero()) return p;
  std::vector<Rational> r(2 * p.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i) r[2 * i] = p[i];
  return Poly(std::move(r));
}

std::pair<Poly, Poly> divrem(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw division_by_zero("divrem by the zero polynomial");
  Poly rem = p;
  if (p.degree() < q.degree()) return {Poly(), rem};
  std::vector<Rational> quot(static_cast<std::size_t>(p.degree() - q.degree()) + 1, Rational(0));
  while (!rem.is_zero() && rem.degree() >= q.degree()) {
    long k = rem.degree() - q.degree();
    Rational f = rem.leading() / q.leading();
    quot[static_cast<std::size_t>(k)] = f;
    rem -= (q * f).shifted_up(static_cast<std::size_t>(k));
  }
  return {Poly(std::move(quot)), rem};
}

Poly exact_div(const Poly& p, const Poly& q) {
  auto [quot, rem] = divrem(p, q);
  if (!rem.is_zero())
    throw inexact_division("exact_div: nonzero remainder " + rem.to_string());
  return quot;
}

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm(1);
  for (const auto& c : p.coeffs()) {
    Integer d = c.get_den();
    Integer g;
    mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    den_lcm = den_lcm / g * d;
  }
  Integer content(0);
  for (const auto& c : p.coeffs()) {
    Integer num = c.get_num() * (den_lcm / c.get_den());
    Integer g;
    mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    content = g;
  }
  Rational scale = make_rational(den_lcm, content);
  if (scale < 0) scale = -scale;
  Poly r = p * scale;
  if (r.leading() < 0) r = -r;
  return r;
}

Poly gcd_poly(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero()) return Poly();
  if (p.is_zero()) return q / q.leading();
  if (q.is_zero()) return p / p.leading();
  // Primitive PRS over the integers keeps coefficient growth in check.
  Poly a = primitive_part(p), b = primitive_part(q);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    // Pseudo-remainder: lc(b)^(da-db+1) * a  mod  b stays integral.
    long delta = a.degree() - b.degree();
    Poly scaled = a * rational_pow(Rational(b.leading()), delta + 1);
    Poly rem = divrem(scaled, b).second;
    a = b;
    b = rem.is_zero() ? Poly() : primitive_part(rem);
  }
  return a / a.leading();
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) return p;
  if (p.degree() == 0) return Poly(Rational(1));
  Poly g = gcd_poly(p, p.derivative());
  return primitive_part(exact_div(p, g));
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  if (p.is_zero() || p.degree() == 0) return out;
  // Yun's algorithm.
  Poly a = primitive_part(p);
  Poly d = a.derivative();
  Poly g = gcd_poly(a, d);
  Poly b = exact_div(a, g);
  Poly c = exact_div(d, g);
  int mult = 1;
  while (b.degree() > 0) {
    Poly z = c - b.derivative();
    if (z.is_zero()) {
      out.emplace_back(primitive_part(b), mult);
      break;
    }
    Poly f = gcd_poly(b, z);
    if (f.degree() > 0) out.emplace_back(primitive_part(f), mult);
    b = exact_div(b, f);
    c = exact_div(z, f);
    ++mult;
  }
  return out;
}

}  // namespace polystab
