#include "polystab/series.hpp"

#include <random>

#include "doctest.h"
#include "polystab/errors.hpp"
#include "test_util.hpp"

using namespace polystab;

namespace {
Poly P(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return Poly(std::move(c));
}
}  // namespace

TEST_CASE("series arithmetic") {
  Series one_minus_t = Series::from_terms({Poly(1), Poly(-1)}, 3);
  Series geo = series_reciprocal(one_minus_t);
  for (std::size_t k = 0; k <= 3; ++k) CHECK(geo[k] == Poly(1));

  Series lin = Series::from_terms({Poly(1), P({1, 1})}, 2);
  Series sq = series_int_pow(lin, 2);
  CHECK(sq[0] == Poly(1));
  CHECK(sq[1] == P({2, 2}));
  CHECK(sq[2] == P({1, 2, 1}));

  Series a = Series::from_terms({Poly(1), Poly::x(), Poly(1)}, 4);
  Series prod = series_mul(a, series_reciprocal(a));
  CHECK(prod[0] == Poly(1));
  for (std::size_t k = 1; k <= 4; ++k) CHECK(prod[k] == Poly());

  Series bad = Series::from_terms({Poly::x(), Poly(1)}, 2);
  CHECK_THROWS_AS(series_reciprocal(bad), non_unit_constant_term);
}

TEST_CASE("series multiplication is commutative and associative") {
  std::mt19937 rng(53);
  for (int t = 0; t < 25; ++t) {
    auto rand_series = [&](long order) {
      std::vector<Poly> c;
      for (long k = 0; k <= order; ++k) c.push_back(testutil::rand_poly(rng, 2));
      return Series::from_terms(std::move(c), order);
    };
    Series a = rand_series(4), b = rand_series(4), c = rand_series(4);
    CHECK(series_mul(a, b) == series_mul(b, a));
    CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
  }
}

TEST_CASE("trig series") {
  auto [c1, s1] = trig_series(Poly(1), 3);
  CHECK(c1[0] == Poly(1));
  CHECK(c1[1] == Poly());
  CHECK(c1[2] == Poly(make_rational(-1, 2)));
  CHECK(c1[3] == Poly());
  CHECK(s1[1] == Poly(1));
  CHECK(s1[3] == Poly(make_rational(-1, 6)));

  auto [c2, s2] = trig_series(P({1, -1}), 2);
  CHECK(s2[1] == P({1, -1}));

  auto [c3, s3] = trig_series(Poly(make_rational(1, 2)), 2);
  CHECK(c3[2] == Poly(make_rational(-1, 8)));
  (void)s3;
}

TEST_CASE("jcf expansion") {
  Poly onepx{Rational(1), Rational(1)};
  Poly onepx2{Rational(1), Rational(0), Rational(1)};
  // type-B data: r_i = (2i+1)(1+x), s_i = 2 i^2 (1+x^2)
  auto r = [onepx](long i) { return Rational(2 * i + 1) * onepx; };
  auto s = [onepx2](long i) { return Rational(2 * i * i) * onepx2; };
  Series e = jcf_expand(r, s, 2);
  CHECK(e[0] == Poly(1));
  CHECK(e[1] == onepx);
  CHECK(e[2] == P({3, 2, 3}));  // r_0^2 + s_1

  // derivative-polynomial data at delta = 1: t^2 coefficient 1 + 2x^2.
  auto rq = [](long i) { return Poly::monomial(1, Rational(2 * i + 1)); };
  auto sq = [onepx2](long i) { return Rational(i * i) * onepx2; };
  Series q = jcf_expand(rq, sq, 2);
  CHECK(q[2] == P({1, 0, 2}));

  // all s = 0: geometric in r_0 t.
  auto r0 = [](long) { return Poly(2); };
  auto s0 = [](long) { return Poly(); };
  Series g = jcf_expand(r0, s0, 4);
  for (long k = 0; k <= 4; ++k)
    CHECK(g[static_cast<std::size_t>(k)] == Poly(rational_pow(Rational(2), k)));
}

TEST_CASE("jcf depth beyond the order never changes low coefficients") {
  Poly onepx{Rational(1), Rational(1)};
  auto r = [onepx](long i) { return Rational(i + 1) * onepx; };
  auto s = [](long i) { return Poly(Rational(i)); };
  Series shallow = jcf_expand(r, s, 6);
  Series deep = jcf_expand(r, s, 11);  // depth 11 covers every level shallow uses
  for (std::size_t k = 0; k <= 6; ++k) CHECK(shallow[k] == deep[k]);
}

TEST_CASE("binomial x-series") {
  XSeries geo = binomial_xseries(-1, -1, 5);
  for (std::size_t k = 0; k <= 5; ++k) CHECK(geo[k] == 1);
  XSeries root = binomial_xseries(1, make_rational(1, 2), 3);
  CHECK(root[1] == make_rational(1, 2));
  XSeries invroot = binomial_xseries(-1, make_rational(-1, 2), 3);
  CHECK(invroot[2] == make_rational(3, 8));

  std::mt19937 rng(59);
  for (int t = 0; t < 20; ++t) {
    Rational c = testutil::rand_rational(rng);
    Rational alpha = testutil::rand_rational(rng);
    XSeries prod =
        xseries_mul(binomial_xseries(c, alpha, 6), binomial_xseries(c, -alpha, 6));
    CHECK(prod[0] == 1);
    for (std::size_t k = 1; k <= 6; ++k) CHECK(prod[k] == 0);
  }
}

TEST_CASE("xD power") {
  XSeries geo = binomial_xseries(-1, -1, 5);
  XSeries same = xd_pow(geo, 0);
  CHECK(same == geo);
  XSeries once = xd_pow(geo, 1);
  for (long m = 0; m <= 5; ++m) CHECK(once[static_cast<std::size_t>(m)] == m);
  XSeries twice = xd_pow(geo, 2);
  for (long m = 0; m <= 5; ++m) CHECK(twice[static_cast<std::size_t>(m)] == m * m);
}
