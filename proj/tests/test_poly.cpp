#include "polystab/poly.hpp"

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

TEST_CASE("multiplication") {
  CHECK(P({1, 1}) * P({1, -1}) == P({1, 0, -1}));
  CHECK(Poly() * P({1, 4, 1}) == Poly());
  CHECK(P({1, 1}) * P({1, 1}) == P({1, 2, 1}));
  CHECK((Poly() * Poly()).degree() == -1);
}

TEST_CASE("derivative") {
  CHECK(P({0, 0, 1}).derivative() == P({0, 2}));
  CHECK(P({7}).derivative() == Poly());
  CHECK(P({0, 1, 1, 1}).derivative() == P({1, 2, 3}));
}

TEST_CASE("reciprocal") {
  CHECK(reciprocal(P({1, 2}), 2) == P({0, 2, 1}));
  CHECK(reciprocal(P({1, 4, 1}), 2) == P({1, 4, 1}));
  CHECK(reciprocal(P({2}), 1) == P({0, 2}));
  CHECK_THROWS_AS(reciprocal(P({1, 1, 1}), 1), degree_too_large);
}

TEST_CASE("reflect") {
  CHECK(reflect(P({0, 1}), 1) == P({1, 1}));
  CHECK(reflect(P({1, 2, 1}), 2) == P({0, 0, 1}));
  Poly p = P({1, 3});
  CHECK(reflect(reflect(p, 2), 2) == p);
}

TEST_CASE("even_odd_split") {
  auto [e1, o1] = even_odd_split(P({0, 1, 1}));
  CHECK(e1 == P({0, 1}));
  CHECK(o1 == P({1}));
  auto [e2, o2] = even_odd_split(P({3, 2, 3}));
  CHECK(e2 == P({3, 3}));
  CHECK(o2 == P({2}));
  auto [e3, o3] = even_odd_split(P({1}));
  CHECK(e3 == P({1}));
  CHECK(o3 == Poly());
}

TEST_CASE("gcd and squarefree part") {
  CHECK(gcd_poly(P({-1, 0, 1}), P({1, -2, 1})) == P({-1, 1}));
  CHECK(squarefree_part(P({0, 0, 1})) == P({0, 1}));
  Poly p = P({2, 4});
  Poly g = gcd_poly(p, Poly());
  CHECK(g == P({1, 2}) / Rational(2));  // monic multiple of p
  CHECK(g.leading() == 1);
}

TEST_CASE("exact division") {
  CHECK(exact_div(P({0, 1, 1, 1}), P({0, 1})) == P({1, 1, 1}));
  CHECK(exact_div(P({1, 2, 1}), P({1, 1})) == P({1, 1}));
  CHECK_THROWS_AS(exact_div(P({1, 1}), P({0, 1})), inexact_division);
  CHECK_THROWS_AS(exact_div(P({1, 1}), Poly()), division_by_zero);
}

TEST_CASE("moebius numerator") {
  // (1+x) * (1 + x/(1+x)) = 1 + 2x
  CHECK(moebius_numerator(P({1, 1}), 1, 1, 0, 1, 1) == P({1, 2}));
  // f-transform then h-transform is the identity on degree <= n.
  Poly p = P({1, 3, 1});
  Poly f = moebius_numerator(p, 2, 1, 0, 1, 1);
  Poly back = moebius_numerator(f, 2, 1, 0, -1, 1);
  CHECK(back == p);
  Poly sq = moebius_numerator(P({1}), 2, 1, 1, 2, 3);
  CHECK(sq == P({9, 12, 4}));  // (2x+3)^2
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(42);
  for (int t = 0; t < 60; ++t) {
    Poly a = testutil::rand_poly(rng), b = testutil::rand_poly(rng),
         c = testutil::rand_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("reciprocal is an involution when p(0) != 0") {
  std::mt19937 rng(7);
  for (int t = 0; t < 40; ++t) {
    Poly p = testutil::rand_poly(rng);
    if (p.is_zero() || p.constant_term() == 0) continue;
    long n = p.degree();
    CHECK(reciprocal(reciprocal(p, n), n) == p);
  }
}

TEST_CASE("reflect is an involution on degree <= n") {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    Poly p = testutil::rand_poly(rng);
    long n = p.degree() + (t % 3);  // window at or above the degree
    if (p.is_zero()) n = t % 3;
    CHECK(reflect(reflect(p, n), n) == p);
  }
}

TEST_CASE("even/odd reassembly") {
  std::mt19937 rng(13);
  for (int t = 0; t < 40; ++t) {
    Poly p = testutil::rand_poly(rng, 7);
    auto [e, o] = even_odd_split(p);
    CHECK(substitute_square(e) + Poly::x() * substitute_square(o) == p);
  }
}

TEST_CASE("moebius f-then-h roundtrip on random polynomials") {
  std::mt19937 rng(17);
  for (int t = 0; t < 40; ++t) {
    Poly p = testutil::rand_poly(rng);
    if (p.is_zero()) continue;
    long n = p.degree() + (t % 2);
    Poly f = moebius_numerator(p, n, 1, 0, 1, 1);
    CHECK(moebius_numerator(f, n, 1, 0, -1, 1) == p);
  }
}

TEST_CASE("squarefree decomposition reassembles") {
  Poly p = P({0, 0, 1}) * P({1, 1}) * P({1, 1}) * P({2, 1});
  auto dec = squarefree_decomposition(p);
  Poly prod{Rational(1)};
  for (const auto& [f, m] : dec) prod *= f.pow(static_cast<unsigned long>(m));
  CHECK(primitive_part(prod) == primitive_part(p));
  long maxmult = 0;
  for (const auto& [f, m] : dec) maxmult = std::max<long>(maxmult, m);
  CHECK(maxmult == 2);
}
