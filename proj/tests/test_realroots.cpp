#include "polystab/realroots.hpp"

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

TEST_CASE("sturm_count") {
  CHECK(sturm_count(P({-2, 0, 1}), 0, 2) == 1);
  CHECK(sturm_count(P({1, 0, 1}), -10, 10) == 0);
  CHECK(sturm_count(P({1, -2, 1}), 0, 2) == 1);  // double root, one distinct
  CHECK_THROWS_AS(sturm_count(P({-1, 1}), 1, 2), endpoint_is_root);
  CHECK_THROWS_AS(sturm_count(Poly(), 0, 1), zero_polynomial);
}

TEST_CASE("is_real_rooted") {
  CHECK(is_real_rooted(P({1, 4, 1})));
  CHECK_FALSE(is_real_rooted(P({1, 0, 1})));
  CHECK_FALSE(is_real_rooted(P({0, 1, 1, 1})));
  CHECK(is_real_rooted(P({1, -2, 1})));
  CHECK(is_real_rooted(P({5})));
  CHECK_THROWS_AS(is_real_rooted(Poly()), zero_polynomial);
}

TEST_CASE("isolate_roots") {
  auto r1 = isolate_roots(P({-1, 0, 1}));
  REQUIRE(r1.entries.size() == 2);
  CHECK(r1.entries[0].loc.is_exact);
  CHECK(r1.entries[0].loc.point == -1);
  CHECK(r1.entries[1].loc.point == 1);
  CHECK(r1.total_multiplicity() == 2);

  auto r2 = isolate_roots(P({0, 0, 1}));
  REQUIRE(r2.entries.size() == 1);
  CHECK(r2.entries[0].loc.is_exact);
  CHECK(r2.entries[0].loc.point == 0);
  CHECK(r2.entries[0].multiplicity == 2);

  Poly p = P({1, 4, 1});
  auto r3 = isolate_roots(p);
  REQUIRE(r3.entries.size() == 2);
  CHECK(r3.total_multiplicity() == 2);
  CHECK(sturm_count(p, -4, -3) == 1);
  CHECK(sturm_count(p, -1, 0) == 1);
}

TEST_CASE("interlacing_relation matches the worked cases") {
  auto v1 = interlacing_relation(P({1, 1}), P({1, 4, 1}));
  CHECK(v1.relation == InterlaceRelation::g_ll_f);
  CHECK(v1.g_ll_f);

  auto v2 = interlacing_relation(P({0, 1}), P({0, 0, 1}));
  CHECK(v2.relation == InterlaceRelation::g_precedes_f_weak);
  CHECK(v2.g_ll_f);
  CHECK_FALSE(v2.strict);

  auto v3 = interlacing_relation(P({1, 0, 1}), P({1, 1}));
  CHECK(v3.relation == InterlaceRelation::not_comparable);
}

TEST_CASE("constants and the zero polynomial") {
  // A nonzero constant interlaces anything of degree <= 1.
  CHECK(interlacing_relation(P({2}), P({1, 1})).g_weak_f);
  CHECK(interlacing_relation(P({2}), P({3})).g_weak_f);
  CHECK_FALSE(interlacing_relation(P({2}), P({1, 4, 1})).g_weak_f);
  auto z = interlacing_relation(Poly(), P({1, 4, 1}));
  CHECK(z.zero_convention);
  CHECK(z.g_ll_f);
  CHECK(z.f_ll_g);
}

TEST_CASE("wronskian_sign_test") {
  CHECK(wronskian_sign_test(P({1, 1}), P({1, 4, 1})));
  CHECK(wronskian_sign_test(P({1, 1}), P({1, 1})));  // W identically zero
  CHECK_FALSE(wronskian_sign_test(P({-2, 1}), P({0, -1, 1})));
  CHECK_THROWS_AS(wronskian_sign_test(P({1, 0, 1}), P({1, 1})), precondition_violated);
}

TEST_CASE("interlacing and wronskian deciders agree on real-rooted pairs") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> root(-3, 3);
  std::uniform_int_distribution<int> deg(0, 4);
  auto random_rooted = [&](int d) {
    std::vector<Rational> roots;
    for (int i = 0; i < d; ++i) roots.emplace_back(root(rng));
    return testutil::poly_with_roots(roots);
  };
  for (int t = 0; t < 120; ++t) {
    int df = deg(rng);
    int dg = std::max(0, df - t % 2);
    Poly f = random_rooted(df), g = random_rooted(dg);
    auto v = interlacing_relation(g, f);
    bool weak = v.g_weak_f || v.f_weak_g;
    CHECK(weak == wronskian_sign_test(g, f));
  }
}

TEST_CASE("convex cone of << and the partial-fraction criterion") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> c(0, 5);
  // f with simple rational roots.
  Poly f = testutil::poly_with_roots({Rational(0), Rational(1), Rational(5, 2), Rational(4)});
  std::vector<Rational> roots = {Rational(0), Rational(-1), Rational(-5, 2), Rational(-4)};
  Poly fp = f.derivative();

  auto fisk_combination = [&](const std::vector<Rational>& cs) {
    Poly g;
    for (std::size_t i = 0; i < roots.size(); ++i)
      g += cs[i] * exact_div(f, Poly{-roots[i], Rational(1)});
    return g;
  };

  for (int t = 0; t < 50; ++t) {
    std::vector<Rational> c1 = {c(rng), c(rng), c(rng), c(rng)};
    std::vector<Rational> c2 = {c(rng), c(rng), c(rng), c(rng)};
    Poly g1 = fisk_combination(c1), g2 = fisk_combination(c2);
    if (!g1.is_zero()) CHECK(ll(g1, f));
    if (!g2.is_zero()) CHECK(ll(g2, f));
    Poly combo = Rational(c(rng)) * g1 + Rational(c(rng)) * g2;
    CHECK(ll(combo, f));
  }

  // g << f iff every g(r_i)/f'(r_i) is nonnegative, for simple rational roots.
  std::mt19937 rng2(31);
  for (int t = 0; t < 80; ++t) {
    Poly g = testutil::rand_poly(rng2, 3);
    if (g.is_zero()) continue;
    bool all_nonneg = true;
    for (const auto& r : roots)
      if (sign(g.eval(r)) * sign(fp.eval(r)) < 0) all_nonneg = false;
    CHECK(ll(g, f) == all_nonneg);
  }
}
