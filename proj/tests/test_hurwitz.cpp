#include "polystab/hurwitz.hpp"

#include <random>

#include "doctest.h"
#include "polystab/errors.hpp"
#include "polystab/realroots.hpp"
#include "test_util.hpp"

using namespace polystab;

namespace {
Poly P(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return Poly(std::move(c));
}

// Quadratic-formula oracle for degree <= 2.
long right_count_closed_form(const Poly& p) {
  if (p.degree() <= 0) return 0;
  if (p.degree() == 1) {
    Rational root = -p[0] / p[1];
    return root > 0 ? 1 : 0;
  }
  Rational a = p[2], b = p[1], c = p[0];
  Rational disc = b * b - 4 * a * c;
  if (disc >= 0) {
    // Real roots r1, r2 with r1r2 = c/a, r1 + r2 = -b/a.
    Rational prod = c / a, sum = -b / a;
    if (disc == 0) return sum > 0 ? 2 : 0;
    if (prod < 0) return 1;                    // one positive, one negative
    if (prod == 0) return sum > 0 ? 1 : 0;     // one root at the origin
    return sum > 0 ? 2 : 0;                    // same-sign pair
  }
  Rational re2 = -b / a;  // twice the real part
  if (re2 > 0) return 2;
  return 0;
}
}  // namespace

TEST_CASE("rhp_root_count on the worked cases") {
  auto r1 = rhp_root_count(P({2, -2, 1}));
  CHECK(r1.strictly_right == 2);
  CHECK(r1.imaginary_axis == 0);
  CHECK(r1.origin_multiplicity == 0);

  auto r2 = rhp_root_count(P({0, 1, 1, 1}));
  CHECK(r2.strictly_right == 0);
  CHECK(r2.imaginary_axis == 0);
  CHECK(r2.origin_multiplicity == 1);

  auto r3 = rhp_root_count(P({-2, 1, 1}));
  CHECK(r3.strictly_right == 1);
  CHECK(r3.imaginary_axis == 0);
  CHECK(r3.origin_multiplicity == 0);

  auto r4 = rhp_root_count(P({1, 0, 1}));
  CHECK(r4.strictly_right == 0);
  CHECK(r4.imaginary_axis == 2);

  CHECK_THROWS_AS(rhp_root_count(Poly()), zero_polynomial);
}

TEST_CASE("is_hurwitz_stable") {
  CHECK(is_hurwitz_stable(P({0, 1, 1, 1})));
  CHECK(is_hurwitz_stable(P({1, 0, 1})));
  CHECK(is_hurwitz_stable(P({3, 2, 3})));
  CHECK(is_hurwitz_stable(Poly()));
  CHECK_FALSE(is_hurwitz_stable(P({-1, 1})));
  CHECK_FALSE(is_hurwitz_stable(P({2, -2, 1})));
}

TEST_CASE("hb_even_odd_test") {
  CHECK(hb_even_odd_test(P({0, 1, 1})));
  CHECK(hb_even_odd_test(P({3, 2, 3})));
  CHECK_FALSE(hb_even_odd_test(P({2, -2, 1})));
  CHECK_THROWS_AS(hb_even_odd_test(P({1, 0, 1})), precondition_violated);
}

TEST_CASE("right-count is additive over products") {
  std::mt19937 rng(37);
  for (int t = 0; t < 60; ++t) {
    Poly p = testutil::rand_poly(rng), q = testutil::rand_poly(rng);
    if (p.is_zero() || q.is_zero()) continue;
    auto rp = rhp_root_count(p), rq = rhp_root_count(q), rpq = rhp_root_count(p * q);
    CHECK(rpq.strictly_right == rp.strictly_right + rq.strictly_right);
    CHECK(rpq.imaginary_axis == rp.imaginary_axis + rq.imaginary_axis);
    CHECK(rpq.origin_multiplicity == rp.origin_multiplicity + rq.origin_multiplicity);
  }
}

TEST_CASE("stable with positive leading coefficient has nonnegative coefficients") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> small(0, 4);
  for (int t = 0; t < 40; ++t) {
    // Product of left-half-plane factors (x + a), (x^2 + bx + c), a,b,c >= 0.
    Poly p{Rational(1)};
    for (int j = 0; j < 3; ++j) {
      if (t % 2 == 0)
        p *= Poly{Rational(small(rng)), Rational(1)};
      else
        p *= Poly{Rational(small(rng)), Rational(small(rng)), Rational(1)};
    }
    REQUIRE(is_hurwitz_stable(p));
    for (const auto& coeff : p.coeffs()) CHECK(coeff >= 0);
  }
}

TEST_CASE("degree <= 2 verdicts match the quadratic formula") {
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> v(-3, 3);
  for (int t = 0; t < 400; ++t) {
    Poly p{Rational(v(rng)), Rational(v(rng)), Rational(v(rng))};
    if (p.is_zero()) continue;
    long want = right_count_closed_form(p);
    CHECK(rhp_root_count(p).strictly_right == want);
  }
}

TEST_CASE("hb even/odd route agrees with the root count") {
  std::mt19937 rng(47);
  for (int t = 0; t < 150; ++t) {
    Poly p = testutil::rand_poly(rng, 6);
    if (p.is_zero()) continue;
    auto [fe, fo] = even_odd_split(p);
    if (fe.is_zero() || fo.is_zero()) continue;
    CHECK(hb_even_odd_test(p) == is_hurwitz_stable(p));
  }
}
