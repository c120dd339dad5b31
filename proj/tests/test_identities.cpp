#include "polystab/identities.hpp"

#include "doctest.h"
#include "polystab/errors.hpp"

using namespace polystab;

namespace {
Poly P(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return Poly(std::move(c));
}
}  // namespace

TEST_CASE("EGF cross-multiplication") {
  CHECK(verify_egf_crossmul("alt_desc_B", {}, 0).pass);
  CHECK(verify_egf_crossmul("alt_desc_B", {}, 1).pass);
  CHECK(verify_egf_crossmul("alt_desc_A", {}, 6).pass);
  CHECK(verify_egf_crossmul("derivative_Q", {{"delta", "1"}}, 2).pass);
  CHECK(verify_egf_crossmul("derivative_Q", {{"delta", "3"}}, 8).pass);
  Params bad{{"delta", "2"}, {"beta", "1"}, {"nu", "2/3"}};
  CHECK_THROWS_AS(verify_egf_crossmul("sym_T", bad, 3), non_integer_exponent);
}

TEST_CASE("Jacobi continued fractions") {
  CHECK(verify_jcf("alt_desc_B", {}, 2).pass);
  CHECK(verify_jcf("alt_desc_A", {}, 2).pass);
  CHECK(verify_jcf("s_triangle_rows", {{"beta", "1"}, {"nu", "1/2"}}, 3).pass);
  CHECK(verify_jcf("derivative_Q", {{"delta", "1"}}, 4).pass);
}

TEST_CASE("perturbed jcf reports the smallest failing power") {
  FamilyTable b = family("alt_desc_B", {}, 5);
  std::vector<Poly> terms;
  for (long n = 0; n <= 5; ++n) terms.push_back(b.at(n));
  Poly onepx{Rational(1), Rational(1)};
  Poly onepx2{Rational(1), Rational(0), Rational(1)};
  auto r = [onepx](long i) -> Poly { return Rational(2 * i + 1) * onepx; };
  auto good_s = [onepx2](long i) -> Poly { return Rational(2 * i * i) * onepx2; };
  auto bad_s = [onepx2](long i) -> Poly {
    Poly v = Rational(2 * i * i) * onepx2;
    if (i == 1) v += Poly(1);  // deliberate perturbation of s_1
    return v;
  };
  CHECK(verify_jcf_custom(terms, r, good_s, 5).pass);
  Verdict v = verify_jcf_custom(terms, r, bad_s, 5);
  CHECK_FALSE(v.pass);
  REQUIRE(v.first_failure.has_value());
  CHECK(v.first_failure->index == 2);  // s_1 first enters at t^2
}

TEST_CASE("xD identities") {
  Verdict e = verify_xd_identity("eulerian", 3);
  CHECK(e.pass);
  Verdict r = verify_xd_identity("stirling_runs", 2);
  CHECK(r.pass);
  // the worked low-order values
  FamilyTable runs = family("stirling_runs", {}, 2);
  CHECK(runs.at(1) == P({0, 1}));
  CHECK(runs.at(2) == P({0, 1, 1, 1}));
}

TEST_CASE("convolution of the symmetric families") {
  CHECK(verify_convolution(1, 1, 1).pass);
  CHECK(verify_convolution(1, 1, 0).pass);
  CHECK(verify_convolution(1, 2, 4).pass);
  // spot check: 2 A^_2 = 2 B^_0 B^_1
  FamilyTable a = family("alt_desc_A", {}, 2);
  FamilyTable b = family("alt_desc_B", {}, 1);
  CHECK(Rational(2) * a.at(2) == Rational(2) * (b.at(0) * b.at(1)));
}

TEST_CASE("counting identities") {
  CHECK(verify_counting_identity("colored_plus", {{"r", "2"}, {"n", "3"}}, 5).pass);
  CHECK(verify_counting_identity("colored_full", {{"r", "3"}, {"n", "4"}}, 6).pass);
  CHECK(verify_counting_identity("colored_minus", {{"r", "2"}, {"n", "3"}}, 6).pass);
  CHECK(verify_counting_identity("kary_ascent", {{"k", "3"}, {"n", "4"}}, 6).pass);
  CHECK(verify_counting_identity("signed_multiset", {{"s", "2:1"}}, 6).pass);
  CHECK(verify_counting_identity("colored_q_eulerian",
                                 {{"r", "2"}, {"n", "3"}, {"q", "1:1/2:2"}}, 6)
            .pass);
  // m = 0 always reduces to i(0) = h(0).
  FamilyTable plus = family("colored_plus", {{"r", "2"}}, 3);
  CHECK(plus.at(3).constant_term() == 1);
}

TEST_CASE("gamma-basis reconstructions") {
  CHECK(verify_gamma_basis("alt_desc_A", 3).pass);
  CHECK(verify_gamma_basis("alt_desc_B", 2).pass);
  CHECK(verify_gamma_basis("alt_desc_A", 1).pass);
  CHECK(verify_gamma_basis("alt_desc_B", 1).pass);
}
