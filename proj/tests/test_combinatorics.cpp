#include "polystab/combinatorics.hpp"

#include "doctest.h"
#include "polystab/errors.hpp"

using namespace polystab;
using namespace polystab::combinat;

namespace {
Poly P(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return Poly(std::move(c));
}
}  // namespace

TEST_CASE("enumeration sizes") {
  long count = 0;
  enumerate("S_n", {{"n", "3"}}, [&](const Seq&) { ++count; });
  CHECK(count == 6);
  count = 0;
  enumerate("B_n", {{"n", "2"}}, [&](const Seq&) { ++count; });
  CHECK(count == 8);
  count = 0;
  std::vector<Seq> words;
  enumerate("r_stirling", {{"n", "2"}, {"r", "2"}}, [&](const Seq& w) {
    ++count;
    words.push_back(w);
  });
  CHECK(count == 3);
  CHECK(std::find(words.begin(), words.end(), Seq{1, 1, 2, 2}) != words.end());
  CHECK(std::find(words.begin(), words.end(), Seq{1, 2, 2, 1}) != words.end());
  CHECK(std::find(words.begin(), words.end(), Seq{2, 2, 1, 1}) != words.end());
}

TEST_CASE("statistics on worked examples") {
  CHECK(des({1, 3, 2}) == 1);
  CHECK(exc_r({2, 1}, 1) == 1);
  CHECK(alt_runs_A({2, 1, 3}) == 2);
  CHECK(alt_runs_A({3, 1, 2, 6, 4, 8, 7, 5}) == 5);  // formal definition
  CHECK(las({2, 1, 3}) == 3);
  CHECK(ipk({2, 1, 4, 3}) == 1);
  CHECK(lpk({2, 1}) == 1);
  CHECK(altdes_A({3, 1, 2}) == 2);
  CHECK(altdes_B({2, -1}) == 2);
  CHECK(statistic({1, 3, 2}, "des", {}) == 1);
  CHECK_THROWS_AS(statistic({1}, "no_such_stat", {}), incompatible_statistic);
}

TEST_CASE("phi map") {
  CHECK(phi_map({1, 1, 1, 2, 3, 3, 3, 2, 2}, 3) == Seq{3, 2, 1, 6, 9, 8, 7, 5, 4});
  CHECK(phi_map({1, 1, 2, 2}, 2) == Seq{2, 1, 4, 3});
  CHECK(phi_map({1, 2, 3}, 1) == Seq{1, 2, 3});
  CHECK_THROWS_AS(phi_map({1, 1, 1}, 2), invalid_stirling_perm);
}

TEST_CASE("distribution totals") {
  for (long n = 1; n <= 6; ++n) {
    Poly d = distribution("S_n", {{"n", std::to_string(n)}}, "des");
    CHECK(d.eval(1) == Rational(factorial(static_cast<unsigned long>(n))));
  }
  Poly b = distribution("B_n", {{"n", "4"}}, "altdes_B");
  CHECK(b.eval(1) == Rational(factorial(4) * 16));
}

TEST_CASE("distributions match known small polynomials") {
  CHECK(distribution("S_n", {{"n", "3"}}, "des") == P({1, 4, 1}));
  CHECK(distribution("S_n", {{"n", "3"}}, "altdes_A") == P({2, 2, 2}));
  Poly zp = distribution("Z_r_plus", {{"n", "2"}, {"r", "2"}}, "des_colored");
  CHECK(zp == P({1, 3}));
}

TEST_CASE("incompatible statistic-kind pairs are rejected") {
  CHECK_THROWS_AS(distribution("S_n", {{"n", "3"}}, "asc"), incompatible_statistic);
  CHECK_THROWS_AS(distribution("k_ary", {{"n", "3"}, {"k", "2"}}, "des"),
                  incompatible_statistic);
  CHECK_THROWS_AS(distribution("no_kind", {}, "des"), unknown_kind);
}

TEST_CASE("size guard halts enumeration before it starts") {
  long saved = enumeration_guard();
  set_enumeration_guard(100);
  CHECK_THROWS_AS(distribution("S_n", {{"n", "8"}}, "des"), size_guard_exceeded);
  set_enumeration_guard(saved);
}

TEST_CASE("prefix partition yields the same distribution") {
  // Splitting S_n by the first letter must reassemble the full statistics.
  Params p{{"n", "5"}};
  Poly whole = distribution("S_n", p, "des");
  Poly sum;
  for (int first = 1; first <= 5; ++first) {
    std::vector<Rational> coeffs;
    enumerate("S_n", p, [&](const Seq& pi) {
      if (pi[0] != first) return;
      long k = des(pi);
      if (k >= static_cast<long>(coeffs.size()))
        coeffs.resize(static_cast<std::size_t>(k) + 1, Rational(0));
      coeffs[static_cast<std::size_t>(k)] += 1;
    });
    sum += Poly(coeffs);
  }
  CHECK(sum == whole);
}

TEST_CASE("colored key order is the stated total order") {
  long r = 3;
  // xi^2 3 < xi 3 < xi^2 2 < xi 2 < xi^2 1 < xi 1 < 0 < 1 < 2 < 3
  std::vector<std::pair<int, int>> ordered = {{3, 2}, {3, 1}, {2, 2}, {2, 1}, {1, 2}, {1, 1}};
  for (std::size_t i = 0; i + 1 < ordered.size(); ++i)
    CHECK(colored_key(ordered[i].first, ordered[i].second, r) <
          colored_key(ordered[i + 1].first, ordered[i + 1].second, r));
  CHECK(colored_key(1, 1, r) < 0);
  CHECK(colored_key(1, 0, r) > 0);
  CHECK(colored_key(1, 0, r) < colored_key(2, 0, r));
}

TEST_CASE("q-weighted colored distribution") {
  // At q = 1 the weights disappear.
  Poly plain = distribution("Z_r_wr_S_n", {{"n", "3"}, {"r", "2"}}, "des_colored");
  CHECK(colored_q_distribution(3, 2, {Rational(1)}) == plain);
  // Total mass at x = 1 is prod (1 + q_i) for r = 2.
  Poly w = colored_q_distribution(2, 2, {make_rational(1, 2), make_rational(1, 3)});
  CHECK(w.eval(1) == make_rational(3, 2) * make_rational(4, 3) * Rational(2));
}
