#ifndef POLYSTAB_TESTS_TEST_UTIL_HPP
#define POLYSTAB_TESTS_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "polystab/poly.hpp"

namespace polystab::testutil {

inline Rational rand_rational(std::mt19937& rng, int num_range = 6, int max_den = 4) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, max_den);
  return make_rational(num(rng), den(rng));
}

inline Poly rand_poly(std::mt19937& rng, int max_deg = 4) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  int d = deg(rng);
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) c.push_back(rand_rational(rng));
  return Poly(std::move(c));
}

// Monic product of (x + a_i) with the given nonnegative rational roots -a_i.
inline Poly poly_with_roots(const std::vector<Rational>& negated_roots) {
  Poly p{Rational(1)};
  for (const auto& a : negated_roots) p *= Poly{a, Rational(1)};
  return p;
}

}  // namespace polystab::testutil

#endif
