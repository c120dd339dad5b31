#ifndef POLYSTAB_FAMILIES_HPP
#define POLYSTAB_FAMILIES_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "polystab/poly.hpp"
#include "polystab/recurrence.hpp"

namespace polystab {

using Params = std::map<std::string, std::string>;

struct FamilyTable {
  std::string name;
  Params params;
  long first_index = 0;
  std::vector<Poly> polys;

  long last_index() const { return first_index + static_cast<long>(polys.size()) - 1; }
  bool has(long n) const { return n >= first_index && n <= last_index(); }
  const Poly& at(long n) const;
};

struct Triangle {
  std::string name;
  Params params;
  long first_index = 0;
  std::vector<std::vector<Rational>> rows;

  const std::vector<Rational>& row(long n) const;
  Poly row_poly(long n) const;
};

// Total-coefficient cap for generated tables (predicted before generation).
long size_guard();
void set_size_guard(long max_total_coefficients);

// Construct the named family table for indices up to N (from the family's
// natural first index). Parameters arrive as strings: rationals as "a/b",
// lists separated by ':' (e.g. q=1:1/2, s=2:1:2, seed=1:0:3).
FamilyTable family(const std::string& name, const Params& params, long N);

Triangle triangle(const std::string& name, const Params& params, long N);

std::vector<std::string> family_names();
std::vector<std::string> triangle_names();

// h with sum_m i(m) x^m = h(x) / (1-x)^d for a counting function i of
// degree at most n <= d-1; the tail coefficients x^d..x^{2d} of
// (1-x)^d * sum are checked to vanish.
Poly h_from_counts(const std::function<Rational(long)>& i, long n, long d);

// h-polynomial of sum_k c_k h_{n,k} where h_{n,k} collects the series
// sum_m prod_i (m + r_{k_i}) x^m over (1-x)^{n+1}.
struct WeightedRootList {
  Rational weight;
  std::vector<Rational> roots;
};
Poly carlitz_h(const std::vector<WeightedRootList>& lists, long n);

// --- parameter helpers shared with the CLI ---
Rational param_rational(const Params& p, const std::string& key);
Rational param_rational_or(const Params& p, const std::string& key, const Rational& dflt);
long param_long(const Params& p, const std::string& key);
long param_long_or(const Params& p, const std::string& key, long dflt);
std::vector<Rational> param_list(const Params& p, const std::string& key);

// The spec objects backing several families; exposed for tests and identities.
RecurrenceSpec eulerian_spec();
RecurrenceSpec stirling_runs_spec();
RecurrenceSpec sym_T_spec(long delta, const Rational& beta, const Rational& nu,
                          const Rational& mu);
RecurrenceSpec swr_spec(const Rational& a1, const Rational& a2, const Rational& b1,
                        const Rational& b2, const Rational& lambda);
RecurrenceSpec gen_eulerian_spec(const Rational& a1, const Rational& a2, const Rational& b1,
                                 const Rational& b2, const Rational& d,
                                 const Rational& lambda);
RecurrenceSpec flower_spec();
RecurrenceSpec bell_spec();

}  // namespace polystab

#endif
