#ifndef POLYSTAB_COMBINATORICS_HPP
#define POLYSTAB_COMBINATORICS_HPP

#include <functional>
#include <string>
#include <vector>

#include "polystab/families.hpp"
#include "polystab/poly.hpp"

namespace polystab {
namespace combinat {

// Enumerated objects are plain int sequences:
//   permutations          1..n values
//   signed permutations   +-v with |values| a permutation
//   colored permutations  value vector plus a color vector
//   words                 letters 0..k-1
//   Stirling words        letters over the multiset {1^r,...,n^r}
using Seq = std::vector<int>;

struct ColoredPerm {
  Seq perm;
  Seq colors;  // e_i in [0, r-1]
};

// --- statistics ---
long des(const Seq& pi);
long exc_r(const Seq& pi, long r);
long alt_runs_A(const Seq& pi);
long las(const Seq& pi);
long ipk(const Seq& pi);
long lpk(const Seq& pi);
long altdes_A(const Seq& pi);
// Signed-permutation statistics (entries carry signs).
long altdes_B(const Seq& pi);
long des_B(const Seq& pi);
long alt_runs_B(const Seq& pi);
long asc_word(const Seq& w);
// r-Stirling peak statistics on images of the occurrence-relabeling map.
long ipk_r(const Seq& w, long r);
long lpk_r(const Seq& w, long r);

// Total order of the colored letters: all nonzero colors sit below 0
// (larger value then higher color first), zero-colored letters above.
long colored_key(int value, int color, long r);
long des_colored(const ColoredPerm& cp, long r);

// statistic by name on an uncolored sequence object.
long statistic(const Seq& object, const std::string& name, const Params& params);

// The occurrence-relabeling map: the l-th occurrence of i goes to r*i - l + 1.
Seq phi_map(const Seq& stirling_word, long r);

// --- enumeration ---
// Visits every object of the kind; kinds: S_n, B_n, B_n_up, Z_r_wr_S_n,
// Z_r_plus, Z_r_minus, k_ary, multiset_signed, r_stirling.
void enumerate(const std::string& kind, const Params& params,
               const std::function<void(const Seq&)>& visit);
void enumerate_colored(long n, long r, const std::function<void(const ColoredPerm&)>& visit,
                       int first_color = -1);

// Expected object count (guard checks run against this before enumeration).
Integer enumeration_count(const std::string& kind, const Params& params);

long enumeration_guard();
void set_enumeration_guard(long max_objects);

// Distribution polynomial sum_objects x^{stat}.
Poly distribution(const std::string& kind, const Params& params, const std::string& stat);

// sum over colored permutations of x^{des} * prod q_i^{e_i}.
Poly colored_q_distribution(long n, long r, const std::vector<Rational>& qs);

}  // namespace combinat
}  // namespace polystab

#endif
