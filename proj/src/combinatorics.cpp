#include "polystab/combinatorics.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "polystab/errors.hpp"

namespace polystab {
namespace combinat {

namespace {
std::atomic<long> g_enum_guard{10000000};
}

long enumeration_guard() { return g_enum_guard.load(); }
void set_enumeration_guard(long max_objects) { g_enum_guard.store(max_objects); }

// ---------------------------------------------------------------------------
// Statistics. Each follows the defining text literally.
// ---------------------------------------------------------------------------

long des(const Seq& pi) {
  long d = 0;
  for (std::size_t i = 0; i + 1 < pi.size(); ++i)
    if (pi[i] > pi[i + 1]) ++d;
  return d;
}

long exc_r(const Seq& pi, long r) {
  long c = 0;
  for (std::size_t i = 0; i < pi.size(); ++i)
    if (pi[i] >= static_cast<long>(i) + 1 + r) ++c;
  return c;
}

namespace {
long direction_changes(const Seq& seq) {
  long c = 0;
  for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
    bool peak = seq[i - 1] < seq[i] && seq[i] > seq[i + 1];
    bool valley = seq[i - 1] > seq[i] && seq[i] < seq[i + 1];
    if (peak || valley) ++c;
  }
  return c;
}
}  // namespace

// Alternating runs of pi in S_n: one more than the number of direction
// changes. The paper's triangle starts from R(1, 0) = 1, so a singleton
// carries the value 0.
long alt_runs_A(const Seq& pi) {
  if (pi.size() <= 1) return 0;
  return 1 + direction_changes(pi);
}

// Longest subsequence matching pi_{i1} > pi_{i2} < pi_{i3} > ...
long las(const Seq& pi) {
  std::size_t n = pi.size();
  std::vector<long> odd(n, 1), even(n, 0);  // length parity of the prefix
  long best = n == 0 ? 0 : 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (pi[j] > pi[i] && odd[j] + 1 > even[i]) even[i] = odd[j] + 1;
      if (pi[j] < pi[i] && even[j] > 0 && even[j] + 1 > odd[i]) odd[i] = even[j] + 1;
    }
    best = std::max({best, odd[i], even[i]});
  }
  return best;
}

long ipk(const Seq& pi) {
  long c = 0;
  for (std::size_t i = 1; i + 1 < pi.size(); ++i)
    if (pi[i - 1] < pi[i] && pi[i] > pi[i + 1]) ++c;
  return c;
}

long lpk(const Seq& pi) {
  long c = 0;
  for (std::size_t i = 0; i + 1 < pi.size(); ++i) {
    int prev = i == 0 ? 0 : pi[i - 1];
    if (prev < pi[i] && pi[i] > pi[i + 1]) ++c;
  }
  return c;
}

namespace {
// Alternating descents: ascent at an even position, descent at an odd one.
// Position j compares pi(j) and pi(j+1); start = 0 prepends pi(0) = 0.
long alternating_descents(const Seq& pi, long start) {
  long c = 0;
  long n = static_cast<long>(pi.size());
  for (long j = start; j <= n - 1; ++j) {
    int left = j == 0 ? 0 : pi[static_cast<std::size_t>(j - 1)];
    int right = pi[static_cast<std::size_t>(j)];
    if (j % 2 == 0 ? left < right : left > right) ++c;
  }
  return c;
}
}  // namespace

long altdes_A(const Seq& pi) { return alternating_descents(pi, 1); }

long altdes_B(const Seq& pi) { return alternating_descents(pi, 0); }

long des_B(const Seq& pi) {
  long d = pi.empty() ? 0 : (0 > pi[0] ? 1 : 0);
  return d + des(pi);
}

long alt_runs_B(const Seq& pi) {
  Seq with_zero;
  with_zero.reserve(pi.size() + 1);
  with_zero.push_back(0);
  with_zero.insert(with_zero.end(), pi.begin(), pi.end());
  return 1 + direction_changes(with_zero);
}

long asc_word(const Seq& w) {
  long c = w.empty() ? 0 : (0 < w[0] ? 1 : 0);
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1]) ++c;
  return c;
}

namespace {
bool descending_run_after(const Seq& w, std::size_t i, long r) {
  // w_i > w_{i+1} > ... > w_{i+r-1} (indices 1-based in the definition).
  for (long j = 0; j + 1 < r; ++j) {
    if (i + static_cast<std::size_t>(j) + 1 >= w.size()) return false;
    if (!(w[i + static_cast<std::size_t>(j)] > w[i + static_cast<std::size_t>(j) + 1]))
      return false;
  }
  return true;
}
}  // namespace

long ipk_r(const Seq& w, long r) {
  long n = static_cast<long>(w.size()) / r;
  long c = 0;
  for (long i = 2; i <= r * n - r + 1; ++i) {
    std::size_t idx = static_cast<std::size_t>(i - 1);
    if (w[idx - 1] < w[idx] && descending_run_after(w, idx, r)) ++c;
  }
  return c;
}

long lpk_r(const Seq& w, long r) {
  long n = static_cast<long>(w.size()) / r;
  long c = 0;
  for (long i = 1; i <= r * n - r + 1; ++i) {
    std::size_t idx = static_cast<std::size_t>(i - 1);
    int prev = idx == 0 ? 0 : w[idx - 1];
    if (prev < w[idx] && descending_run_after(w, idx, r)) ++c;
  }
  return c;
}

long colored_key(int value, int color, long r) {
  if (color == 0) return value;
  return -((static_cast<long>(value) - 1) * (r - 1) + color);
}

long des_colored(const ColoredPerm& cp, long r) {
  long d = 0;
  long prev = 0;  // pi_0 = 0 sits between the colored and zero-colored letters
  for (std::size_t i = 0; i < cp.perm.size(); ++i) {
    long key = colored_key(cp.perm[i], cp.colors[i], r);
    if (prev > key) ++d;
    prev = key;
  }
  return d;
}

Seq phi_map(const Seq& stirling_word, long r) {
  if (stirling_word.size() % static_cast<std::size_t>(r) != 0)
    throw invalid_stirling_perm("phi_map: word length is not a multiple of r");
  int n = static_cast<int>(stirling_word.size() / static_cast<std::size_t>(r));
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  Seq out;
  out.reserve(stirling_word.size());
  for (int v : stirling_word) {
    if (v < 1 || v > n) throw invalid_stirling_perm("phi_map: letter out of range");
    int l = ++seen[static_cast<std::size_t>(v)];
    if (l > r) throw invalid_stirling_perm("phi_map: letter appears more than r times");
    out.push_back(static_cast<int>(r) * v - l + 1);
  }
  return out;
}

long statistic(const Seq& object, const std::string& name, const Params& params) {
  if (name == "des") return des(object);
  if (name == "exc_r") return exc_r(object, param_long(params, "r"));
  if (name == "alt_runs") return alt_runs_A(object);
  if (name == "las") return las(object);
  if (name == "ipk") return ipk(object);
  if (name == "lpk") return lpk(object);
  if (name == "altdes_A") return altdes_A(object);
  if (name == "altdes_B") return altdes_B(object);
  if (name == "des_B") return des_B(object);
  if (name == "alt_runs_B") return alt_runs_B(object);
  if (name == "asc") return asc_word(object);
  if (name == "ipk_r") return ipk_r(object, param_long(params, "r"));
  if (name == "lpk_r") return lpk_r(object, param_long(params, "r"));
  throw incompatible_statistic("unknown statistic '" + name + "'");
}

// ---------------------------------------------------------------------------
// Enumeration.
// ---------------------------------------------------------------------------

namespace {

Integer count_multiset_perms(const std::vector<long>& parts) {
  long s = std::accumulate(parts.begin(), parts.end(), 0L);
  Integer c = factorial(static_cast<unsigned long>(s));
  for (long p : parts) c /= factorial(static_cast<unsigned long>(p));
  return c;
}

Integer int_pow(long base, long e) {
  Integer b(base), acc(1);
  for (long i = 0; i < e; ++i) acc *= b;
  return acc;
}

std::vector<long> parts_of(const Params& params) {
  std::vector<long> parts;
  for (const auto& r : param_list(params, "s")) parts.push_back(to_long(r));
  return parts;
}

void check_guard(const Integer& count) {
  if (count > Integer(enumeration_guard()))
    throw size_guard_exceeded("enumeration of " + count.get_str() +
                              " objects exceeds the guard of " +
                              std::to_string(enumeration_guard()));
}

void for_each_perm(long n, const std::function<void(const Seq&)>& visit) {
  Seq pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 1);
  do {
    visit(pi);
  } while (std::next_permutation(pi.begin(), pi.end()));
}

void for_each_signed(long n, bool up_only, const std::function<void(const Seq&)>& visit) {
  Seq pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 1);
  Seq signed_pi(pi.size());
  do {
    unsigned long masks = 1UL << n;
    for (unsigned long mask = 0; mask < masks; ++mask) {
      for (std::size_t i = 0; i < pi.size(); ++i)
        signed_pi[i] = (mask >> i) & 1UL ? -pi[i] : pi[i];
      if (up_only && (signed_pi.empty() || signed_pi[0] < 0)) continue;
      visit(signed_pi);
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
}

void for_each_word(long n, long k, const std::function<void(const Seq&)>& visit) {
  Seq w(static_cast<std::size_t>(n), 0);
  while (true) {
    visit(w);
    long i = n - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == k - 1) {
      w[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++w[static_cast<std::size_t>(i)];
  }
}

void for_each_multiset_signed(const std::vector<long>& parts,
                              const std::function<void(const Seq&)>& visit) {
  Seq word;
  for (std::size_t j = 0; j < parts.size(); ++j)
    for (long c = 0; c < parts[j]; ++c) word.push_back(static_cast<int>(j) + 1);
  std::sort(word.begin(), word.end());
  long s = static_cast<long>(word.size());
  Seq signed_word(word.size());
  do {
    unsigned long masks = 1UL << s;
    for (unsigned long mask = 0; mask < masks; ++mask) {
      for (std::size_t i = 0; i < word.size(); ++i)
        signed_word[i] = (mask >> i) & 1UL ? -word[i] : word[i];
      visit(signed_word);
    }
  } while (std::next_permutation(word.begin(), word.end()));
}

// r-Stirling words of order n grow by inserting the contiguous block m^r
// into any gap of a word of order m-1.
void stirling_rec(Seq& word, int m, int n, long r, const std::function<void(const Seq&)>& visit) {
  if (m > n) {
    visit(word);
    return;
  }
  for (std::size_t gap = 0; gap <= word.size(); ++gap) {
    Seq next;
    next.reserve(word.size() + static_cast<std::size_t>(r));
    next.insert(next.end(), word.begin(), word.begin() + static_cast<long>(gap));
    for (long j = 0; j < r; ++j) next.push_back(m);
    next.insert(next.end(), word.begin() + static_cast<long>(gap), word.end());
    stirling_rec(next, m + 1, n, r, visit);
  }
}

void for_each_stirling(long n, long r, bool apply_phi,
                       const std::function<void(const Seq&)>& visit) {
  Seq start;
  if (n == 0) {
    visit(start);
    return;
  }
  stirling_rec(start, 1, static_cast<int>(n), r, [&](const Seq& w) {
    if (apply_phi) {
      Seq img = phi_map(w, r);
      visit(img);
    } else {
      visit(w);
    }
  });
}

}  // namespace

Integer enumeration_count(const std::string& kind, const Params& params) {
  long n = param_long_or(params, "n", 0);
  if (kind == "S_n") return factorial(static_cast<unsigned long>(n));
  if (kind == "B_n") return int_pow(2, n) * factorial(static_cast<unsigned long>(n));
  if (kind == "B_n_up") return int_pow(2, n - 1) * factorial(static_cast<unsigned long>(n));
  if (kind == "Z_r_wr_S_n" || kind == "Z_r_plus" || kind == "Z_r_minus") {
    long r = param_long(params, "r");
    Integer full = int_pow(r, n) * factorial(static_cast<unsigned long>(n));
    if (kind == "Z_r_plus") return full / r;
    if (kind == "Z_r_minus") return full - full / r;
    return full;
  }
  if (kind == "k_ary") return int_pow(param_long(params, "k"), n);
  if (kind == "multiset_signed") {
    auto parts = parts_of(params);
    long s = std::accumulate(parts.begin(), parts.end(), 0L);
    return count_multiset_perms(parts) * int_pow(2, s);
  }
  if (kind == "r_stirling" || kind == "phi_r_stirling") {
    long r = param_long(params, "r");
    Integer c(1);
    for (long j = 1; j < n; ++j) c *= Integer(j * r + 1);
    return c;
  }
  throw unknown_kind("unknown enumeration kind '" + kind + "'");
}

void enumerate(const std::string& kind, const Params& params,
               const std::function<void(const Seq&)>& visit) {
  check_guard(enumeration_count(kind, params));
  long n = param_long_or(params, "n", 0);
  if (kind == "S_n") return for_each_perm(n, visit);
  if (kind == "B_n") return for_each_signed(n, false, visit);
  if (kind == "B_n_up") return for_each_signed(n, true, visit);
  if (kind == "k_ary") return for_each_word(n, param_long(params, "k"), visit);
  if (kind == "multiset_signed") return for_each_multiset_signed(parts_of(params), visit);
  if (kind == "r_stirling") return for_each_stirling(n, param_long(params, "r"), false, visit);
  if (kind == "phi_r_stirling")
    return for_each_stirling(n, param_long(params, "r"), true, visit);
  throw unknown_kind("kind '" + kind + "' is not sequence-valued");
}

void enumerate_colored(long n, long r, const std::function<void(const ColoredPerm&)>& visit,
                       int first_color) {
  ColoredPerm cp;
  cp.perm.resize(static_cast<std::size_t>(n));
  std::iota(cp.perm.begin(), cp.perm.end(), 1);
  cp.colors.assign(static_cast<std::size_t>(n), 0);
  do {
    while (true) {
      bool keep = first_color < 0 || cp.colors.empty() ||
                  (first_color == 0 ? cp.colors[0] == 0 : cp.colors[0] != 0);
      if (keep) visit(cp);
      long i = n - 1;
      while (i >= 0 && cp.colors[static_cast<std::size_t>(i)] == r - 1) {
        cp.colors[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++cp.colors[static_cast<std::size_t>(i)];
    }
  } while (std::next_permutation(cp.perm.begin(), cp.perm.end()));
}

namespace {

const std::map<std::string, std::vector<std::string>>& kind_statistics() {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"S_n", {"des", "exc_r", "alt_runs", "las", "ipk", "lpk", "altdes_A"}},
      {"B_n", {"altdes_B", "des_B"}},
      {"B_n_up", {"alt_runs_B", "altdes_B", "des_B"}},
      {"Z_r_wr_S_n", {"des_colored"}},
      {"Z_r_plus", {"des_colored"}},
      {"Z_r_minus", {"des_colored"}},
      {"k_ary", {"asc"}},
      {"multiset_signed", {"des"}},
      {"r_stirling", {"ipk_r", "lpk_r"}},
      {"phi_r_stirling", {"ipk_r", "lpk_r"}},
  };
  return table;
}

}  // namespace

Poly distribution(const std::string& kind, const Params& params, const std::string& stat) {
  auto it = kind_statistics().find(kind);
  if (it == kind_statistics().end()) throw unknown_kind("unknown kind '" + kind + "'");
  if (std::find(it->second.begin(), it->second.end(), stat) == it->second.end())
    throw incompatible_statistic("statistic '" + stat + "' does not apply to '" + kind + "'");

  std::vector<Rational> coeffs;
  auto bump = [&coeffs](long k) {
    if (k >= static_cast<long>(coeffs.size()))
      coeffs.resize(static_cast<std::size_t>(k) + 1, Rational(0));
    coeffs[static_cast<std::size_t>(k)] += 1;
  };

  if (kind == "Z_r_wr_S_n" || kind == "Z_r_plus" || kind == "Z_r_minus") {
    check_guard(enumeration_count(kind, params));
    long n = param_long(params, "n");
    long r = param_long(params, "r");
    int filter = kind == "Z_r_plus" ? 0 : (kind == "Z_r_minus" ? 1 : -1);
    enumerate_colored(n, r, [&](const ColoredPerm& cp) { bump(des_colored(cp, r)); }, filter);
    return Poly(std::move(coeffs));
  }

  // multiset descents read pi_0 = 0, matching the type-B convention.
  std::string applied = (kind == "multiset_signed" && stat == "des") ? "des_B" : stat;
  enumerate(kind, params, [&](const Seq& obj) { bump(statistic(obj, applied, params)); });
  return Poly(std::move(coeffs));
}

Poly colored_q_distribution(long n, long r, const std::vector<Rational>& qs) {
  std::vector<Rational> q = qs;
  if (q.size() == 1 && n > 1) q.assign(static_cast<std::size_t>(n), qs[0]);
  if (static_cast<long>(q.size()) < n) throw bad_params("colored_q_distribution: q too short");
  Integer full = int_pow(r, n) * factorial(static_cast<unsigned long>(n));
  check_guard(full);
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1, Rational(0));
  enumerate_colored(n, r, [&](const ColoredPerm& cp) {
    Rational w(1);
    for (std::size_t i = 0; i < cp.colors.size(); ++i)
      w *= rational_pow(q[i], cp.colors[i]);
    coeffs[static_cast<std::size_t>(des_colored(cp, r))] += w;
  });
  return Poly(std::move(coeffs));
}

}  // namespace combinat
}  // namespace polystab
