#include "polystab/recurrence.hpp"

#include "polystab/errors.hpp"

namespace polystab {

Poly RecurrenceSpec::factor_poly(long n) const {
  return Poly{gamma(n), beta(n), alpha(n)};
}

Poly RecurrenceSpec::operator_poly(long n) const {
  return Poly{psi(n), phi(n), nu(n), mu(n)};
}

Poly RecurrenceSpec::step(const Poly& t, long n) const {
  return factor_poly(n) * t + operator_poly(n) * t.derivative();
}

std::vector<Poly> generate_T(const RecurrenceSpec& spec, long N) {
  if (N < spec.seed_index)
    throw bad_params("generate_T: N below the seed index");
  std::vector<Poly> out;
  out.reserve(static_cast<std::size_t>(N - spec.seed_index) + 1);
  out.push_back(spec.seed);
  if (spec.degree_law && spec.seed.degree() != spec.degree_law(spec.seed_index))
    throw degree_law_violation("degree law violated at seed index n=" +
                               std::to_string(spec.seed_index));
  for (long n = spec.seed_index; n < N; ++n) {
    out.push_back(spec.step(out.back(), n));
    if (spec.degree_law && out.back().degree() != spec.degree_law(n + 1))
      throw degree_law_violation("degree law violated at n=" + std::to_string(n + 1) +
                                 ": got " + std::to_string(out.back().degree()) +
                                 ", expected " + std::to_string(spec.degree_law(n + 1)));
  }
  return out;
}

}  // namespace polystab
