#ifndef POLYSTAB_CERTIFICATE_HPP
#define POLYSTAB_CERTIFICATE_HPP

#include <string>

#include "json.hpp"
#include "polystab/families.hpp"
#include "polystab/poly.hpp"

namespace polystab {

// Machine-readable verdict for one (family, params, n, property) check.
// Rationals serialize as exact "num/den" strings so certificates diff
// cleanly; a failing certificate always carries a witness.
struct Certificate {
  std::string family;
  Params params;
  long n = 0;
  std::string property;
  bool pass = false;
  bool conjecture = false;
  nlohmann::json witness;
};

nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace polystab

#endif
