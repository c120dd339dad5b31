#ifndef POLYSTAB_ERRORS_HPP
#define POLYSTAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polystab {

struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

#define POLYSTAB_DEFINE_ERROR(name)                        \
  struct name : error {                                    \
    explicit name(const std::string& msg) : error(msg) {}  \
  }

POLYSTAB_DEFINE_ERROR(degree_too_large);
POLYSTAB_DEFINE_ERROR(inexact_division);
POLYSTAB_DEFINE_ERROR(division_by_zero);
POLYSTAB_DEFINE_ERROR(zero_polynomial);
POLYSTAB_DEFINE_ERROR(endpoint_is_root);
POLYSTAB_DEFINE_ERROR(precondition_violated);
POLYSTAB_DEFINE_ERROR(degree_law_violation);
POLYSTAB_DEFINE_ERROR(unknown_family);
POLYSTAB_DEFINE_ERROR(bad_params);
POLYSTAB_DEFINE_ERROR(missing_seed);
POLYSTAB_DEFINE_ERROR(not_polynomial_counting);
POLYSTAB_DEFINE_ERROR(bad_root_list);
POLYSTAB_DEFINE_ERROR(size_guard_exceeded);
POLYSTAB_DEFINE_ERROR(unknown_kind);
POLYSTAB_DEFINE_ERROR(incompatible_statistic);
POLYSTAB_DEFINE_ERROR(invalid_stirling_perm);
POLYSTAB_DEFINE_ERROR(not_symmetric);
POLYSTAB_DEFINE_ERROR(not_symmetric_after_strip);
POLYSTAB_DEFINE_ERROR(index_out_of_range);
POLYSTAB_DEFINE_ERROR(unknown_criterion);
POLYSTAB_DEFINE_ERROR(missing_params);
POLYSTAB_DEFINE_ERROR(non_unit_constant_term);
POLYSTAB_DEFINE_ERROR(non_integer_exponent);

#undef POLYSTAB_DEFINE_ERROR

}  // namespace polystab

#endif
