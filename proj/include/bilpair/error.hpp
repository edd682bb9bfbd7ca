#pragma once

#include <stdexcept>
#include <string>

namespace bilpair {

enum class ErrorCode {
    division_by_zero,
    non_prime_modulus,
    field_mismatch,
    dimension_mismatch,
    singular_matrix,
    enumeration_unsupported,
    parse_error,
    index_out_of_range,
    nothing_to_decompose,
    budget_exceeded,
    invalid_input,
    radical_overlap,
    component_present,
    out_of_range,
    constraint_violation,
    characteristic_excluded,
    unknown_id,
};

const char* error_code_name(ErrorCode code);

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace bilpair
