#pragma once

#include <string>
#include <string_view>

#include "bilpair/pair/bilinear_pair.hpp"

namespace bilpair {

// .bp text:
//   field p=<prime> | field rational
//   dim <n>
//   e<i>*e<j> = <c>*e<k> [+ <c>*e<k> ...]
// '#' starts a comment, omitted products are zero, duplicate left-hand sides
// are rejected. Coefficients are integers or a/b.
BilinearPair parse_bp(std::string_view text);
std::string serialize_bp(const BilinearPair& p);

BilinearPair read_bp_file(const std::string& path);
void write_bp_file(const std::string& path, const BilinearPair& p);

// Parses "a" or "a/b" (optional sign) into the field.
Scalar parse_coefficient(std::string_view text, const Field& field);

}  // namespace bilpair
