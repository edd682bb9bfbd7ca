#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bilpair/exactlin/matrix.hpp"

namespace bilpair {

// Parameter values by name.
using Assignment = std::map<std::string, Scalar>;

// Symbolic coefficient expression over integers and named parameters, linear
// in basis symbols: e<k> (vector of length n) or D<i><j> (form, length n^2).
class Expression {
public:
    struct Node;

    Expression() = default;
    static Expression parse(std::string_view text);

    // Value when no basis symbol occurs; throws invalid_input otherwise.
    Scalar scalar(const Field& field, const Assignment& values) const;
    // Coefficient vector in e_1..e_n, or in D_11..D_nn (flat i*n+j) when forms is set.
    Vector vector(const Field& field, const Assignment& values, std::size_t n, bool forms = false) const;

    bool has_basis_symbols() const;
    void collect_parameters(std::vector<std::string>& out) const;
    // Primes dividing some parameter-free divisor.
    std::vector<std::uint32_t> excluded_characteristics() const;

    const std::string& text() const { return text_; }

private:
    std::shared_ptr<const Node> root_;
    std::string text_;
};

// "a != b [or c != d]": holds when some alternative has unequal sides.
struct Inequation {
    std::vector<std::pair<Expression, Expression>> alternatives;
    std::string text;

    static Inequation parse(std::string_view text);
    bool holds(const Field& field, const Assignment& values) const;
};

}  // namespace bilpair
