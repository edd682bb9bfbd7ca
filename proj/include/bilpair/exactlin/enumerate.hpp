#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bilpair/exactlin/subspace.hpp"

namespace bilpair {

// Number of s-dimensional subspaces of F_p^n.
std::uint64_t gaussian_binomial(std::size_t n, std::size_t s, std::uint64_t p);
// |GL(n, F_p)| = prod_{i<n} (p^n - p^i).
std::uint64_t gl_order(std::size_t n, std::uint64_t p);

// Digits of a column code, row 0 most significant.
std::vector<std::uint32_t> code_digits(std::uint64_t code, std::size_t n, std::uint32_t p);
std::uint64_t digits_code(const std::vector<std::uint32_t>& digits, std::uint32_t p);

// s-dimensional subspaces of F_p^n in canonical RREF form. Order: pivot-column
// sets lexicographically, then the free entries read row-major as a base-p
// number (first free entry most significant).
class GrassmannianStream {
public:
    GrassmannianStream(std::size_t ambient_dim, std::size_t s, const Field& field);

    std::uint64_t size() const { return total_; }
    Subspace at(std::uint64_t index) const;
    // f returns false to stop early.
    void for_each(const std::function<bool(const Subspace&)>& f) const;

    std::size_t ambient_dim() const { return n_; }
    std::size_t s() const { return s_; }

private:
    struct Block {
        std::vector<std::size_t> pivots;
        std::vector<std::pair<std::size_t, std::size_t>> free_slots;  // (row, col)
        std::uint64_t start;
        std::uint64_t count;
    };

    std::size_t n_;
    std::size_t s_;
    Field field_;
    std::vector<Block> blocks_;
    std::uint64_t total_ = 0;
};

GrassmannianStream enumerate_grassmannian(std::size_t ambient_dim, std::size_t s, const Field& field);

// Invertible n x n matrices, ordered lexicographically by their column codes
// (column 0 first; within a column row 0 is the most significant base-p digit).
class GlStream {
public:
    GlStream(std::size_t n, const Field& field);

    std::uint64_t size() const { return gl_order(n_, field_.modulus()); }
    std::size_t n() const { return n_; }
    const Field& field() const { return field_; }
    void for_each(const std::function<bool(const Matrix&)>& f) const;
    // Only matrices whose first column has the given code (1 <= code < p^n).
    void for_each_with_first_column(std::uint64_t code, const std::function<bool(const Matrix&)>& f) const;

private:
    std::size_t n_;
    Field field_;
};

GlStream enumerate_gl(std::size_t n, const Field& field);

}  // namespace bilpair
