#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bilpair/exactlin/subspace.hpp"

namespace bilpair {

// A vector space with an arbitrary bilinear product, given by structure
// constants: e_i e_j = sum_k c(i,j,k) e_k. Indices are 0-based in code and
// 1-based in text.
class BilinearPair {
public:
    BilinearPair() : n_(0), field_(Field::rationals()) {}
    BilinearPair(std::size_t n, const Field& field);  // zero product

    std::size_t dim() const { return n_; }
    const Field& field() const { return field_; }

    Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * n_ + j) * n_ + k]; }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }

    Vector product(std::size_t i, std::size_t j) const;  // e_i e_j
    void set_product(std::size_t i, std::size_t j, const Vector& v);
    Vector multiply(const Vector& x, const Vector& y) const;
    // Matrix of x -> v x (left) or x -> x v (right); column j is the image of e_j.
    Matrix left_operator(const Vector& v) const;
    Matrix right_operator(const Vector& v) const;

    friend bool operator==(const BilinearPair& a, const BilinearPair& b) {
        return a.n_ == b.n_ && a.field_ == b.field_ && a.c_ == b.c_;
    }
    friend bool operator!=(const BilinearPair& a, const BilinearPair& b) { return !(a == b); }

private:
    std::size_t n_;
    Field field_;
    std::vector<Scalar> c_;
};

// Two-sided annihilator {v : e_i v = v e_i = 0 for all i}.
Subspace radical(const BilinearPair& p);
// Span of all products e_i e_j.
Subspace product_space(const BilinearPair& p);
// The pair with product phi(f(phi^-1 x, phi^-1 y)); phi's columns are the images of e_j.
BilinearPair apply_change_of_basis(const BilinearPair& p, const Matrix& phi);
BilinearPair opposite(const BilinearPair& p);
BilinearPair add_radical_components(const BilinearPair& p, std::size_t t);
BilinearPair quotient_by_radical(const BilinearPair& p);
// Quotient computed with coset representatives e_j + shift_j (shift_j in the
// radical, one row per non-pivot coordinate). Used to cross-check the above.
BilinearPair quotient_with_representatives(const BilinearPair& p, const Matrix& shifts);

std::string basis_vector_text(const Vector& v);  // "e1 + 2*e3"

}  // namespace bilpair
