#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bilpair/exactlin/subspace.hpp"

namespace bilpair {

// Scalar bilinear form on an n-dimensional space in the Delta_ij basis:
// (e_i, e_j) -> coords(i, j).
class BilinearForm {
public:
    BilinearForm() = default;
    BilinearForm(std::size_t n, const Field& field) : coords_(n, n, field) {}
    explicit BilinearForm(Matrix coords);

    static BilinearForm delta(std::size_t n, const Field& field, std::size_t i, std::size_t j);
    // Flattened index i*n + j <-> Delta_ij.
    static BilinearForm from_flat(std::size_t n, const Vector& flat);

    std::size_t base_dim() const { return coords_.rows(); }
    const Field& field() const { return coords_.field(); }
    Scalar& operator()(std::size_t i, std::size_t j) { return coords_(i, j); }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return coords_(i, j); }
    const Matrix& coords() const { return coords_; }
    Vector flat() const;
    bool is_zero() const;

    friend BilinearForm operator+(const BilinearForm& a, const BilinearForm& b);
    friend BilinearForm operator-(const BilinearForm& a, const BilinearForm& b);
    friend BilinearForm operator*(const Scalar& c, const BilinearForm& a);
    friend bool operator==(const BilinearForm& a, const BilinearForm& b) { return a.coords_ == b.coords_; }
    friend bool operator!=(const BilinearForm& a, const BilinearForm& b) { return !(a == b); }

    std::string to_string() const;  // "D11 + 2*D12", "0"

private:
    Matrix coords_;
};

// W-valued bilinear map theta = (theta_1, ..., theta_m) on the base space.
struct Cocycle {
    std::size_t base_dim = 0;
    std::vector<BilinearForm> components;

    Cocycle() = default;
    Cocycle(std::size_t n, std::vector<BilinearForm> comps);

    std::size_t m() const { return components.size(); }
    std::string to_string() const;  // "(D11, D12)"
};

// {v : theta_i(v, .) = theta_i(., v) = 0 for all i}; full space when m = 0.
Subspace form_radical(const Cocycle& theta, const Field& field);

}  // namespace bilpair
