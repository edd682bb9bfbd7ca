#pragma once

#include <cstddef>
#include <vector>

#include "bilpair/exactlin/matrix.hpp"

namespace bilpair {

// Subspace of field^ambient stored as its RREF basis (rows). Equal subspaces
// have identical bases, so == is set equality.
class Subspace {
public:
    Subspace() = default;
    Subspace(std::size_t ambient_dim, const Field& field);  // zero subspace

    static Subspace span(const Matrix& rows);
    static Subspace span(const std::vector<Vector>& rows, std::size_t ambient_dim, const Field& field);
    static Subspace full(std::size_t ambient_dim, const Field& field);
    // Trusts that `basis` is already in RREF with full row rank.
    static Subspace from_rref(Matrix basis, std::vector<std::size_t> pivots);

    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    const Field& field() const { return basis_.field(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::vector<std::size_t> non_pivots() const;
    Vector vector(std::size_t i) const { return basis_.row(i); }

    // v minus the basis combination matching v on the pivot coordinates.
    Vector reduce(const Vector& v) const;
    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    // Coefficients of v in the stored basis; v must lie in the subspace.
    Vector coordinates(const Vector& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
    std::size_t hash() const { return basis_.hash(); }

private:
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
// {v : <b, v> = 0 for every basis row b}.
Subspace annihilator(const Subspace& a);

// Reference check independent of canonical forms.
bool mutually_contained(const Subspace& a, const Subspace& b);

}  // namespace bilpair
