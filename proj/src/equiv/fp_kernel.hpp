#pragma once

// Residue-level kernels for the exhaustive change-of-basis search over F_p.

#include <cstdint>
#include <functional>
#include <vector>

#include "bilpair/pair/bilinear_pair.hpp"

namespace bilpair::detail {

using Residue = std::uint32_t;

struct FpPair {
    std::size_t n = 0;
    Residue p = 0;
    std::vector<Residue> c;  // (i*n+j)*n+k

    static FpPair from(const BilinearPair& pair);
    Residue operator()(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * n + j) * n + k]; }
    // out = x y
    void multiply(const Residue* x, const Residue* y, Residue* out) const;
};

// Membership test against a subspace of F_p^n given by an RREF basis.
class FpSubspace {
public:
    FpSubspace() = default;
    FpSubspace(const Subspace& s);
    bool contains(const Residue* v) const;

private:
    std::size_t n_ = 0;
    Residue p_ = 0;
    std::vector<std::vector<Residue>> rows_;
    std::vector<std::size_t> pivots_;
};

std::size_t rank_mod(std::vector<Residue> m, std::size_t rows, std::size_t cols, Residue p);

// Invariant subspaces of a pair used for pruning.
struct InvariantSubspaces {
    FpSubspace rad_and_prod, rad, prod, rad_plus_prod;
    explicit InvariantSubspaces(const BilinearPair& pair);
};

// Per-vector signature, preserved by every equivalence: ranks of L_v and R_v,
// membership of v in the product space, and the relation of v v to v and to
// the radical.
std::uint64_t vector_signature(const FpPair& f, const InvariantSubspaces& inv, const Residue* v);

// Digits of every vector of F_p^n; code = sum v_i p^(n-1-i) (row 0 most significant).
class VectorTable {
public:
    VectorTable(std::size_t n, Residue p);
    std::uint64_t size() const { return count_; }
    const Residue* at(std::uint64_t code) const { return digits_.data() + code * n_; }
    std::uint64_t encode(const Residue* v) const;

private:
    std::size_t n_;
    Residue p_;
    std::uint64_t count_;
    std::vector<Residue> digits_;
};

// Depth-first search over invertible matrices, column by column, with column
// candidates in increasing code order. Leaves are visited in enumerate_gl
// order. With pruning disabled every invertible matrix is a leaf and the full
// condition is checked there.
class GlSearch {
public:
    GlSearch(const BilinearPair& a, const BilinearPair& b, bool prune);

    std::size_t dim() const { return n_; }
    const std::vector<std::uint64_t>& first_column_candidates() const { return cand_[0]; }
    // Visits solutions whose first column is first_column_candidates()[index].
    // on_solution returns false to stop; abort is polled periodically.
    // Returns false if stopped.
    bool run(std::size_t index, const std::function<bool(const std::vector<std::uint64_t>&)>& on_solution,
             const std::function<bool()>& abort = {}) const;

    Matrix to_matrix(const std::vector<std::uint64_t>& cols, const Field& field) const;

private:
    struct PendingPair {
        std::size_t i, j;
        int mask;  // subspace of b containing the unassigned part; 0 for exact
    };

    bool check_depth(std::size_t k, const std::vector<const Residue*>& img, Residue* scratch) const;
    bool check_full(const std::vector<const Residue*>& img, Residue* scratch) const;

    std::size_t n_;
    Residue p_;
    bool prune_;
    FpPair a_, b_;
    VectorTable table_;
    std::vector<std::uint8_t> mask_b_;  // membership bits of each code in b's subspaces
    std::vector<std::vector<std::uint64_t>> cand_;
    std::vector<std::vector<PendingPair>> checks_;
};

}  // namespace bilpair::detail
