#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bilpair/pair/bilinear_pair.hpp"

namespace bilpair {

// Equivalence invariants; unequal fingerprints rule out equivalence.
struct Fingerprint {
    std::size_t dim = 0;
    std::size_t radical_dim = 0;
    std::size_t product_dim = 0;
    std::size_t radical_product_dim = 0;  // dim(rad f ∩ f(V,V))
    std::size_t left_annihilator_dim = 0;
    std::size_t right_annihilator_dim = 0;
    std::size_t left_map_rank = 0;   // rank of v -> L_v
    std::size_t right_map_rank = 0;  // rank of v -> R_v
    // Prime fields with small p^n: multiset of per-vector signatures
    // (rank L_v, rank R_v, relation of v v to v and to the radical).
    std::vector<std::pair<std::uint64_t, std::uint64_t>> profile;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
    std::string to_string() const;
};

Fingerprint invariant_fingerprint(const BilinearPair& p);

enum class ExecMode { serial, parallel };

struct SearchOptions {
    bool force = false;  // ignore the enumeration budget
    ExecMode mode = ExecMode::parallel;
};

// Desk-scale budget: n <= 5 with p <= 3, n <= 3 with p <= 7, or n <= 6 with p = 2.
bool within_budget(std::size_t n, std::uint32_t p);

// Exhaustive search for phi with apply_change_of_basis(a, phi) == b. Returns
// the first witness in enumerate_gl order. Pruned branches provably contain no
// witness. The witness is re-verified with exact arithmetic before return.
std::optional<Matrix> are_equivalent_bruteforce(const BilinearPair& a, const BilinearPair& b,
                                                const SearchOptions& options = {});

// Literal sweep over enumerate_gl checking every matrix. Reference for the
// pruned search; same first witness.
std::optional<Matrix> equivalence_sweep(const BilinearPair& a, const BilinearPair& b,
                                        ExecMode mode = ExecMode::parallel);

bool is_witness(const BilinearPair& a, const BilinearPair& b, const Matrix& phi);

struct AutomorphismGroup {
    BilinearPair base;
    std::vector<Matrix> elements;  // enumerate_gl order

    std::size_t order() const { return elements.size(); }
    bool contains(const Matrix& phi) const;
};

// All invertible phi with phi(g(x,y)) = g(phi x, phi y), by the pruned search.
AutomorphismGroup automorphism_group(const BilinearPair& p, const SearchOptions& options = {});
// Same set by a full GL sweep (dim <= 3 reference).
AutomorphismGroup automorphism_group_sweep(const BilinearPair& p, ExecMode mode = ExecMode::parallel);
// Identity present, closed under products and inverses.
bool check_group_axioms(const AutomorphismGroup& g);

// Definitional test: is there a nonzero radical vector u and a hyperplane W
// with u not in W and f(W,W) in W? Enumerates hyperplanes.
bool has_radical_component_bruteforce(const BilinearPair& p);

}  // namespace bilpair
