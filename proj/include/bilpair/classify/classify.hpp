#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bilpair/cohom/cohomology.hpp"

namespace bilpair {

struct ClassifyOptions {
    bool force = false;  // ignore enumeration budgets
    ExecMode mode = ExecMode::parallel;
    std::uint64_t max_subspaces = 2'000'000;  // cap on |Grass_s(H^2)|
};

// An s-dimensional subspace of H^2 (in H^2 coordinates, canonical RREF basis)
// whose lifted classes theta_1..theta_s satisfy (∩ rad theta_i) ∩ rad g = 0.
struct TsElement {
    std::size_t s = 0;
    Subspace subspace;
    Cocycle certificate;  // canonical representatives of the basis rows
};

// T_s in Grassmannian stream order.
std::vector<TsElement> enumerate_ts(const BilinearPair& base, std::size_t s, const ClassifyOptions& options = {});

struct Orbit {
    TsElement representative;  // lexicographically minimal basis matrix in the orbit
    std::size_t size = 0;
};

struct OrbitReport {
    BilinearPair base;
    std::size_t s = 0;
    std::vector<Orbit> orbits;  // ordered by representative
    std::size_t total = 0;      // |T_s|
};

// Orbits of aut acting on T_s through phi [theta] = [theta(phi ., phi .)].
OrbitReport orbit_partition(const BilinearPair& base, std::size_t s, const AutomorphismGroup& aut,
                            const ClassifyOptions& options = {});

// One extension build_extension(base, certificate) per orbit.
std::vector<BilinearPair> representatives(const BilinearPair& base, std::size_t s,
                                          const ClassifyOptions& options = {});
std::vector<BilinearPair> representatives(const OrbitReport& report);

struct ClassifiedPair {
    std::string base_name;
    std::size_t s = 0;            // dimension of the extending space
    std::size_t orbit_index = 0;  // within (base, s); 0 for s = 0
    std::size_t components = 0;   // radical components added on top
    BilinearPair pair;
};

struct ClassificationReport {
    std::size_t total_dim = 0;
    std::vector<ClassifiedPair> pairs;  // pairwise inequivalent
    std::vector<std::pair<std::string, std::size_t>> per_base;  // classes contributed per base
    std::size_t duplicates = 0;        // candidates merged by brute force
    std::vector<std::string> diagnostics;
};

// n-dimensional pairs with (n-2)-dimensional radical arising from the given
// 2-dimensional bases: orbit representatives for s = 1..min(h2, n-2) plus
// radical-component towers, deduplicated by brute-force equivalence.
ClassificationReport classify_codim2(const std::vector<std::pair<std::string, BilinearPair>>& bases,
                                     std::size_t total_dim, const ClassifyOptions& options = {});

// base, s, orbit_index, orbit_size, representative_subspace_rref; one line per orbit.
std::string orbit_report_tsv(const OrbitReport& report, const std::string& base_name, bool header = true);

}  // namespace bilpair
