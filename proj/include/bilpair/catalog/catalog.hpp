#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bilpair/catalog/expression.hpp"
#include "bilpair/pair/bilinear_pair.hpp"

namespace bilpair {

struct BaseRef {
    std::string id;                   // Table 4 family
    std::vector<Expression> args;     // one per base parameter
};

struct ProductRule {
    std::size_t i = 0, j = 0;  // 0-based
    Expression value;
};

// One table row: a structure-constant template with parameters.
struct CatalogEntry {
    std::string id;        // "A_04", "B2", "A_134"
    int table = 0;         // 1..4; 0 for the six-dimensional endpoint
    std::string label;     // e.g. "(A1(1/2))_{3,2}"
    std::size_t dim = 0;
    std::vector<std::string> params;
    std::vector<std::string> domains;       // as printed; not enforced
    std::vector<Inequation> constraints;    // enforced
    std::optional<BaseRef> base;            // Tables 1-3 and the endpoint
    std::vector<ProductRule> products;
    std::vector<std::uint32_t> char_exclusions;
};

// A family of s-dimensional subspaces of H^2 listed as orbit representatives.
struct OrbitFamily {
    std::size_t s = 0;
    std::vector<std::string> free_params;
    std::vector<Expression> rows;  // forms in D<i><j>
    std::string text;
};

// Stated computations for one case of a two-dimensional base.
struct Fixture {
    std::string id;  // "A1", "D1_0", ...
    std::string label;
    BaseRef base;
    std::vector<std::string> params;
    std::vector<Inequation> constraints;
    std::vector<Expression> coboundary;  // stated delta e_k^*
    std::optional<std::size_t> h2_dim;
    std::vector<Expression> h2_basis;
    std::vector<OrbitFamily> orbits;
    std::vector<std::uint32_t> char_exclusions;
};

class Catalog {
public:
    // Parses `.bpt` text; `source` names it in error messages.
    void add_text(std::string_view text, const std::string& source = "<text>");
    void add_file(const std::string& path);

    // The tables shipped with the library.
    static const Catalog& builtin();

    const std::vector<CatalogEntry>& entries() const { return entries_; }
    const std::vector<Fixture>& fixtures() const { return fixtures_; }
    const CatalogEntry& entry(std::string_view id) const;  // unknown_id
    const Fixture& fixture(std::string_view id) const;     // unknown_id
    bool has_entry(std::string_view id) const;
    std::vector<const CatalogEntry*> table(int t) const;   // file order

    // Replaces an entry with the same id (used for sensitivity controls).
    void replace(CatalogEntry e);

private:
    std::vector<CatalogEntry> entries_;
    std::vector<Fixture> fixtures_;
};

// Exact structure constants for the row at the given parameter values.
// Errors: unknown_id, characteristic_excluded, constraint_violation (including
// the constraints of the referenced base and divisions by zero).
BilinearPair instantiate(const Catalog& catalog, std::string_view id, const Assignment& values, const Field& field);
BilinearPair instantiate(std::string_view id, const Assignment& values, const Field& field);

// The base family at the values this entry passes to it.
BilinearPair instantiate_base(const Catalog& catalog, const CatalogEntry& e, const Assignment& values,
                              const Field& field);

bool is_admissible(const Catalog& catalog, const CatalogEntry& e, const Assignment& values, const Field& field);

// Up to `count` distinct admissible assignments over a prime field: first the
// lattice points t * (1, 2, ..., k) mod p for t = 0, 1, ..., then draws from a
// generator seeded with `seed`. Parameter-free rows give one empty assignment.
// Empty when the characteristic is excluded or nothing admissible is found.
std::vector<Assignment> sample_assignments(const Catalog& catalog, const CatalogEntry& e, const Field& field,
                                           std::size_t count, std::uint64_t seed);
std::vector<Assignment> sample_assignments(const Catalog& catalog, const Fixture& f, const Field& field,
                                           std::size_t count, std::uint64_t seed);

std::string assignment_text(const std::vector<std::string>& params, const Assignment& values);

}  // namespace bilpair
