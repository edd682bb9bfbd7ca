#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bilpair/catalog/catalog.hpp"
#include "bilpair/equiv/equivalence.hpp"

namespace bilpair {

struct EntrySample {
    std::string values;               // "alpha=2,lambda=0"
    std::size_t radical_dim = 0;
    bool radical_ok = false;          // radical dim = dim - 2
    bool base_ok = false;             // quotient by the radical is equivalent to the base row
    bool roundtrip_ok = false;        // decompose then build_extension, checked by witness
    std::string note;
    bool passed() const { return radical_ok && base_ok && roundtrip_ok; }
};

struct EntryReport {
    std::string id;
    Field field = Field::rationals();
    std::vector<EntrySample> samples;
    std::string skipped;  // reason when nothing was checked
    bool passed() const;  // every sample passed; a skip is not a failure
};

EntryReport verify_entry(const Catalog& catalog, std::string_view id, const Field& field, std::size_t samples,
                         std::uint64_t seed);

struct FixtureCheck {
    std::string what;    // "coboundary", "h2_dim", "h2_basis", "orbits s=1"
    std::string values;
    bool ok = false;
    std::string detail;
};

struct FixtureReport {
    std::string id;
    Field field = Field::rationals();
    std::vector<FixtureCheck> checks;
    std::vector<std::string> notes;  // finite-field effects on orbit lists; not failures
    std::string skipped;
    bool passed() const;
};

FixtureReport verify_fixture(const Catalog& catalog, std::string_view id, const Field& field, std::size_t samples,
                             std::uint64_t seed);

struct AuditInstance {
    std::string id;
    std::string values;
    BilinearPair pair;
};

struct AuditCollision {
    std::size_t a = 0, b = 0;  // indices into instances
    Matrix witness;
    bool same_family = false;
};

struct AuditReport {
    int table = 0;
    Field field = Field::rationals();
    std::vector<AuditInstance> instances;
    std::vector<AuditCollision> collisions;  // ordered by (a, b)
    std::size_t searches = 0;                // pairs that reached the exhaustive search
};

// All-pairs equivalence among sampled instantiations of one table.
// Throws budget_exceeded beyond the search budget unless options.force.
AuditReport distinctness_audit(const Catalog& catalog, int table, const Field& field, std::size_t samples_per_family,
                               std::uint64_t seed, const SearchOptions& options = {});

std::string entry_reports_tsv(const std::vector<EntryReport>& reports);
std::string fixture_reports_tsv(const std::vector<FixtureReport>& reports);
std::string audit_report_tsv(const AuditReport& report);

}  // namespace bilpair
