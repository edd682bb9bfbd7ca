#include "bilpair/catalog/verify.hpp"

#include <map>
#include <sstream>

#include "bilpair/classify/classify.hpp"
#include "bilpair/cohom/cohomology.hpp"
#include "bilpair/pair/decompose.hpp"
#include "bilpair/parallel.hpp"

namespace bilpair {

namespace {

std::string field_text(const Field& f) { return f.is_prime() ? "F" + std::to_string(f.modulus()) : "Q"; }

std::string exclusion_text(const std::vector<std::uint32_t>& ex, const Field& field) {
    for (auto p : ex)
        if (field.is_prime() && p == field.characteristic()) return "characteristic " + std::to_string(p) + " excluded";
    return {};
}

Subspace span_forms(const std::vector<Expression>& forms, const Field& field, const Assignment& values) {
    std::vector<Vector> rows;
    for (const auto& f : forms) rows.push_back(f.vector(field, values, 2, true));
    return Subspace::span(rows, 4, field);
}

// Lexicographically least basis in the orbit of `sub` (H^2 coordinates).
Matrix canonical_in_orbit(const Subspace& sub, const std::vector<Matrix>& actions) {
    Matrix best;
    bool first = true;
    for (const Matrix& m : actions) {
        Matrix img = Subspace::span(sub.basis() * m).basis();
        if (first || img < best) best = img;
        first = false;
    }
    return best;
}

void check_orbits(const Fixture& fx, const BilinearPair& base, const CohomologySpace& space, const Assignment& values,
                  const std::string& values_text, FixtureReport& report) {
    if (fx.orbits.empty()) return;
    const Field& field = base.field();
    std::uint32_t p = field.modulus();
    AutomorphismGroup aut = automorphism_group(base);
    std::vector<Matrix> actions;
    for (const Matrix& phi : aut.elements) actions.push_back(h2_action_matrix(space, phi));
    Subspace rad = radical(base);

    std::map<std::size_t, std::vector<const OrbitFamily*>> by_s;
    for (const auto& fam : fx.orbits) by_s[fam.s].push_back(&fam);
    for (const auto& [s, families] : by_s) {
        FixtureCheck check{"orbits s=" + std::to_string(s), values_text, true, {}};
        OrbitReport orbits = orbit_partition(base, s, aut);
        std::map<Matrix, std::size_t> where;
        for (std::size_t k = 0; k < orbits.orbits.size(); ++k) where[orbits.orbits[k].representative.subspace.basis()] = k;
        // orbit -> (family index, member text)
        std::vector<std::vector<std::pair<std::size_t, std::string>>> hits(orbits.orbits.size());
        for (std::size_t fi = 0; fi < families.size(); ++fi) {
            const OrbitFamily& fam = *families[fi];
            std::uint64_t members = 1;
            for (std::size_t k = 0; k < fam.free_params.size(); ++k) members *= p;
            for (std::uint64_t code = 0; code < members; ++code) {
                Assignment v = values;
                std::uint64_t c = code;
                for (const auto& name : fam.free_params) {
                    v[name] = Scalar::from_residue(p, static_cast<std::uint32_t>(c % p));
                    c /= p;
                }
                std::string member = fam.text + (fam.free_params.empty() ? "" : " [" + assignment_text(fam.free_params, v) + "]");
                std::vector<Vector> rows;
                for (const auto& r : fam.rows) {
                    rows.push_back(space.coordinates(BilinearForm::from_flat(2, r.vector(field, v, 2, true))));
                }
                Subspace sub = Subspace::span(rows, space.h2_dim, field);
                if (sub.dim() != s) {
                    report.notes.push_back(fx.id + " " + values_text + ": " + member + " has dimension " +
                                           std::to_string(sub.dim()) + " over " + field_text(field));
                    continue;
                }
                std::vector<BilinearForm> comps;
                for (std::size_t r = 0; r < s; ++r) comps.push_back(space.from_coordinates(sub.vector(r)));
                if (subspace_intersect(rad, form_radical(Cocycle(2, comps), field)).dim() != 0) {
                    check.ok = false;
                    check.detail += member + " is not in T_" + std::to_string(s) + "; ";
                    continue;
                }
                auto it = where.find(canonical_in_orbit(sub, actions));
                if (it == where.end()) {
                    check.ok = false;
                    check.detail += member + " matches no computed orbit; ";
                    continue;
                }
                hits[it->second].emplace_back(fi, member);
            }
        }
        std::size_t covered = 0;
        for (std::size_t k = 0; k < hits.size(); ++k) {
            const auto& h = hits[k];
            if (h.empty()) {
                report.notes.push_back(fx.id + " " + values_text + ": orbit of " +
                                       orbits.orbits[k].representative.subspace.basis().to_string() + " (size " +
                                       std::to_string(orbits.orbits[k].size) + ") has no listed representative over " +
                                       field_text(field));
                continue;
            }
            ++covered;
            if (h.size() > 1) {
                std::string list;
                for (const auto& [fi, m] : h) list += (list.empty() ? "" : ", ") + m;
                report.notes.push_back(fx.id + " " + values_text + ": one orbit over " + field_text(field) +
                                       " contains " + list);
            }
        }
        if (check.detail.empty()) {
            check.detail = std::to_string(orbits.orbits.size()) + " orbits, " + std::to_string(covered) + " represented";
        }
        report.checks.push_back(std::move(check));
    }
}

}  // namespace

bool EntryReport::passed() const {
    for (const auto& s : samples)
        if (!s.passed()) return false;
    return true;
}

bool FixtureReport::passed() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

EntryReport verify_entry(const Catalog& catalog, std::string_view id, const Field& field, std::size_t samples,
                         std::uint64_t seed) {
    const CatalogEntry& e = catalog.entry(id);
    EntryReport report;
    report.id = e.id;
    report.field = field;
    if (auto why = exclusion_text(e.char_exclusions, field); !why.empty()) {
        report.skipped = why;
        return report;
    }
    std::vector<Assignment> values = sample_assignments(catalog, e, field, samples, seed);
    if (values.empty()) {
        report.skipped = "no admissible parameters over " + field_text(field);
        return report;
    }
    for (const Assignment& v : values) {
        EntrySample s;
        s.values = assignment_text(e.params, v);
        try {
            BilinearPair p = instantiate(catalog, e.id, v, field);
            s.radical_dim = radical(p).dim();
            if (!e.base) {
                // A base family: nothing to recover.
                s.radical_ok = s.base_ok = s.roundtrip_ok = true;
                s.note = "base family";
                report.samples.push_back(std::move(s));
                continue;
            }
            s.radical_ok = s.radical_dim + 2 == e.dim;
            if (s.radical_dim == 0) {
                s.note = "zero radical";
            } else {
                BilinearPair base = instantiate_base(catalog, e, v, field);
                BilinearPair quotient = quotient_by_radical(p);
                SearchOptions so;
                so.force = quotient.dim() <= 2;
                so.mode = ExecMode::serial;
                s.base_ok = are_equivalent_bruteforce(quotient, base, so).has_value();
                Decomposition d = decompose(p);
                s.roundtrip_ok = is_witness(p, build_extension(d.base, d.theta), d.to_extension);
                if (!s.base_ok) s.note = "quotient " + invariant_fingerprint(quotient).to_string();
            }
        } catch (const Error& err) {
            s.note = std::string(error_code_name(err.code())) + ": " + err.what();
        }
        report.samples.push_back(std::move(s));
    }
    return report;
}

FixtureReport verify_fixture(const Catalog& catalog, std::string_view id, const Field& field, std::size_t samples,
                             std::uint64_t seed) {
    const Fixture& fx = catalog.fixture(id);
    FixtureReport report;
    report.id = fx.id;
    report.field = field;
    std::vector<std::uint32_t> ex = fx.char_exclusions;
    const CatalogEntry& base_entry = catalog.entry(fx.base.id);
    ex.insert(ex.end(), base_entry.char_exclusions.begin(), base_entry.char_exclusions.end());
    if (auto why = exclusion_text(ex, field); !why.empty()) {
        report.skipped = why;
        return report;
    }
    std::vector<Assignment> values = sample_assignments(catalog, fx, field, samples, seed);
    if (values.empty()) {
        report.skipped = "no admissible parameters over " + field_text(field);
        return report;
    }
    for (const Assignment& v : values) {
        std::string vt = assignment_text(fx.params, v);
        try {
            Assignment bv;
            for (std::size_t k = 0; k < fx.base.args.size(); ++k) bv[base_entry.params.at(k)] = fx.base.args[k].scalar(field, v);
            BilinearPair base = instantiate(catalog, fx.base.id, bv, field);
            CohomologySpace space = cohomology(base);
            if (!fx.coboundary.empty() || fx.h2_dim) {
                Subspace stated = span_forms(fx.coboundary, field, v);
                bool ok = stated == space.coboundary;
                report.checks.push_back({"coboundary", vt, ok,
                                         ok ? "dim " + std::to_string(stated.dim())
                                            : "stated dim " + std::to_string(stated.dim()) + ", computed dim " +
                                                  std::to_string(space.coboundary.dim())});
            }
            if (fx.h2_dim) {
                bool ok = *fx.h2_dim == space.h2_dim;
                report.checks.push_back({"h2_dim", vt, ok,
                                         "stated " + std::to_string(*fx.h2_dim) + ", computed " + std::to_string(space.h2_dim)});
            }
            if (!fx.h2_basis.empty()) {
                Subspace classes = span_forms(fx.h2_basis, field, v);
                Subspace total = subspace_sum(classes, space.coboundary);
                bool ok = fx.h2_basis.size() == space.h2_dim && classes.dim() == space.h2_dim && total.dim() == 4;
                report.checks.push_back({"h2_basis", vt, ok,
                                         ok ? "complement of the coboundaries"
                                            : "span with coboundaries has dim " + std::to_string(total.dim())});
            }
            check_orbits(fx, base, space, v, vt, report);
        } catch (const Error& err) {
            report.checks.push_back({"instantiate", vt, false, std::string(error_code_name(err.code())) + ": " + err.what()});
        }
    }
    return report;
}

AuditReport distinctness_audit(const Catalog& catalog, int table, const Field& field, std::size_t samples_per_family,
                               std::uint64_t seed, const SearchOptions& options) {
    AuditReport report;
    report.table = table;
    report.field = field;
    for (const CatalogEntry* e : catalog.table(table)) {
        if (!exclusion_text(e->char_exclusions, field).empty()) continue;
        for (const Assignment& v : sample_assignments(catalog, *e, field, samples_per_family, seed)) {
            report.instances.push_back({e->id, assignment_text(e->params, v), instantiate(catalog, e->id, v, field)});
        }
    }
    const auto& inst = report.instances;
    if (inst.size() < 2) return report;
    for (const auto& x : inst)
        if (!options.force && !within_budget(x.pair.dim(), field.modulus())) {
            throw Error(ErrorCode::budget_exceeded, "dimension " + std::to_string(x.pair.dim()) + " over " +
                                                        field_text(field) + " exceeds the search budget");
        }

    std::vector<Fingerprint> prints(inst.size());
    const long count = static_cast<long>(inst.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
    for (long i = 0; i < count; ++i) prints[i] = invariant_fingerprint(inst[i].pair);

    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    for (std::size_t a = 0; a < inst.size(); ++a)
        for (std::size_t b = a + 1; b < inst.size(); ++b)
            if (prints[a] == prints[b]) candidates.emplace_back(a, b);
    report.searches = candidates.size();

    std::vector<std::optional<Matrix>> found(candidates.size());
    SearchOptions inner = options;
    inner.mode = ExecMode::serial;
    const long pairs = static_cast<long>(candidates.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
    for (long k = 0; k < pairs; ++k) {
        auto [a, b] = candidates[k];
        found[k] = are_equivalent_bruteforce(inst[a].pair, inst[b].pair, inner);
    }
    for (std::size_t k = 0; k < candidates.size(); ++k)
        if (found[k]) {
            auto [a, b] = candidates[k];
            report.collisions.push_back({a, b, *found[k], inst[a].id == inst[b].id});
        }
    return report;
}

std::string entry_reports_tsv(const std::vector<EntryReport>& reports) {
    std::ostringstream os;
    os << "id\tfield\tparams\tradical_dim\tradical_ok\tbase_ok\troundtrip_ok\tnote\n";
    for (const auto& r : reports) {
        if (r.samples.empty()) {
            os << r.id << '\t' << field_text(r.field) << "\t-\t-\t-\t-\t-\tskipped: " << r.skipped << '\n';
            continue;
        }
        for (const auto& s : r.samples) {
            os << r.id << '\t' << field_text(r.field) << '\t' << s.values << '\t' << s.radical_dim << '\t'
               << (s.radical_ok ? "pass" : "FAIL") << '\t' << (s.base_ok ? "pass" : "FAIL") << '\t'
               << (s.roundtrip_ok ? "pass" : "FAIL") << '\t' << (s.note.empty() ? "-" : s.note) << '\n';
        }
    }
    return os.str();
}

std::string fixture_reports_tsv(const std::vector<FixtureReport>& reports) {
    std::ostringstream os;
    os << "case\tfield\tparams\tcheck\tresult\tdetail\n";
    for (const auto& r : reports) {
        if (r.checks.empty()) {
            os << r.id << '\t' << field_text(r.field) << "\t-\t-\t-\tskipped: " << r.skipped << '\n';
        }
        for (const auto& c : r.checks) {
            os << r.id << '\t' << field_text(r.field) << '\t' << c.values << '\t' << c.what << '\t'
               << (c.ok ? "pass" : "FAIL") << '\t' << c.detail << '\n';
        }
        for (const auto& n : r.notes) os << r.id << '\t' << field_text(r.field) << "\t-\tnote\tnote\t" << n << '\n';
    }
    return os.str();
}

std::string audit_report_tsv(const AuditReport& report) {
    std::ostringstream os;
    os << "table\tfield\tfirst\tfirst_params\tsecond\tsecond_params\tkind\twitness\n";
    for (const auto& c : report.collisions) {
        const auto& a = report.instances[c.a];
        const auto& b = report.instances[c.b];
        os << report.table << '\t' << field_text(report.field) << '\t' << a.id << '\t' << a.values << '\t' << b.id << '\t'
           << b.values << '\t' << (c.same_family ? "within-family" : "across-families") << '\t'
           << c.witness.to_string() << '\n';
    }
    return os.str();
}

}  // namespace bilpair
