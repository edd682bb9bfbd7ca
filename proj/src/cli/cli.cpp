#include "bilpair/cli/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "bilpair/catalog/verify.hpp"
#include "bilpair/classify/classify.hpp"
#include "bilpair/cohom/cohomology.hpp"
#include "bilpair/pair/bp_format.hpp"

namespace bilpair::cli {

namespace {

struct Config {
    std::vector<std::string> inputs;
    std::optional<std::uint32_t> field;
    bool force = false;
    std::string out_dir;
    std::string theta;
    std::size_t s = 0;
    int table = -1;
    std::uint32_t verify_field = 3;
    std::size_t samples = 3;
    std::uint64_t seed = 1;
};

BilinearPair load(const std::string& path, const std::optional<std::uint32_t>& field) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::invalid_input, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    if (!field) return parse_bp(ss.str());
    // Swap the header for the requested prime field.
    std::istringstream lines(ss.str());
    std::string line, text;
    bool replaced = false;
    while (std::getline(lines, line)) {
        std::string_view v = line;
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
        if (!replaced && v.rfind("field", 0) == 0) {
            text += "field p=" + std::to_string(*field) + "\n";
            replaced = true;
        } else {
            text += line + "\n";
        }
    }
    return parse_bp(text);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream o(path);
    if (!o) throw Error(ErrorCode::invalid_input, "cannot write " + path.string());
    o << text;
}

std::string radical_text(const BilinearPair& p) {
    Subspace r = radical(p);
    std::string out = "dim " + std::to_string(r.dim()) + "; basis ";
    if (r.dim() == 0) return out + "-";
    for (std::size_t i = 0; i < r.dim(); ++i) out += (i ? ", " : "") + basis_vector_text(r.vector(i));
    return out;
}

Cocycle parse_theta(const std::string& text, std::size_t n, const Field& field) {
    std::vector<BilinearForm> comps;
    std::string_view rest = text;
    for (;;) {
        std::size_t cut = rest.find(';');
        Expression e = Expression::parse(rest.substr(0, cut));
        comps.push_back(BilinearForm::from_flat(n, e.vector(field, {}, n, true)));
        if (cut == std::string_view::npos) break;
        rest = rest.substr(cut + 1);
    }
    return Cocycle(n, comps);
}

int cmd_radical(const Config& c, std::ostream& out) {
    out << radical_text(load(c.inputs.at(0), c.field)) << '\n';
    return exit_ok;
}

int cmd_h2(const Config& c, std::ostream& out) {
    BilinearPair p = load(c.inputs.at(0), c.field);
    CohomologySpace h = cohomology(p);
    out << "coboundary_dim " << h.coboundary.dim() << '\n';
    for (std::size_t i = 0; i < h.coboundary.dim(); ++i)
        out << "coboundary " << BilinearForm::from_flat(p.dim(), h.coboundary.vector(i)).to_string() << '\n';
    out << "h2_dim " << h.h2_dim << '\n';
    for (const auto& r : h.representatives) out << "class " << r.to_string() << '\n';
    return exit_ok;
}

int cmd_equiv(const Config& c, std::ostream& out) {
    BilinearPair a = load(c.inputs.at(0), c.field), b = load(c.inputs.at(1), c.field);
    SearchOptions so;
    so.force = c.force;
    auto w = are_equivalent_bruteforce(a, b, so);
    out << (w ? w->to_string() : std::string("inequivalent")) << '\n';
    return exit_ok;
}

int cmd_aut(const Config& c, std::ostream& out) {
    BilinearPair p = load(c.inputs.at(0), c.field);
    SearchOptions so;
    so.force = c.force;
    AutomorphismGroup g = automorphism_group(p, so);
    out << "order " << g.order() << '\n';
    for (const auto& m : g.elements) out << m.to_string() << '\n';
    return exit_ok;
}

int cmd_extend(const Config& c, std::ostream& out) {
    BilinearPair base = load(c.inputs.at(0), c.field);
    BilinearPair ext = build_extension(base, parse_theta(c.theta, base.dim(), base.field()));
    if (c.out_dir.empty()) {
        out << serialize_bp(ext);
    } else {
        write_bp_file(c.out_dir, ext);
        out << "wrote " << c.out_dir << '\n';
    }
    return exit_ok;
}

int cmd_classify(const Config& c, std::ostream& out) {
    BilinearPair base = load(c.inputs.at(0), c.field);
    SearchOptions so;
    so.force = c.force;
    ClassifyOptions co;
    co.force = c.force;
    OrbitReport report = orbit_partition(base, c.s, automorphism_group(base, so), co);
    std::string name = std::filesystem::path(c.inputs.at(0)).stem().string();
    std::string tsv = orbit_report_tsv(report, name);
    if (c.out_dir.empty()) {
        out << tsv;
        return exit_ok;
    }
    std::filesystem::path dir(c.out_dir);
    std::filesystem::create_directories(dir);
    write_text(dir / (name + "_s" + std::to_string(c.s) + "_orbits.tsv"), tsv);
    std::vector<BilinearPair> reps = representatives(report);
    for (std::size_t k = 0; k < reps.size(); ++k)
        write_bp_file((dir / (name + "_s" + std::to_string(c.s) + "_" + std::to_string(k) + ".bp")).string(), reps[k]);
    out << report.orbits.size() << " orbits, " << report.total << " subspaces; wrote " << dir.string() << '\n';
    return exit_ok;
}

int cmd_verify(const Config& c, std::ostream& out) {
    if (!is_prime_number(c.verify_field)) throw CLI::ValidationError("--field", "must be prime");
    const Catalog& cat = Catalog::builtin();
    Field field = Field::prime(c.verify_field);
    std::vector<int> tables = c.table >= 0 ? std::vector<int>{c.table} : std::vector<int>{1, 2, 3, 0, 4};

    std::vector<EntryReport> entries;
    std::vector<FixtureReport> fixtures;
    std::vector<AuditReport> audits;
    for (int t : tables)
        for (const auto* e : cat.table(t)) entries.push_back(verify_entry(cat, e->id, field, c.samples, c.seed));
    if (c.table < 0 || c.table == 4)
        for (const auto& f : cat.fixtures()) fixtures.push_back(verify_fixture(cat, f.id, field, c.samples, c.seed));
    SearchOptions so;
    so.force = c.force;
    for (int t : tables) audits.push_back(distinctness_audit(cat, t, field, c.samples, c.seed, so));

    std::size_t entry_fail = 0, entry_skip = 0, fixture_fail = 0, notes = 0, collisions = 0;
    for (const auto& r : entries) {
        entry_fail += !r.passed();
        entry_skip += r.samples.empty();
    }
    for (const auto& r : fixtures) {
        fixture_fail += !r.passed();
        notes += r.notes.size();
    }
    std::string audit_tsv;
    for (const auto& a : audits) {
        collisions += a.collisions.size();
        std::string t = audit_report_tsv(a);
        audit_tsv += audit_tsv.empty() ? t : t.substr(t.find('\n') + 1);
    }
    std::string entry_tsv = entry_reports_tsv(entries), fixture_tsv = fixture_reports_tsv(fixtures);
    if (c.out_dir.empty()) {
        out << entry_tsv;
        if (!fixtures.empty()) out << '\n' << fixture_tsv;
        out << '\n' << audit_tsv;
    } else {
        std::filesystem::path dir(c.out_dir);
        std::filesystem::create_directories(dir);
        write_text(dir / "entries.tsv", entry_tsv);
        if (!fixtures.empty()) write_text(dir / "fixtures.tsv", fixture_tsv);
        write_text(dir / "audit.tsv", audit_tsv);
    }
    out << "# entries " << entries.size() << " failed " << entry_fail << " skipped " << entry_skip << "; fixtures "
        << fixtures.size() << " failed " << fixture_fail << " notes " << notes << "; audit collisions " << collisions
        << " over F" << c.verify_field << '\n';
    return entry_fail + fixture_fail == 0 ? exit_ok : exit_verification_failed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with bilinear pairs", "bilpair"};
    app.require_subcommand(1, 1);
    Config c;
    std::optional<std::uint32_t> field;

    auto input = [&](CLI::App* sub, std::size_t count) {
        sub->add_option("inputs", c.inputs, "Input .bp files")->required()->expected(static_cast<int>(count));
        sub->add_option("--field", field, "Read the inputs over F_p instead of the file's field");
    };
    auto* radical_cmd = app.add_subcommand("radical", "Radical dimension and RREF basis");
    input(radical_cmd, 1);
    auto* h2_cmd = app.add_subcommand("h2", "Coboundaries, H^2 dimension and class representatives");
    input(h2_cmd, 1);
    auto* equiv_cmd = app.add_subcommand("equiv", "Witness matrix or 'inequivalent'");
    input(equiv_cmd, 2);
    equiv_cmd->add_flag("--force", c.force, "Ignore the search budget");
    auto* aut_cmd = app.add_subcommand("aut", "Automorphism group order and elements");
    input(aut_cmd, 1);
    aut_cmd->add_flag("--force", c.force, "Ignore the search budget");
    auto* extend_cmd = app.add_subcommand("extend", "Build the extension by a cocycle");
    input(extend_cmd, 1);
    extend_cmd->add_option("--theta", c.theta, "Components separated by ';', e.g. \"D22; D12 + 2*D21\"")->required();
    extend_cmd->add_option("--out", c.out_dir, "Output .bp file");
    auto* classify_cmd = app.add_subcommand("classify", "Orbits of T_s and representative extensions");
    input(classify_cmd, 1);
    classify_cmd->add_option("--s", c.s, "Dimension of the extending space")->required();
    classify_cmd->add_option("--out", c.out_dir, "Directory for the TSV report and .bp files");
    classify_cmd->add_flag("--force", c.force, "Ignore budgets");
    auto* verify_cmd = app.add_subcommand("verify-tables", "Check the catalog tables and fixtures");
    verify_cmd->add_option("--table", c.table, "Table 1-4, or 0 for the six-dimensional endpoint")->check(CLI::Range(0, 4));
    verify_cmd->add_option("--field", c.verify_field, "Prime field (default 3)");
    verify_cmd->add_option("--samples", c.samples, "Parameter samples per family (default 3)");
    verify_cmd->add_option("--seed", c.seed, "Sampling seed (default 1)");
    verify_cmd->add_option("--out", c.out_dir, "Directory for TSV reports");
    verify_cmd->add_flag("--force", c.force, "Ignore the search budget in the audit");

    try {
        app.parse(argc, argv);
        if (field) {
            if (!is_prime_number(*field)) throw CLI::ValidationError("--field", "must be prime");
            c.field = field;
        }
        if (*radical_cmd) return cmd_radical(c, out);
        if (*h2_cmd) return cmd_h2(c, out);
        if (*equiv_cmd) return cmd_equiv(c, out);
        if (*aut_cmd) return cmd_aut(c, out);
        if (*extend_cmd) return cmd_extend(c, out);
        if (*classify_cmd) return cmd_classify(c, out);
        return cmd_verify(c, out);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    } catch (const Error& e) {
        err << "error (" << error_code_name(e.code()) << "): " << e.what() << '\n';
        return e.code() == ErrorCode::budget_exceeded ? exit_budget : exit_usage;
    }
}

}  // namespace bilpair::cli
