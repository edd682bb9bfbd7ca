#include "bilpair/catalog/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace bilpair {

namespace catalog_data {
const std::vector<std::pair<std::string_view, std::string_view>>& files();
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Splits "keyword rest" at the first blank.
std::pair<std::string_view, std::string_view> keyword(std::string_view line) {
    std::size_t sp = line.find_first_of(" \t");
    if (sp == std::string_view::npos) return {line, {}};
    return {line.substr(0, sp), trim(line.substr(sp + 1))};
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    for (;;) {
        std::size_t at = s.find(sep);
        out.push_back(trim(s.substr(0, at)));
        if (at == std::string_view::npos) return out;
        s = s.substr(at + 1);
    }
}

std::size_t parse_index(std::string_view s, const std::string& where) {
    s = trim(s);
    if (s.size() < 2 || s[0] != 'e' ||
        !std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw Error(ErrorCode::parse_error, where + ": expected e<index>, got '" + std::string(s) + "'");
    }
    return std::stoul(std::string(s.substr(1)));
}

BaseRef parse_base(std::string_view rest) {
    auto [id, args] = keyword(rest);
    BaseRef b;
    b.id = std::string(id);
    if (!args.empty())
        for (auto a : split(args, ',')) b.args.push_back(Expression::parse(a));
    return b;
}

void add_exclusions(std::vector<std::uint32_t>& out, const Expression& e) {
    for (auto p : e.excluded_characteristics()) out.push_back(p);
}

void normalize(std::vector<std::uint32_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

void check_params(const std::vector<std::string>& declared, const Expression& e, const std::string& where) {
    std::vector<std::string> used;
    e.collect_parameters(used);
    for (const auto& u : used)
        if (std::find(declared.begin(), declared.end(), u) == declared.end()) {
            throw Error(ErrorCode::parse_error, where + ": undeclared parameter '" + u + "'");
        }
}

bool excluded(const std::vector<std::uint32_t>& ex, const Field& field) {
    return field.is_prime() && std::find(ex.begin(), ex.end(), field.characteristic()) != ex.end();
}

// Values handed to the base family.
Assignment base_values(const Catalog& catalog, const BaseRef& ref, const Assignment& values, const Field& field,
                       const CatalogEntry*& base) {
    base = &catalog.entry(ref.id);
    if (base->params.size() != ref.args.size()) {
        throw Error(ErrorCode::invalid_input, "base " + ref.id + " takes " + std::to_string(base->params.size()) +
                                                  " arguments, got " + std::to_string(ref.args.size()));
    }
    Assignment out;
    for (std::size_t k = 0; k < ref.args.size(); ++k) out[base->params[k]] = ref.args[k].scalar(field, values);
    return out;
}

void check_constraints(const std::string& id, const std::vector<Inequation>& cs, const Field& field,
                       const Assignment& values) {
    for (const auto& c : cs) {
        bool ok = false;
        try {
            ok = c.holds(field, values);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::division_by_zero) throw;
        }
        if (!ok) throw Error(ErrorCode::constraint_violation, id + ": requires " + c.text);
    }
}

BilinearPair build(const CatalogEntry& e, const Assignment& values, const Field& field) {
    for (const auto& p : e.params)
        if (!values.count(p)) throw Error(ErrorCode::invalid_input, e.id + ": missing value for '" + p + "'");
    for (const auto& [name, v] : values) {
        if (std::find(e.params.begin(), e.params.end(), name) == e.params.end()) {
            throw Error(ErrorCode::invalid_input, e.id + ": unknown parameter '" + name + "'");
        }
    }
    if (excluded(e.char_exclusions, field)) {
        throw Error(ErrorCode::characteristic_excluded,
                    e.id + " is undefined in characteristic " + std::to_string(field.characteristic()));
    }
    check_constraints(e.id, e.constraints, field, values);
    BilinearPair p(e.dim, field);
    try {
        for (const auto& r : e.products) p.set_product(r.i, r.j, r.value.vector(field, values, e.dim));
    } catch (const Error& err) {
        if (err.code() != ErrorCode::division_by_zero) throw;
        throw Error(ErrorCode::constraint_violation, e.id + ": " + err.what());
    }
    return p;
}

// Shared admissibility for entries and fixtures.
bool admissible(const Catalog& catalog, const std::string& id, const std::vector<Inequation>& constraints,
                const std::optional<BaseRef>& base, const std::vector<std::uint32_t>& exclusions,
                const Assignment& values, const Field& field) {
    if (excluded(exclusions, field)) return false;
    try {
        check_constraints(id, constraints, field, values);
        if (base) {
            const CatalogEntry* b = nullptr;
            Assignment bv = base_values(catalog, *base, values, field, b);
            (void)build(*b, bv, field);
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::constraint_violation || e.code() == ErrorCode::division_by_zero ||
            e.code() == ErrorCode::characteristic_excluded)
            return false;
        throw;
    }
    return true;
}

std::vector<Assignment> sample(const std::vector<std::string>& params, const Field& field, std::size_t count,
                               std::uint64_t seed, const std::function<bool(const Assignment&)>& ok) {
    if (!field.is_prime()) throw Error(ErrorCode::enumeration_unsupported, "sampling needs a prime field");
    std::vector<Assignment> out;
    if (params.empty()) {
        if (ok({})) out.push_back({});
        return out;
    }
    std::uint32_t p = field.modulus();
    std::set<std::vector<std::uint32_t>> seen;
    auto offer = [&](const std::vector<std::uint32_t>& digits) {
        if (out.size() >= count || !seen.insert(digits).second) return;
        Assignment a;
        for (std::size_t k = 0; k < params.size(); ++k)
            a[params[k]] = Scalar::from_residue(p, digits[k]);
        if (ok(a)) out.push_back(std::move(a));
    };
    for (std::uint32_t t = 0; t < p && out.size() < count; ++t) {
        std::vector<std::uint32_t> d(params.size());
        for (std::size_t k = 0; k < params.size(); ++k)
            d[k] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(t) * (k + 1)) % p);
        offer(d);
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> digit(0, p - 1);
    for (int attempt = 0; attempt < 4096 && out.size() < count; ++attempt) {
        std::vector<std::uint32_t> d(params.size());
        for (auto& x : d) x = digit(rng);
        offer(d);
    }
    return out;
}

}  // namespace

void Catalog::add_text(std::string_view text, const std::string& source) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    enum class Block { none, entry, fixture } block = Block::none;
    CatalogEntry e;
    Fixture f;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    auto where = [&] { return source + ":" + std::to_string(lineno); };
    auto fail = [&](const std::string& what) { throw Error(ErrorCode::parse_error, where() + ": " + what); };

    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line = raw;
        if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
        line = trim(line);
        if (line.empty()) continue;
        auto [kw, rest] = keyword(line);

        if (block == Block::none) {
            if (kw == "entry" && !rest.empty()) {
                if (has_entry(rest)) fail("duplicate entry " + std::string(rest));
                e = CatalogEntry{};
                e.id = std::string(rest);
                seen.clear();
                block = Block::entry;
            } else if (kw == "case" && !rest.empty()) {
                f = Fixture{};
                f.id = std::string(rest);
                block = Block::fixture;
            } else {
                fail("expected 'entry <id>' or 'case <id>'");
            }
            continue;
        }

        if (kw == "end") {
            if (block == Block::entry) {
                if (e.dim == 0) fail(e.id + ": missing dim");
                if (e.table < 0 || e.table > 4) fail(e.id + ": table must be 0..4");
                if (e.table >= 1 && e.table <= 3 && !e.base) fail(e.id + ": missing base");
                normalize(e.char_exclusions);
                entries_.push_back(std::move(e));
            } else {
                normalize(f.char_exclusions);
                fixtures_.push_back(std::move(f));
            }
            block = Block::none;
            continue;
        }

        if (block == Block::entry) {
            if (kw == "table") {
                e.table = std::stoi(std::string(rest));
            } else if (kw == "label") {
                e.label = std::string(rest);
            } else if (kw == "dim") {
                e.dim = std::stoul(std::string(rest));
            } else if (kw == "param") {
                e.params.emplace_back(rest);
            } else if (kw == "domain") {
                e.domains.emplace_back(rest);
            } else if (kw == "require") {
                e.constraints.push_back(Inequation::parse(rest));
                for (const auto& [a, b] : e.constraints.back().alternatives) {
                    check_params(e.params, a, where());
                    check_params(e.params, b, where());
                }
            } else if (kw == "base") {
                e.base = parse_base(rest);
                for (const auto& a : e.base->args) {
                    check_params(e.params, a, where());
                    add_exclusions(e.char_exclusions, a);
                }
            } else if (auto eq = line.find('='); eq != std::string_view::npos && line[0] == 'e') {
                std::string_view lhs = trim(line.substr(0, eq));
                auto star = lhs.find('*');
                if (star == std::string_view::npos) fail("expected e<i>*e<j> on the left");
                std::size_t i = parse_index(lhs.substr(0, star), where());
                std::size_t j = parse_index(lhs.substr(star + 1), where());
                if (e.dim == 0) fail("product before dim");
                if (i < 1 || j < 1 || i > e.dim || j > e.dim) {
                    throw Error(ErrorCode::index_out_of_range, where() + ": index outside 1.." + std::to_string(e.dim));
                }
                if (!seen.insert({i, j}).second) fail("duplicate product");
                ProductRule r{i - 1, j - 1, Expression::parse(trim(line.substr(eq + 1)))};
                check_params(e.params, r.value, where());
                add_exclusions(e.char_exclusions, r.value);
                e.products.push_back(std::move(r));
            } else {
                fail("unknown line in entry " + e.id);
            }
            continue;
        }

        // case block
        if (kw == "label") {
            f.label = std::string(rest);
        } else if (kw == "base") {
            f.base = parse_base(rest);
        } else if (kw == "param") {
            f.params.emplace_back(rest);
        } else if (kw == "require") {
            f.constraints.push_back(Inequation::parse(rest));
        } else if (kw == "coboundary" || kw == "h2") {
            Expression x = Expression::parse(rest);
            check_params(f.params, x, where());
            add_exclusions(f.char_exclusions, x);
            (kw == "coboundary" ? f.coboundary : f.h2_basis).push_back(std::move(x));
        } else if (kw == "h2dim") {
            f.h2_dim = std::stoul(std::string(rest));
        } else if (kw == "orbits") {
            auto colon = rest.find(':');
            if (colon == std::string_view::npos) fail("expected 'orbits <s> [params] : rows'");
            std::istringstream head{std::string(rest.substr(0, colon))};
            OrbitFamily fam;
            fam.text = std::string(trim(rest.substr(colon + 1)));
            head >> fam.s;
            std::string name;
            while (head >> name) fam.free_params.push_back(name);
            std::vector<std::string> scope = f.params;
            scope.insert(scope.end(), fam.free_params.begin(), fam.free_params.end());
            for (auto row : split(rest.substr(colon + 1), ';')) {
                fam.rows.push_back(Expression::parse(row));
                check_params(scope, fam.rows.back(), where());
            }
            if (fam.s == 0 || fam.rows.size() != fam.s) fail("orbit family needs s rows");
            f.orbits.push_back(std::move(fam));
        } else {
            fail("unknown line in case " + f.id);
        }
    }
    if (block != Block::none) throw Error(ErrorCode::parse_error, source + ": missing 'end'");
    for (const auto& x : fixtures_)
        for (const auto& a : x.base.args) check_params(x.params, a, source + ": case " + x.id);
}

void Catalog::add_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::invalid_input, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    add_text(ss.str(), path);
}

const Catalog& Catalog::builtin() {
    static const Catalog c = [] {
        Catalog out;
        for (const auto& [name, text] : catalog_data::files()) out.add_text(text, std::string(name));
        return out;
    }();
    return c;
}

bool Catalog::has_entry(std::string_view id) const {
    return std::any_of(entries_.begin(), entries_.end(), [&](const CatalogEntry& e) { return e.id == id; });
}

const CatalogEntry& Catalog::entry(std::string_view id) const {
    for (const auto& e : entries_)
        if (e.id == id) return e;
    throw Error(ErrorCode::unknown_id, "unknown catalog id '" + std::string(id) + "'");
}

const Fixture& Catalog::fixture(std::string_view id) const {
    for (const auto& f : fixtures_)
        if (f.id == id) return f;
    throw Error(ErrorCode::unknown_id, "unknown fixture '" + std::string(id) + "'");
}

std::vector<const CatalogEntry*> Catalog::table(int t) const {
    std::vector<const CatalogEntry*> out;
    for (const auto& e : entries_)
        if (e.table == t) out.push_back(&e);
    return out;
}

void Catalog::replace(CatalogEntry e) {
    for (auto& x : entries_)
        if (x.id == e.id) {
            x = std::move(e);
            return;
        }
    throw Error(ErrorCode::unknown_id, "unknown catalog id '" + e.id + "'");
}

BilinearPair instantiate(const Catalog& catalog, std::string_view id, const Assignment& values, const Field& field) {
    const CatalogEntry& e = catalog.entry(id);
    BilinearPair p = build(e, values, field);
    if (e.base) (void)instantiate_base(catalog, e, values, field);
    return p;
}

BilinearPair instantiate(std::string_view id, const Assignment& values, const Field& field) {
    return instantiate(Catalog::builtin(), id, values, field);
}

BilinearPair instantiate_base(const Catalog& catalog, const CatalogEntry& e, const Assignment& values,
                              const Field& field) {
    if (!e.base) throw Error(ErrorCode::invalid_input, e.id + " has no base");
    const CatalogEntry* b = nullptr;
    Assignment bv;
    try {
        bv = base_values(catalog, *e.base, values, field, b);
    } catch (const Error& err) {
        if (err.code() != ErrorCode::division_by_zero) throw;
        throw Error(ErrorCode::characteristic_excluded, e.id + ": " + err.what());
    }
    try {
        return build(*b, bv, field);
    } catch (const Error& err) {
        if (err.code() != ErrorCode::constraint_violation) throw;
        throw Error(ErrorCode::constraint_violation, e.id + " via base " + err.what());
    }
}

bool is_admissible(const Catalog& catalog, const CatalogEntry& e, const Assignment& values, const Field& field) {
    return admissible(catalog, e.id, e.constraints, e.base, e.char_exclusions, values, field);
}

std::vector<Assignment> sample_assignments(const Catalog& catalog, const CatalogEntry& e, const Field& field,
                                           std::size_t count, std::uint64_t seed) {
    return sample(e.params, field, count, seed,
                  [&](const Assignment& a) { return is_admissible(catalog, e, a, field); });
}

std::vector<Assignment> sample_assignments(const Catalog& catalog, const Fixture& f, const Field& field,
                                           std::size_t count, std::uint64_t seed) {
    return sample(f.params, field, count, seed, [&](const Assignment& a) {
        return admissible(catalog, f.id, f.constraints, f.base, f.char_exclusions, a, field);
    });
}

std::string assignment_text(const std::vector<std::string>& params, const Assignment& values) {
    std::string out;
    for (const auto& p : params) {
        auto it = values.find(p);
        if (it == values.end()) continue;
        if (!out.empty()) out += ",";
        out += p + "=" + it->second.to_string();
    }
    return out.empty() ? "-" : out;
}

}  // namespace bilpair
