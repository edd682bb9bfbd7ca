#include "bilpair/classify/classify.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "bilpair/exactlin/enumerate.hpp"
#include "bilpair/parallel.hpp"

namespace bilpair {

namespace {

using Residues = std::vector<std::uint32_t>;

void require_prime(const BilinearPair& p) {
    if (!p.field().is_prime()) throw Error(ErrorCode::enumeration_unsupported, "classification needs a prime field");
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

// Reduced row echelon form in place; rows x cols, row-major.
void rref_mod(Residues& m, std::size_t rows, std::size_t cols, std::uint32_t p) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t k = 0; k < cols; ++k) std::swap(m[piv * cols + k], m[r * cols + k]);
        std::uint64_t inv = inv_mod(m[r * cols + c], p);
        for (std::size_t k = 0; k < cols; ++k) m[r * cols + k] = static_cast<std::uint32_t>(m[r * cols + k] * inv % p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i * cols + c] == 0) continue;
            std::uint64_t f = p - m[i * cols + c];
            for (std::size_t k = 0; k < cols; ++k)
                m[i * cols + k] = static_cast<std::uint32_t>((m[i * cols + k] + f * m[r * cols + k]) % p);
        }
        ++r;
    }
}

Residues residues_of(const Matrix& m) {
    Residues out;
    out.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j).residue());
    return out;
}

std::string key_of(const Residues& r) {
    std::string k;
    k.reserve(r.size() * 2);
    for (std::uint32_t x : r) {
        k.push_back(static_cast<char>(x & 0xFF));
        k.push_back(static_cast<char>(x >> 8));
    }
    return k;
}

std::size_t overlap_dim(const Subspace& rad, const Cocycle& theta, const Field& f) {
    return subspace_intersect(rad, form_radical(theta, f)).dim();
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

template <class F>
void run_indexed(std::size_t count, ExecMode mode, F&& body) {
    const long n = static_cast<long>(count);
    if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(worker_count())
        for (long i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
    } else {
        for (long i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
    }
}

}  // namespace

std::vector<TsElement> enumerate_ts(const BilinearPair& base, std::size_t s, const ClassifyOptions& options) {
    require_prime(base);
    CohomologySpace space = cohomology(base);
    if (s < 1 || s > space.h2_dim) {
        throw Error(ErrorCode::out_of_range, "s must lie in 1.." + std::to_string(space.h2_dim));
    }
    GrassmannianStream grass(space.h2_dim, s, base.field());
    if (!options.force && grass.size() > options.max_subspaces) {
        throw Error(ErrorCode::budget_exceeded, std::to_string(grass.size()) + " subspaces exceed the budget");
    }
    Subspace rad = radical(base);
    const Field& f = base.field();
    std::size_t n = base.dim();
    std::vector<std::optional<TsElement>> slots(grass.size());
    std::atomic<bool> unstable{false};
    run_indexed(grass.size(), options.mode, [&](std::size_t idx) {
        Subspace sub = grass.at(idx);
        std::vector<BilinearForm> comps;
        for (std::size_t r = 0; r < s; ++r) comps.push_back(space.from_coordinates(sub.vector(r)));
        Cocycle cert(n, comps);
        std::size_t overlap = overlap_dim(rad, cert, f);
        // Shifting every component by a coboundary must not change the filter.
        if (n > 0) {
            Cocycle shifted = cert;
            for (std::size_t r = 0; r < s; ++r)
                shifted.components[r] = shifted.components[r] + coboundary(base, unit_vector(f, n, r % n));
            if (overlap_dim(rad, shifted, f) != overlap) unstable = true;
        }
        if (overlap == 0) slots[idx] = TsElement{s, std::move(sub), std::move(cert)};
    });
    if (unstable) throw Error(ErrorCode::invalid_input, "internal: T_s filter depends on the representative");
    std::vector<TsElement> out;
    for (auto& e : slots)
        if (e) out.push_back(std::move(*e));
    return out;
}

OrbitReport orbit_partition(const BilinearPair& base, std::size_t s, const AutomorphismGroup& aut,
                            const ClassifyOptions& options) {
    if (!(aut.base == base)) throw Error(ErrorCode::invalid_input, "automorphism group belongs to another pair");
    std::vector<TsElement> ts = enumerate_ts(base, s, options);
    CohomologySpace space = cohomology(base);
    std::size_t h = space.h2_dim;
    std::uint32_t p = base.field().modulus();

    std::unordered_map<std::string, std::size_t> index;
    std::vector<Residues> bases(ts.size());
    for (std::size_t t = 0; t < ts.size(); ++t) {
        bases[t] = residues_of(ts[t].subspace.basis());
        index.emplace(key_of(bases[t]), t);
    }
    std::vector<Residues> actions;
    for (const Matrix& phi : aut.elements) actions.push_back(residues_of(h2_action_matrix(space, phi)));

    const std::size_t g = actions.size();
    std::vector<std::size_t> image(ts.size() * g);
    std::atomic<bool> unstable{false};
    run_indexed(ts.size(), options.mode, [&](std::size_t t) {
        Residues prod(s * h);
        for (std::size_t a = 0; a < g; ++a) {
            const Residues& m = actions[a];
            for (std::size_t r = 0; r < s; ++r)
                for (std::size_t c = 0; c < h; ++c) {
                    std::uint64_t acc = 0;
                    for (std::size_t k = 0; k < h; ++k) acc += std::uint64_t(bases[t][r * h + k]) * m[k * h + c];
                    prod[r * h + c] = static_cast<std::uint32_t>(acc % p);
                }
            rref_mod(prod, s, h, p);
            auto it = index.find(key_of(prod));
            if (it == index.end()) {
                unstable = true;
                image[t * g + a] = t;
            } else {
                image[t * g + a] = it->second;
            }
        }
    });
    if (unstable) throw Error(ErrorCode::invalid_input, "internal: automorphism maps T_s outside T_s");

    std::vector<std::size_t> parent(ts.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t t = 0; t < ts.size(); ++t)
        for (std::size_t a = 0; a < g; ++a) {
            std::size_t x = find_root(parent, t), y = find_root(parent, image[t * g + a]);
            if (x != y) parent[std::max(x, y)] = std::min(x, y);
        }

    std::unordered_map<std::size_t, std::pair<std::size_t, std::size_t>> groups;  // root -> (min member, size)
    for (std::size_t t = 0; t < ts.size(); ++t) {
        std::size_t root = find_root(parent, t);
        auto [it, fresh] = groups.try_emplace(root, t, 0);
        auto& [best, size] = it->second;
        ++size;
        if (!fresh && ts[t].subspace.basis() < ts[best].subspace.basis()) best = t;
    }
    OrbitReport report;
    report.base = base;
    report.s = s;
    report.total = ts.size();
    for (const auto& [root, info] : groups) report.orbits.push_back(Orbit{ts[info.first], info.second});
    std::sort(report.orbits.begin(), report.orbits.end(), [](const Orbit& x, const Orbit& y) {
        return x.representative.subspace.basis() < y.representative.subspace.basis();
    });
    return report;
}

std::vector<BilinearPair> representatives(const OrbitReport& report) {
    std::vector<BilinearPair> out;
    for (const Orbit& o : report.orbits) {
        BilinearPair e = build_extension(report.base, o.representative.certificate);
        if (radical_of_extension(report.base, o.representative.certificate).dim() != report.s) {
            throw Error(ErrorCode::invalid_input, "internal: representative radical is not W");
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<BilinearPair> representatives(const BilinearPair& base, std::size_t s, const ClassifyOptions& options) {
    require_prime(base);
    SearchOptions so{options.force, options.mode};
    return representatives(orbit_partition(base, s, automorphism_group(base, so), options));
}

ClassificationReport classify_codim2(const std::vector<std::pair<std::string, BilinearPair>>& bases,
                                     std::size_t total_dim, const ClassifyOptions& options) {
    ClassificationReport report;
    report.total_dim = total_dim;
    if (total_dim < 2) throw Error(ErrorCode::out_of_range, "total dimension must be at least 2");
    for (const auto& [name, base] : bases) {
        if (base.dim() != 2) throw Error(ErrorCode::invalid_input, "base " + name + " is not 2-dimensional");
        require_prime(base);
        if (!(base.field() == bases.front().second.field())) {
            throw Error(ErrorCode::field_mismatch, "bases are over different fields");
        }
    }
    std::size_t rad_dim = total_dim - 2;
    if (rad_dim > 4) {
        report.diagnostics.push_back("n=" + std::to_string(total_dim) + ": every such pair has ≥ " +
                                     std::to_string(rad_dim - 4) +
                                     " radical components (H^2 of a 2-dimensional base has dimension at most 4)");
        return report;
    }
    if (bases.empty()) return report;
    const Field& f = bases.front().second.field();
    if (!options.force && !within_budget(total_dim, f.modulus())) {
        throw Error(ErrorCode::budget_exceeded, "dimension " + std::to_string(total_dim) + " over " + f.to_string() +
                                                    " exceeds the equivalence budget");
    }
    SearchOptions so{true, options.mode};

    std::vector<Fingerprint> prints;
    auto offer = [&](ClassifiedPair c) {
        Fingerprint fp = invariant_fingerprint(c.pair);
        for (std::size_t k = 0; k < report.pairs.size(); ++k) {
            if (!(prints[k] == fp)) continue;
            if (are_equivalent_bruteforce(report.pairs[k].pair, c.pair, so)) {
                ++report.duplicates;
                return;
            }
        }
        prints.push_back(std::move(fp));
        report.pairs.push_back(std::move(c));
    };

    for (const auto& [name, base] : bases) {
        std::size_t before = report.pairs.size();
        if (radical(base).dim() == 0) offer({name, 0, 0, rad_dim, add_radical_components(base, rad_dim)});
        std::size_t h = cohomology(base).h2_dim;
        if (h > 0 && rad_dim > 0) {
            AutomorphismGroup aut = automorphism_group(base, so);
            for (std::size_t s = 1; s <= std::min(h, rad_dim); ++s) {
                OrbitReport orbits = orbit_partition(base, s, aut, options);
                std::vector<BilinearPair> reps = representatives(orbits);
                for (std::size_t i = 0; i < reps.size(); ++i)
                    offer({name, s, i, rad_dim - s, add_radical_components(reps[i], rad_dim - s)});
            }
        }
        report.per_base.emplace_back(name, report.pairs.size() - before);
    }
    return report;
}

std::string orbit_report_tsv(const OrbitReport& report, const std::string& base_name, bool header) {
    std::ostringstream os;
    if (header) os << "base\ts\torbit_index\torbit_size\trepresentative_subspace_rref\n";
    for (std::size_t i = 0; i < report.orbits.size(); ++i) {
        os << base_name << '\t' << report.s << '\t' << i << '\t' << report.orbits[i].size << '\t'
           << report.orbits[i].representative.subspace.basis().to_string() << '\n';
    }
    return os.str();
}

}  // namespace bilpair
