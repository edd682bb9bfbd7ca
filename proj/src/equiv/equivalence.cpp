#include "bilpair/equiv/equivalence.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>

#include "bilpair/exactlin/enumerate.hpp"
#include "bilpair/parallel.hpp"
#include "fp_kernel.hpp"

namespace bilpair {

namespace {

void require_prime_field(const BilinearPair& p) {
    if (!p.field().is_prime()) {
        throw Error(ErrorCode::enumeration_unsupported, "exhaustive search needs a prime field");
    }
}

void require_budget(const BilinearPair& p, bool force) {
    if (!force && !within_budget(p.dim(), p.field().modulus())) {
        throw Error(ErrorCode::budget_exceeded, "dimension " + std::to_string(p.dim()) + " over " +
                                                    p.field().to_string() + " exceeds the enumeration budget");
    }
}

std::size_t left_map_rank(const BilinearPair& p, bool left) {
    // Rank of v -> L_v (or R_v) as a map V -> End(V).
    std::size_t n = p.dim();
    Matrix m(n * n, n, p.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m(j * n + k, i) = left ? p.at(i, j, k) : p.at(j, i, k);
    return rank(m);
}

std::size_t annihilator_dim(const BilinearPair& p, bool left) {
    // {v : v e_j = 0 for all j} (left) or {v : e_j v = 0} (right).
    std::size_t n = p.dim();
    Matrix m(n * n, n, p.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m(j * n + k, i) = left ? p.at(i, j, k) : p.at(j, i, k);
    return n - rank(m);
}

// First solution over the first-column partition. Each worker scans its own
// first columns; the minimum index among successes wins.
std::optional<std::vector<std::uint64_t>> first_solution(const detail::GlSearch& search, ExecMode mode) {
    const auto& first = search.first_column_candidates();
    const long count = static_cast<long>(first.size());
    std::vector<std::optional<std::vector<std::uint64_t>>> found(first.size());
    std::atomic<long> best{count};
    auto body = [&](long t) {
        if (t > best.load()) return;
        search.run(
            static_cast<std::size_t>(t),
            [&](const std::vector<std::uint64_t>& cols) {
                found[t] = cols;
                return false;
            },
            [&] { return best.load() < t; });
        if (found[t]) {
            long cur = best.load();
            while (t < cur && !best.compare_exchange_weak(cur, t)) {
            }
        }
    };
    if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
        for (long t = 0; t < count; ++t) body(t);
    } else {
        for (long t = 0; t < count; ++t) {
            body(t);
            if (found[t]) break;
        }
    }
    long b = best.load();
    if (b == count) return std::nullopt;
    return found[b];
}

std::vector<std::vector<std::uint64_t>> all_solutions(const detail::GlSearch& search, ExecMode mode) {
    const auto& first = search.first_column_candidates();
    const long count = static_cast<long>(first.size());
    std::vector<std::vector<std::vector<std::uint64_t>>> parts(first.size());
    auto body = [&](long t) {
        search.run(static_cast<std::size_t>(t), [&](const std::vector<std::uint64_t>& cols) {
            parts[t].push_back(cols);
            return true;
        });
    };
    if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
        for (long t = 0; t < count; ++t) body(t);
    } else {
        for (long t = 0; t < count; ++t) body(t);
    }
    std::vector<std::vector<std::uint64_t>> out;
    for (auto& part : parts)
        for (auto& cols : part) out.push_back(std::move(cols));
    return out;
}

std::optional<Matrix> search_equivalence(const BilinearPair& a, const BilinearPair& b, bool prune, bool force,
                                         ExecMode mode) {
    if (!(a.field() == b.field())) throw Error(ErrorCode::field_mismatch, "pairs are over different fields");
    require_prime_field(a);
    require_budget(a, force);
    if (a.dim() != b.dim()) return std::nullopt;
    if (prune && invariant_fingerprint(a) != invariant_fingerprint(b)) return std::nullopt;
    detail::GlSearch search(a, b, prune);
    auto cols = first_solution(search, mode);
    if (!cols) return std::nullopt;
    Matrix phi = search.to_matrix(*cols, a.field());
    if (!is_witness(a, b, phi)) throw Error(ErrorCode::invalid_input, "internal: witness failed exact verification");
    return phi;
}

AutomorphismGroup collect_group(const BilinearPair& p, bool prune, ExecMode mode) {
    detail::GlSearch search(p, p, prune);
    AutomorphismGroup g{p, {}};
    for (const auto& cols : all_solutions(search, mode)) g.elements.push_back(search.to_matrix(cols, p.field()));
    return g;
}

}  // namespace

std::string Fingerprint::to_string() const {
    std::ostringstream os;
    os << "dim=" << dim << " rad=" << radical_dim << " prod=" << product_dim << " rad_prod=" << radical_product_dim
       << " lann=" << left_annihilator_dim << " rann=" << right_annihilator_dim << " lrank=" << left_map_rank
       << " rrank=" << right_map_rank << " profile=" << profile.size();
    return os.str();
}

Fingerprint invariant_fingerprint(const BilinearPair& p) {
    Fingerprint f;
    f.dim = p.dim();
    Subspace r = radical(p);
    Subspace q = product_space(p);
    f.radical_dim = r.dim();
    f.product_dim = q.dim();
    f.radical_product_dim = subspace_intersect(r, q).dim();
    f.left_annihilator_dim = annihilator_dim(p, true);
    f.right_annihilator_dim = annihilator_dim(p, false);
    f.left_map_rank = left_map_rank(p, true);
    f.right_map_rank = left_map_rank(p, false);
    if (p.field().is_prime() && p.dim() > 0) {
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < p.dim() && total <= (1u << 16); ++i) total *= p.field().modulus();
        if (total <= (1u << 16)) {
            detail::FpPair fp = detail::FpPair::from(p);
            detail::InvariantSubspaces inv(p);
            detail::VectorTable table(p.dim(), p.field().modulus());
            std::map<std::uint64_t, std::uint64_t> hist;
            for (std::uint64_t code = 1; code < table.size(); ++code)
                ++hist[detail::vector_signature(fp, inv, table.at(code))];
            f.profile.assign(hist.begin(), hist.end());
        }
    }
    return f;
}

bool within_budget(std::size_t n, std::uint32_t p) {
    return (n <= 5 && p <= 3) || (n <= 3 && p <= 7) || (n <= 6 && p == 2);
}

bool is_witness(const BilinearPair& a, const BilinearPair& b, const Matrix& phi) {
    if (a.dim() != b.dim() || phi.rows() != a.dim() || phi.cols() != a.dim() || !is_invertible(phi)) return false;
    return apply_change_of_basis(a, phi) == b;
}

std::optional<Matrix> are_equivalent_bruteforce(const BilinearPair& a, const BilinearPair& b,
                                                const SearchOptions& options) {
    return search_equivalence(a, b, true, options.force, options.mode);
}

std::optional<Matrix> equivalence_sweep(const BilinearPair& a, const BilinearPair& b, ExecMode mode) {
    return search_equivalence(a, b, false, false, mode);
}

bool AutomorphismGroup::contains(const Matrix& phi) const {
    return std::find(elements.begin(), elements.end(), phi) != elements.end();
}

AutomorphismGroup automorphism_group(const BilinearPair& p, const SearchOptions& options) {
    require_prime_field(p);
    require_budget(p, options.force);
    AutomorphismGroup g = collect_group(p, true, options.mode);
    if (!check_group_axioms(g)) throw Error(ErrorCode::invalid_input, "internal: automorphisms do not form a group");
    return g;
}

AutomorphismGroup automorphism_group_sweep(const BilinearPair& p, ExecMode mode) {
    require_prime_field(p);
    require_budget(p, false);
    return collect_group(p, false, mode);
}

bool check_group_axioms(const AutomorphismGroup& g) {
    std::size_t n = g.base.dim();
    const Field& f = g.base.field();
    std::vector<Matrix> sorted = g.elements;
    std::sort(sorted.begin(), sorted.end());
    auto has = [&](const Matrix& m) { return std::binary_search(sorted.begin(), sorted.end(), m); };
    if (!has(Matrix::identity(n, f))) return false;
    for (const auto& x : g.elements) {
        if (!is_witness(g.base, g.base, x)) return false;
        if (!has(inverse(x))) return false;
    }
    if (g.elements.size() <= 400) {
        for (const auto& x : g.elements)
            for (const auto& y : g.elements)
                if (!has(x * y)) return false;
    } else {
        // Closure on a deterministic sample of products.
        for (std::size_t s = 0; s < 20000; ++s) {
            const Matrix& x = g.elements[(s * 7919) % g.elements.size()];
            const Matrix& y = g.elements[(s * 104729 + 13) % g.elements.size()];
            if (!has(x * y)) return false;
        }
    }
    return true;
}

bool has_radical_component_bruteforce(const BilinearPair& p) {
    require_prime_field(p);
    std::size_t n = p.dim();
    Subspace rad = radical(p);
    if (rad.dim() == 0) return false;
    const Field& f = p.field();
    // Hyperplanes W = ker(lambda); lambda ranges over normalized functionals.
    GrassmannianStream lines(n, 1, f);
    bool found = false;
    lines.for_each([&](const Subspace& line) {
        Vector lambda = line.vector(0);
        auto eval = [&](const Vector& v) {
            Scalar s = Scalar::zero(f);
            for (std::size_t k = 0; k < n; ++k) s += lambda[k] * v[k];
            return s;
        };
        bool hits_radical = false;
        for (std::size_t r = 0; r < rad.dim() && !hits_radical; ++r) hits_radical = !eval(rad.vector(r)).is_zero();
        if (!hits_radical) return true;
        Matrix row(1, n, f);
        for (std::size_t k = 0; k < n; ++k) row(0, k) = lambda[k];
        Subspace w = kernel(row);
        for (std::size_t x = 0; x < w.dim(); ++x)
            for (std::size_t y = 0; y < w.dim(); ++y)
                if (!eval(p.multiply(w.vector(x), w.vector(y))).is_zero()) return true;
        found = true;
        return false;
    });
    return found;
}

}  // namespace bilpair
