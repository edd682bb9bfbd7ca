#include "fp_kernel.hpp"

#include <algorithm>

namespace bilpair::detail {

namespace {

Residue pow_mod(Residue a, Residue e, Residue p) {
    std::uint64_t r = 1, b = a % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<Residue>(r);
}

Residue inv_mod(Residue a, Residue p) { return pow_mod(a, p - 2, p); }

enum : std::uint8_t { in_rad_and_prod = 1, in_rad = 2, in_prod = 4, in_rad_plus_prod = 8 };

std::uint8_t membership(const InvariantSubspaces& s, const Residue* v) {
    std::uint8_t m = 0;
    if (s.rad_and_prod.contains(v)) m |= in_rad_and_prod;
    if (s.rad.contains(v)) m |= in_rad;
    if (s.prod.contains(v)) m |= in_prod;
    if (s.rad_plus_prod.contains(v)) m |= in_rad_plus_prod;
    return m;
}

// Smallest invariant subspace flag containing v, or 0 if none is proper.
int smallest_flag(std::uint8_t m) {
    for (int f : {in_rad_and_prod, in_rad, in_prod, in_rad_plus_prod})
        if (m & f) return f;
    return 0;
}

}  // namespace

FpPair FpPair::from(const BilinearPair& pair) {
    FpPair f;
    f.n = pair.dim();
    f.p = pair.field().modulus();
    f.c.resize(f.n * f.n * f.n);
    for (std::size_t i = 0; i < f.n; ++i)
        for (std::size_t j = 0; j < f.n; ++j)
            for (std::size_t k = 0; k < f.n; ++k) f.c[(i * f.n + j) * f.n + k] = pair.at(i, j, k).residue();
    return f;
}

void FpPair::multiply(const Residue* x, const Residue* y, Residue* out) const {
    std::uint64_t acc[16] = {};
    for (std::size_t i = 0; i < n; ++i) {
        if (!x[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (!y[j]) continue;
            std::uint64_t w = static_cast<std::uint64_t>(x[i]) * y[j] % p;
            const Residue* row = c.data() + (i * n + j) * n;
            for (std::size_t k = 0; k < n; ++k) acc[k] += w * row[k];
        }
    }
    for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<Residue>(acc[k] % p);
}

FpSubspace::FpSubspace(const Subspace& s) : n_(s.ambient_dim()), p_(s.field().modulus()), pivots_(s.pivots()) {
    for (std::size_t r = 0; r < s.dim(); ++r) {
        std::vector<Residue> row(n_);
        for (std::size_t k = 0; k < n_; ++k) row[k] = s.basis()(r, k).residue();
        rows_.push_back(std::move(row));
    }
}

bool FpSubspace::contains(const Residue* v) const {
    // RREF basis: v is in the span iff v equals sum v[pivot_r] * row_r.
    for (std::size_t k = 0; k < n_; ++k) {
        std::uint64_t s = 0;
        for (std::size_t r = 0; r < rows_.size(); ++r) s += static_cast<std::uint64_t>(v[pivots_[r]]) * rows_[r][k];
        if (s % p_ != v[k]) return false;
    }
    return true;
}

std::size_t rank_mod(std::vector<Residue> m, std::size_t rows, std::size_t cols, Residue p) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t k = 0; k < cols; ++k) std::swap(m[piv * cols + k], m[r * cols + k]);
        Residue inv = inv_mod(m[r * cols + c], p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            Residue f = m[i * cols + c];
            if (!f) continue;
            std::uint64_t g = static_cast<std::uint64_t>(f) * inv % p;
            for (std::size_t k = c; k < cols; ++k)
                m[i * cols + k] = static_cast<Residue>((m[i * cols + k] + (p - g) * m[r * cols + k]) % p);
        }
        ++r;
    }
    return r;
}

InvariantSubspaces::InvariantSubspaces(const BilinearPair& pair) {
    Subspace r = radical(pair);
    Subspace q = product_space(pair);
    rad_and_prod = FpSubspace(subspace_intersect(r, q));
    rad = FpSubspace(r);
    prod = FpSubspace(q);
    rad_plus_prod = FpSubspace(subspace_sum(r, q));
}

std::uint64_t vector_signature(const FpPair& f, const InvariantSubspaces& inv, const Residue* v) {
    std::size_t n = f.n;
    Residue p = f.p;
    std::vector<Residue> l(n * n), r(n * n), e(n, 0), out(n);
    for (std::size_t j = 0; j < n; ++j) {
        e[j] = 1;
        f.multiply(v, e.data(), out.data());
        for (std::size_t k = 0; k < n; ++k) l[k * n + j] = out[k];
        f.multiply(e.data(), v, out.data());
        for (std::size_t k = 0; k < n; ++k) r[k * n + j] = out[k];
        e[j] = 0;
    }
    std::uint64_t rl = rank_mod(std::move(l), n, n, p);
    std::uint64_t rr = rank_mod(std::move(r), n, n, p);
    f.multiply(v, v, out.data());
    std::uint64_t kind = 2, lambda = 0;
    if (std::all_of(out.begin(), out.end(), [](Residue x) { return x == 0; })) {
        kind = 0;
    } else {
        std::size_t lead = 0;
        while (lead < n && v[lead] == 0) ++lead;
        if (lead < n) {
            std::uint64_t lam = static_cast<std::uint64_t>(out[lead]) * inv_mod(v[lead], p) % p;
            bool parallel = true;
            for (std::size_t k = 0; k < n && parallel; ++k) parallel = out[k] == lam * v[k] % p;
            if (parallel) {
                kind = 1;
                lambda = lam;
            }
        }
    }
    std::uint64_t vv_mask = membership(inv, out.data());
    std::uint64_t v_mask = membership(inv, v);
    return rl | rr << 8 | kind << 16 | lambda << 18 | vv_mask << 34 | v_mask << 38;
}

VectorTable::VectorTable(std::size_t n, Residue p) : n_(n), p_(p), count_(1) {
    for (std::size_t i = 0; i < n; ++i) {
        if (count_ > (std::uint64_t(1) << 22) / p) throw Error(ErrorCode::budget_exceeded, "vector table too large");
        count_ *= p;
    }
    digits_.assign(count_ * n, 0);
    for (std::uint64_t code = 0; code < count_; ++code) {
        std::uint64_t c = code;
        for (std::size_t i = n; i-- > 0;) {
            digits_[code * n + i] = static_cast<Residue>(c % p);
            c /= p;
        }
    }
}

std::uint64_t VectorTable::encode(const Residue* v) const {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n_; ++i) c = c * p_ + v[i];
    return c;
}

GlSearch::GlSearch(const BilinearPair& a, const BilinearPair& b, bool prune)
    : n_(a.dim()),
      p_(a.field().modulus()),
      prune_(prune),
      a_(FpPair::from(a)),
      b_(FpPair::from(b)),
      table_(a.dim(), a.field().modulus()) {
    cand_.assign(n_, {});
    checks_.assign(n_, {});
    if (!prune_) {
        for (std::size_t k = 0; k < n_; ++k)
            for (std::uint64_t code = 1; code < table_.size(); ++code) cand_[k].push_back(code);
        return;
    }

    InvariantSubspaces inv_a(a), inv_b(b);
    mask_b_.resize(table_.size());
    std::vector<std::uint64_t> sig_b(table_.size());
    for (std::uint64_t code = 1; code < table_.size(); ++code) {
        sig_b[code] = vector_signature(b_, inv_b, table_.at(code));
        mask_b_[code] = membership(inv_b, table_.at(code));
    }
    mask_b_[0] = 0xF;
    std::vector<Residue> e(n_, 0);
    for (std::size_t k = 0; k < n_; ++k) {
        e[k] = 1;
        std::uint64_t s = vector_signature(a_, inv_a, e.data());
        e[k] = 0;
        for (std::uint64_t code = 1; code < table_.size(); ++code)
            if (sig_b[code] == s) cand_[k].push_back(code);
    }

    // Pair (i,j) is checked exactly once its whole support is assigned, and
    // modulo an invariant subspace while the unassigned part lies in one.
    std::vector<Residue> w(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            std::size_t top = std::max(i, j);
            std::size_t last = top;
            for (std::size_t l = 0; l < n_; ++l)
                if (a_(i, j, l)) last = std::max(last, l);
            for (std::size_t k = top; k < last; ++k) {
                for (std::size_t l = 0; l < n_; ++l) w[l] = l > k ? a_(i, j, l) : 0;
                int flag = smallest_flag(membership(inv_a, w.data()));
                if (flag) checks_[k].push_back({i, j, flag});
            }
            checks_[last].push_back({i, j, 0});
        }
}

bool GlSearch::check_depth(std::size_t k, const std::vector<const Residue*>& img, Residue* scratch) const {
    std::size_t n = n_;
    Residue* prod = scratch;
    for (const auto& c : checks_[k]) {
        b_.multiply(img[c.i], img[c.j], prod);
        for (std::size_t l = 0; l <= k; ++l) {
            Residue coef = a_(c.i, c.j, l);
            if (!coef) continue;
            for (std::size_t t = 0; t < n; ++t)
                prod[t] = static_cast<Residue>((prod[t] + static_cast<std::uint64_t>(p_ - coef) * img[l][t]) % p_);
        }
        if (c.mask == 0) {
            for (std::size_t t = 0; t < n; ++t)
                if (prod[t]) return false;
        } else if (!(mask_b_[table_.encode(prod)] & c.mask)) {
            return false;
        }
    }
    return true;
}

bool GlSearch::check_full(const std::vector<const Residue*>& img, Residue* scratch) const {
    std::size_t n = n_;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            b_.multiply(img[i], img[j], scratch);
            for (std::size_t l = 0; l < n; ++l) {
                Residue coef = a_(i, j, l);
                if (!coef) continue;
                for (std::size_t t = 0; t < n; ++t)
                    scratch[t] =
                        static_cast<Residue>((scratch[t] + static_cast<std::uint64_t>(p_ - coef) * img[l][t]) % p_);
            }
            for (std::size_t t = 0; t < n; ++t)
                if (scratch[t]) return false;
        }
    return true;
}

bool GlSearch::run(std::size_t index, const std::function<bool(const std::vector<std::uint64_t>&)>& on_solution,
                   const std::function<bool()>& abort) const {
    std::size_t n = n_;
    std::vector<std::uint64_t> cols(n);
    std::vector<std::size_t> pos(n, 0);
    std::vector<const Residue*> img(n, nullptr);
    // Echelon rows of the assigned columns: ech[d] is normalized at pivot piv[d].
    std::vector<std::vector<Residue>> ech(n, std::vector<Residue>(n));
    std::vector<std::size_t> piv(n);
    std::vector<Residue> scratch(n);
    std::uint64_t ticks = 0;

    auto try_place = [&](std::size_t d, std::uint64_t code) -> bool {
        const Residue* v = table_.at(code);
        std::vector<Residue>& row = ech[d];
        std::copy(v, v + n, row.begin());
        for (std::size_t e = 0; e < d; ++e) {
            Residue f = row[piv[e]];
            if (!f) continue;
            for (std::size_t t = 0; t < n; ++t)
                row[t] = static_cast<Residue>((row[t] + static_cast<std::uint64_t>(p_ - f) * ech[e][t]) % p_);
        }
        std::size_t lead = 0;
        while (lead < n && row[lead] == 0) ++lead;
        if (lead == n) return false;
        Residue inv = inv_mod(row[lead], p_);
        for (std::size_t t = 0; t < n; ++t) row[t] = static_cast<Residue>(static_cast<std::uint64_t>(row[t]) * inv % p_);
        piv[d] = lead;
        cols[d] = code;
        img[d] = v;
        if (!prune_) return true;
        return check_depth(d, img, scratch.data());
    };

    if (n == 0) return on_solution(cols);
    if (index >= cand_[0].size() || !try_place(0, cand_[0][index])) return true;
    if (n == 1) return prune_ || check_full(img, scratch.data()) ? on_solution(cols) : true;

    std::size_t d = 1;
    pos[1] = 0;
    while (d >= 1) {
        if (abort && (++ticks & 0x3FF) == 0 && abort()) return false;
        if (pos[d] == cand_[d].size()) {
            --d;
            if (d >= 1) ++pos[d];
            continue;
        }
        if (!try_place(d, cand_[d][pos[d]])) {
            ++pos[d];
            continue;
        }
        if (d + 1 == n) {
            if (prune_ || check_full(img, scratch.data())) {
                if (!on_solution(cols)) return false;
            }
            ++pos[d];
            continue;
        }
        ++d;
        pos[d] = 0;
    }
    return true;
}

Matrix GlSearch::to_matrix(const std::vector<std::uint64_t>& cols, const Field& field) const {
    Matrix m(n_, n_, field);
    for (std::size_t j = 0; j < n_; ++j) {
        const Residue* v = table_.at(cols[j]);
        for (std::size_t i = 0; i < n_; ++i) m(i, j) = Scalar::from_residue(p_, v[i]);
    }
    return m;
}

}  // namespace bilpair::detail
