#include "bilpair/exactlin/enumerate.hpp"

#include <limits>

namespace bilpair {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
        throw Error(ErrorCode::out_of_range, "count overflows 64 bits");
    }
    return a * b;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r = checked_mul(r, b);
    return r;
}

void require_prime(const Field& field) {
    if (!field.is_prime()) {
        throw Error(ErrorCode::enumeration_unsupported, "enumeration requires a prime field");
    }
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::uint64_t gaussian_binomial(std::size_t n, std::size_t s, std::uint64_t p) {
    if (s > n) return 0;
    // Sum over pivot sets of p^(free entries) equals the q-binomial; use the
    // product formula with exact division.
    std::uint64_t num = 1, den = 1;
    for (std::size_t i = 0; i < s; ++i) {
        num = checked_mul(num, ipow(p, n - i) - 1);
        den = checked_mul(den, ipow(p, i + 1) - 1);
    }
    return num / den;
}

std::uint64_t gl_order(std::size_t n, std::uint64_t p) {
    std::uint64_t pn = ipow(p, n);
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < n; ++i) r = checked_mul(r, pn - ipow(p, i));
    return r;
}

std::vector<std::uint32_t> code_digits(std::uint64_t code, std::size_t n, std::uint32_t p) {
    std::vector<std::uint32_t> d(n);
    for (std::size_t i = n; i-- > 0;) {
        d[i] = static_cast<std::uint32_t>(code % p);
        code /= p;
    }
    return d;
}

std::uint64_t digits_code(const std::vector<std::uint32_t>& digits, std::uint32_t p) {
    std::uint64_t c = 0;
    for (auto d : digits) c = c * p + d;
    return c;
}

GrassmannianStream::GrassmannianStream(std::size_t ambient_dim, std::size_t s, const Field& field)
    : n_(ambient_dim), s_(s), field_(field) {
    require_prime(field);
    if (s > ambient_dim) throw Error(ErrorCode::out_of_range, "subspace dimension exceeds ambient dimension");
    std::vector<std::size_t> piv(s);
    for (std::size_t i = 0; i < s; ++i) piv[i] = i;
    std::uint64_t start = 0;
    do {
        Block b;
        b.pivots = piv;
        for (std::size_t r = 0; r < s; ++r) {
            std::size_t k = r + 1;
            for (std::size_t c = piv[r] + 1; c < n_; ++c) {
                if (k < s && piv[k] == c) {
                    ++k;
                    continue;
                }
                b.free_slots.emplace_back(r, c);
            }
        }
        b.start = start;
        b.count = ipow(field.modulus(), b.free_slots.size());
        start += b.count;
        blocks_.push_back(std::move(b));
    } while (s > 0 && next_combination(piv, n_));
    total_ = start;
}

Subspace GrassmannianStream::at(std::uint64_t index) const {
    if (index >= total_) throw Error(ErrorCode::out_of_range, "grassmannian index out of range");
    std::size_t lo = 0, hi = blocks_.size();
    while (hi - lo > 1) {
        std::size_t mid = (lo + hi) / 2;
        if (blocks_[mid].start <= index) lo = mid; else hi = mid;
    }
    const Block& b = blocks_[lo];
    std::uint64_t local = index - b.start;
    Matrix m(s_, n_, field_);
    for (std::size_t r = 0; r < s_; ++r) m(r, b.pivots[r]) = Scalar::one(field_);
    std::uint32_t p = field_.modulus();
    for (std::size_t t = b.free_slots.size(); t-- > 0;) {
        auto [r, c] = b.free_slots[t];
        m(r, c) = Scalar::from_residue(p, static_cast<std::uint32_t>(local % p));
        local /= p;
    }
    return Subspace::from_rref(std::move(m), b.pivots);
}

void GrassmannianStream::for_each(const std::function<bool(const Subspace&)>& f) const {
    for (std::uint64_t i = 0; i < total_; ++i) {
        if (!f(at(i))) return;
    }
}

GrassmannianStream enumerate_grassmannian(std::size_t ambient_dim, std::size_t s, const Field& field) {
    return GrassmannianStream(ambient_dim, s, field);
}

GlStream::GlStream(std::size_t n, const Field& field) : n_(n), field_(field) { require_prime(field); }

namespace {

struct GlWalker {
    std::size_t n;
    std::uint32_t p;
    std::uint64_t pn;
    Field field;
    Matrix m;
    std::vector<Vector> echelon;  // reduced copies of chosen columns
    std::vector<std::size_t> lead;
    const std::function<bool(const Matrix&)>* f;

    // Reduces v against chosen columns; returns the leading index or n if zero.
    std::size_t reduce(Vector& v) const {
        for (std::size_t i = 0; i < echelon.size(); ++i) {
            Scalar c = v[lead[i]];
            if (c.is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k) v[k] -= c * echelon[i][k];
        }
        for (std::size_t k = 0; k < n; ++k)
            if (!v[k].is_zero()) return k;
        return n;
    }

    bool place(std::size_t col, std::uint64_t code) {
        auto d = code_digits(code, n, p);
        Vector v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = Scalar::from_residue(p, d[k]);
        Vector red = v;
        std::size_t l = reduce(red);
        if (l == n) return true;
        Scalar inv = red[l].inverse();
        for (auto& x : red) x *= inv;
        for (std::size_t k = 0; k < n; ++k) m(k, col) = v[k];
        echelon.push_back(std::move(red));
        lead.push_back(l);
        bool go = descend(col + 1);
        echelon.pop_back();
        lead.pop_back();
        return go;
    }

    bool descend(std::size_t col) {
        if (col == n) return (*f)(m);
        for (std::uint64_t code = 1; code < pn; ++code) {
            if (!place(col, code)) return false;
        }
        return true;
    }
};

}  // namespace

void GlStream::for_each(const std::function<bool(const Matrix&)>& f) const {
    if (n_ == 0) {
        f(Matrix(0, 0, field_));
        return;
    }
    std::uint64_t pn = ipow(field_.modulus(), n_);
    for (std::uint64_t code = 1; code < pn; ++code) {
        bool go = true;
        for_each_with_first_column(code, [&](const Matrix& m) { return go = f(m); });
        if (!go) return;
    }
}

void GlStream::for_each_with_first_column(std::uint64_t code,
                                          const std::function<bool(const Matrix&)>& f) const {
    if (n_ == 0) {
        if (code == 1) f(Matrix(0, 0, field_));
        return;
    }
    GlWalker w{n_, field_.modulus(), ipow(field_.modulus(), n_), field_, Matrix(n_, n_, field_), {}, {}, &f};
    w.place(0, code);
}

GlStream enumerate_gl(std::size_t n, const Field& field) { return GlStream(n, field); }

}  // namespace bilpair
