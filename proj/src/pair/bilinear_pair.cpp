#include "bilpair/pair/bilinear_pair.hpp"

#include <cassert>
#include <sstream>

namespace bilpair {

BilinearPair::BilinearPair(std::size_t n, const Field& field)
    : n_(n), field_(field), c_(n * n * n, Scalar::zero(field)) {}

Vector BilinearPair::product(std::size_t i, std::size_t j) const {
    return Vector(c_.begin() + static_cast<std::ptrdiff_t>((i * n_ + j) * n_),
                  c_.begin() + static_cast<std::ptrdiff_t>((i * n_ + j + 1) * n_));
}

void BilinearPair::set_product(std::size_t i, std::size_t j, const Vector& v) {
    if (v.size() != n_) throw Error(ErrorCode::dimension_mismatch, "product vector length mismatch");
    for (std::size_t k = 0; k < n_; ++k) at(i, j, k) = v[k];
}

Vector BilinearPair::multiply(const Vector& x, const Vector& y) const {
    if (x.size() != n_ || y.size() != n_) throw Error(ErrorCode::dimension_mismatch, "vector length mismatch");
    Vector out = zero_vector(field_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            for (std::size_t k = 0; k < n_; ++k) {
                const Scalar& s = at(i, j, k);
                if (!s.is_zero()) out[k] += c * s;
            }
        }
    }
    return out;
}

Matrix BilinearPair::left_operator(const Vector& v) const {
    Matrix m(n_, n_, field_);
    for (std::size_t j = 0; j < n_; ++j) {
        Vector col = multiply(v, unit_vector(field_, n_, j));
        for (std::size_t k = 0; k < n_; ++k) m(k, j) = col[k];
    }
    return m;
}

Matrix BilinearPair::right_operator(const Vector& v) const {
    Matrix m(n_, n_, field_);
    for (std::size_t j = 0; j < n_; ++j) {
        Vector col = multiply(unit_vector(field_, n_, j), v);
        for (std::size_t k = 0; k < n_; ++k) m(k, j) = col[k];
    }
    return m;
}

Subspace radical(const BilinearPair& p) {
    std::size_t n = p.dim();
    // Rows: the k-th coordinate of e_i v and of v e_i, as functionals of v.
    Matrix m(2 * n * n, n, p.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) {
                m((i * n + k), j) = p.at(i, j, k);
                m(n * n + i * n + k, j) = p.at(j, i, k);
            }
    return kernel(m);
}

Subspace product_space(const BilinearPair& p) {
    std::size_t n = p.dim();
    Matrix m(n * n, n, p.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m(i * n + j, k) = p.at(i, j, k);
    return Subspace::span(m);
}

BilinearPair apply_change_of_basis(const BilinearPair& p, const Matrix& phi) {
    std::size_t n = p.dim();
    if (phi.rows() != n || phi.cols() != n) {
        throw Error(ErrorCode::dimension_mismatch, "change of basis has the wrong size");
    }
    if (!(phi.field() == p.field())) throw Error(ErrorCode::field_mismatch, "change of basis field differs");
    Matrix q = inverse(phi);
    BilinearPair out(n, p.field());
    std::vector<Vector> pre(n);
    for (std::size_t i = 0; i < n; ++i) pre[i] = q.column(i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.set_product(i, j, phi.apply(p.multiply(pre[i], pre[j])));
    return out;
}

BilinearPair opposite(const BilinearPair& p) {
    std::size_t n = p.dim();
    BilinearPair out(n, p.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out.at(i, j, k) = p.at(j, i, k);
    return out;
}

BilinearPair add_radical_components(const BilinearPair& p, std::size_t t) {
    std::size_t n = p.dim();
    BilinearPair out(n + t, p.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out.at(i, j, k) = p.at(i, j, k);
    return out;
}

BilinearPair quotient_with_representatives(const BilinearPair& p, const Matrix& shifts) {
    Subspace rad = radical(p);
    std::vector<std::size_t> free = rad.non_pivots();
    std::size_t q = free.size();
    if (shifts.rows() != q || shifts.cols() != p.dim()) {
        throw Error(ErrorCode::dimension_mismatch, "one shift per quotient basis vector required");
    }
    std::vector<Vector> reps(q);
    for (std::size_t a = 0; a < q; ++a) {
        if (!rad.contains(shifts.row(a))) throw Error(ErrorCode::invalid_input, "shift outside the radical");
        reps[a] = unit_vector(p.field(), p.dim(), free[a]);
        for (std::size_t k = 0; k < p.dim(); ++k) reps[a][k] += shifts(a, k);
    }
    BilinearPair out(q, p.field());
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) {
            // Zeroing the radical pivot coordinates leaves the coset coordinates.
            Vector w = rad.reduce(p.multiply(reps[a], reps[b]));
            for (std::size_t k = 0; k < q; ++k) out.at(a, b, k) = w[free[k]];
        }
    return out;
}

BilinearPair quotient_by_radical(const BilinearPair& p) {
    Subspace rad = radical(p);
    std::size_t q = p.dim() - rad.dim();
    BilinearPair out = quotient_with_representatives(p, Matrix(q, p.dim(), p.field()));
#ifndef NDEBUG
    if (rad.dim() > 0) {
        // Shift every representative by the sum of the radical basis.
        Vector s = zero_vector(p.field(), p.dim());
        for (std::size_t i = 0; i < rad.dim(); ++i)
            for (std::size_t k = 0; k < p.dim(); ++k) s[k] += rad.basis()(i, k);
        Matrix shifts(q, p.dim(), p.field());
        for (std::size_t a = 0; a < q; ++a) shifts.set_row(a, s);
        assert(quotient_with_representatives(p, shifts) == out);
    }
#endif
    return out;
}

std::string basis_vector_text(const Vector& v) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (!v[k].is_one()) os << v[k].to_string() << '*';
        os << 'e' << (k + 1);
    }
    if (first) os << '0';
    return os.str();
}

}  // namespace bilpair
