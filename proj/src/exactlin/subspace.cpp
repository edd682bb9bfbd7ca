#include "bilpair/exactlin/subspace.hpp"

namespace bilpair {

Subspace::Subspace(std::size_t ambient_dim, const Field& field) : basis_(0, ambient_dim, field) {}

Subspace Subspace::span(const Matrix& rows) {
    RrefResult r = rref(rows);
    Matrix basis(r.rank, rows.cols(), rows.field());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < rows.cols(); ++j) basis(i, j) = r.matrix(i, j);
    return from_rref(std::move(basis), std::move(r.pivots));
}

Subspace Subspace::span(const std::vector<Vector>& rows, std::size_t ambient_dim, const Field& field) {
    return span(Matrix::from_rows(rows, ambient_dim, field));
}

Subspace Subspace::full(std::size_t ambient_dim, const Field& field) {
    return span(Matrix::identity(ambient_dim, field));
}

Subspace Subspace::from_rref(Matrix basis, std::vector<std::size_t> pivots) {
    Subspace s;
    s.basis_ = std::move(basis);
    s.pivots_ = std::move(pivots);
    return s;
}

std::vector<std::size_t> Subspace::non_pivots() const {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t j = 0; j < ambient_dim(); ++j) {
        if (k < pivots_.size() && pivots_[k] == j) {
            ++k;
        } else {
            out.push_back(j);
        }
    }
    return out;
}

Vector Subspace::reduce(const Vector& v) const {
    if (v.size() != ambient_dim()) throw Error(ErrorCode::dimension_mismatch, "vector length mismatch");
    Vector out = v;
    for (std::size_t i = 0; i < dim(); ++i) {
        Scalar c = out[pivots_[i]];
        if (c.is_zero()) continue;
        for (std::size_t j = pivots_[i]; j < ambient_dim(); ++j) out[j] -= c * basis_(i, j);
    }
    return out;
}

bool Subspace::contains(const Vector& v) const { return is_zero_vector(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim()) {
        throw Error(ErrorCode::dimension_mismatch, "ambient dimensions differ");
    }
    for (std::size_t i = 0; i < other.dim(); ++i) {
        if (!contains(other.vector(i))) return false;
    }
    return true;
}

Vector Subspace::coordinates(const Vector& v) const {
    Vector c;
    c.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) c.push_back(v[pivots_[i]]);
    return c;
}

Subspace kernel(const Matrix& m) {
    RrefResult r = rref(m);
    std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Vector> rows;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vector v = unit_vector(m.field(), n, free);
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.matrix(i, free);
        rows.push_back(std::move(v));
    }
    return Subspace::span(rows, n, m.field());
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) {
        throw Error(ErrorCode::dimension_mismatch, "ambient dimensions differ");
    }
    Matrix m = a.basis();
    for (std::size_t i = 0; i < b.dim(); ++i) m.append_row(b.vector(i));
    return Subspace::span(m);
}

Subspace annihilator(const Subspace& a) { return kernel(a.basis()); }

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) {
        throw Error(ErrorCode::dimension_mismatch, "ambient dimensions differ");
    }
    if (a.dim() == 0 || b.dim() == 0) return Subspace(a.ambient_dim(), a.field());
    return annihilator(subspace_sum(annihilator(a), annihilator(b)));
}

bool mutually_contained(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) return false;
    auto inside = [](const Subspace& x, const Subspace& y) {
        // Rank test: adding x's rows to y's must not raise the rank.
        Matrix m = y.basis();
        for (std::size_t i = 0; i < x.dim(); ++i) m.append_row(x.vector(i));
        return rank(m) == rank(y.basis());
    };
    return inside(a, b) && inside(b, a);
}

}  // namespace bilpair
