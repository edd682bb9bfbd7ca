#include "bilpair/exactlin/matrix.hpp"

#include <sstream>

namespace bilpair {

Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

Vector unit_vector(const Field& f, std::size_t n, std::size_t i) {
    Vector v = zero_vector(f, n);
    v[i] = Scalar::one(f);
    return v;
}

bool is_zero_vector(const Vector& v) {
    for (const auto& x : v) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, const Field& field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(std::size_t n, const Field& field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols, const Field& field) {
    Matrix m(rows.size(), cols, field);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

Matrix Matrix::from_ints(const std::vector<std::vector<long long>>& rows, const Field& field) {
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    Matrix m(rows.size(), cols, field);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error(ErrorCode::dimension_mismatch, "ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar::from_int(field, rows[i][j]);
    }
    return m;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
}

void Matrix::set_row(std::size_t i, const Vector& v) {
    if (v.size() != cols_) throw Error(ErrorCode::dimension_mismatch, "row length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

void Matrix::append_row(const Vector& v) {
    if (v.size() != cols_) throw Error(ErrorCode::dimension_mismatch, "row length mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw Error(ErrorCode::dimension_mismatch, "vector length mismatch");
    Vector out = zero_vector(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
        }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::dimension_mismatch, "matrix product shape mismatch");
    if (!(a.field_ == b.field_)) throw Error(ErrorCode::field_mismatch, "matrix fields differ");
    Matrix c(a.rows_, b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
        }
    return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

bool operator<(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
        if (a.data_[i] != b.data_[i]) return a.data_[i] < b.data_[i];
    }
    return false;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ',';
            os << (*this)(i, j).to_string();
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

std::size_t Matrix::hash() const {
    std::size_t h = rows_ * 1315423911u + cols_;
    for (const auto& x : data_) h = h * 1000003u ^ x.hash();
    return h;
}

RrefResult rref(const Matrix& m) {
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a(piv, c).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
        }
        Scalar inv = a(r, c).inverse();
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            Scalar factor = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= factor * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), r, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::dimension_mismatch, "inverse of non-square matrix");
    std::size_t n = m.rows();
    Matrix aug(n, 2 * n, m.field());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar::one(m.field());
    }
    RrefResult r = rref(aug);
    if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) {
        throw Error(ErrorCode::singular_matrix, "matrix is singular");
    }
    Matrix inv(n, n, m.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.matrix(i, n + j);
    return inv;
}

bool is_invertible(const Matrix& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

}  // namespace bilpair
