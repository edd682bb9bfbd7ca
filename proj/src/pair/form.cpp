#include "bilpair/pair/form.hpp"

#include <sstream>

namespace bilpair {

BilinearForm::BilinearForm(Matrix coords) : coords_(std::move(coords)) {
    if (coords_.rows() != coords_.cols()) throw Error(ErrorCode::dimension_mismatch, "form matrix must be square");
}

BilinearForm BilinearForm::delta(std::size_t n, const Field& field, std::size_t i, std::size_t j) {
    BilinearForm f(n, field);
    f(i, j) = Scalar::one(field);
    return f;
}

BilinearForm BilinearForm::from_flat(std::size_t n, const Vector& flat) {
    if (flat.size() != n * n) throw Error(ErrorCode::dimension_mismatch, "flat form has the wrong length");
    if (n == 0) return BilinearForm();
    BilinearForm f(n, flat[0].field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) f(i, j) = flat[i * n + j];
    return f;
}

Vector BilinearForm::flat() const {
    Vector v;
    v.reserve(base_dim() * base_dim());
    for (std::size_t i = 0; i < base_dim(); ++i)
        for (std::size_t j = 0; j < base_dim(); ++j) v.push_back(coords_(i, j));
    return v;
}

bool BilinearForm::is_zero() const { return is_zero_vector(flat()); }

BilinearForm operator+(const BilinearForm& a, const BilinearForm& b) {
    if (a.base_dim() != b.base_dim()) throw Error(ErrorCode::dimension_mismatch, "form dimensions differ");
    BilinearForm c = a;
    for (std::size_t i = 0; i < a.base_dim(); ++i)
        for (std::size_t j = 0; j < a.base_dim(); ++j) c(i, j) += b(i, j);
    return c;
}

BilinearForm operator-(const BilinearForm& a, const BilinearForm& b) {
    if (a.base_dim() != b.base_dim()) throw Error(ErrorCode::dimension_mismatch, "form dimensions differ");
    BilinearForm c = a;
    for (std::size_t i = 0; i < a.base_dim(); ++i)
        for (std::size_t j = 0; j < a.base_dim(); ++j) c(i, j) -= b(i, j);
    return c;
}

BilinearForm operator*(const Scalar& s, const BilinearForm& a) {
    BilinearForm c = a;
    for (std::size_t i = 0; i < a.base_dim(); ++i)
        for (std::size_t j = 0; j < a.base_dim(); ++j) c(i, j) = s * a(i, j);
    return c;
}

std::string BilinearForm::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < base_dim(); ++i)
        for (std::size_t j = 0; j < base_dim(); ++j) {
            const Scalar& c = coords_(i, j);
            if (c.is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            if (!c.is_one()) os << c.to_string() << '*';
            os << 'D' << (i + 1) << (j + 1);
        }
    if (first) os << '0';
    return os.str();
}

Cocycle::Cocycle(std::size_t n, std::vector<BilinearForm> comps) : base_dim(n), components(std::move(comps)) {
    for (const auto& c : components) {
        if (c.base_dim() != n) throw Error(ErrorCode::dimension_mismatch, "cocycle components differ in dimension");
    }
}

std::string Cocycle::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i) s += ", ";
        s += components[i].to_string();
    }
    return s + ")";
}

Subspace form_radical(const Cocycle& theta, const Field& field) {
    std::size_t n = theta.base_dim;
    Matrix m(2 * n * theta.m(), n, field);
    std::size_t r = 0;
    for (const auto& f : theta.components) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t b = 0; b < n; ++b) {
                m(r, b) = f(j, b);      // theta(e_j, v)
                m(r + 1, b) = f(b, j);  // theta(v, e_j)
            }
            r += 2;
        }
    }
    return kernel(m);
}

}  // namespace bilpair
