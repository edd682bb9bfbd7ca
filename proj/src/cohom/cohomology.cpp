#include "bilpair/cohom/cohomology.hpp"

#include <cassert>

#include "bilpair/pair/decompose.hpp"

namespace bilpair {

namespace {

void require_same_base(const BilinearPair& base, const Cocycle& theta) {
    if (theta.base_dim != base.dim()) {
        throw Error(ErrorCode::dimension_mismatch, "cocycle is defined on a space of different dimension");
    }
}

bool radicals_overlap(const BilinearPair& base, const Cocycle& theta) {
    return subspace_intersect(radical(base), form_radical(theta, base.field())).dim() != 0;
}

}  // namespace

BilinearForm coboundary(const BilinearPair& p, const Vector& h) {
    std::size_t n = p.dim();
    if (h.size() != n) throw Error(ErrorCode::dimension_mismatch, "functional has the wrong length");
    BilinearForm f(n, p.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar s = Scalar::zero(p.field());
            for (std::size_t k = 0; k < n; ++k)
                if (!h[k].is_zero()) s += h[k] * p.at(i, j, k);
            f(i, j) = s;
        }
    return f;
}

Subspace coboundary_space(const BilinearPair& p) {
    std::size_t n = p.dim();
    std::vector<Vector> rows;
    for (std::size_t k = 0; k < n; ++k) rows.push_back(coboundary(p, unit_vector(p.field(), n, k)).flat());
    return Subspace::span(rows, n * n, p.field());
}

BilinearForm CohomologySpace::reduce_form(const BilinearForm& f) const {
    if (f.base_dim() != base.dim()) throw Error(ErrorCode::dimension_mismatch, "form on a space of different dimension");
    if (base.dim() == 0) return f;
    return BilinearForm::from_flat(base.dim(), coboundary.reduce(f.flat()));
}

Vector CohomologySpace::coordinates(const BilinearForm& f) const {
    Vector flat = base.dim() == 0 ? Vector{} : reduce_form(f).flat();
    Vector c;
    c.reserve(free_positions.size());
    for (std::size_t q : free_positions) c.push_back(flat[q]);
    return c;
}

BilinearForm CohomologySpace::from_coordinates(const Vector& c) const {
    if (c.size() != h2_dim) throw Error(ErrorCode::dimension_mismatch, "H2 coordinate vector has the wrong length");
    std::size_t n = base.dim();
    BilinearForm f(n, base.field());
    for (std::size_t t = 0; t < h2_dim; ++t) f(free_positions[t] / n, free_positions[t] % n) = c[t];
    return f;
}

CohomologySpace cohomology(const BilinearPair& p) {
    CohomologySpace s;
    s.base = p;
    s.coboundary = coboundary_space(p);
    s.free_positions = s.coboundary.non_pivots();
    s.h2_dim = s.free_positions.size();
    std::size_t n = p.dim();
    for (std::size_t q : s.free_positions) s.representatives.push_back(BilinearForm::delta(n, p.field(), q / n, q % n));
    return s;
}

H2Class reduce(const CohomologySpace& space, const BilinearForm& f) { return H2Class{&space, space.reduce_form(f)}; }

BilinearPair build_extension(const BilinearPair& base, const Cocycle& theta) {
    require_same_base(base, theta);
    std::size_t n = base.dim(), m = theta.m();
    BilinearPair out(n + m, base.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) out.at(i, j, k) = base.at(i, j, k);
            for (std::size_t t = 0; t < m; ++t) out.at(i, j, n + t) = theta.components[t](i, j);
        }
    return out;
}

Subspace radical_of_extension(const BilinearPair& base, const Cocycle& theta) {
    require_same_base(base, theta);
    std::size_t n = base.dim(), m = theta.m();
    Subspace common = subspace_intersect(radical(base), form_radical(theta, base.field()));
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < common.dim(); ++r) {
        Vector v = common.vector(r);
        v.resize(n + m, Scalar::zero(base.field()));
        rows.push_back(std::move(v));
    }
    for (std::size_t t = 0; t < m; ++t) rows.push_back(unit_vector(base.field(), n + m, n + t));
    Subspace out = Subspace::span(rows, n + m, base.field());
    assert(out == radical(build_extension(base, theta)));
    return out;
}

bool has_radical_component(const CohomologySpace& space, const Cocycle& theta) {
    require_same_base(space.base, theta);
    if (radicals_overlap(space.base, theta)) {
        throw Error(ErrorCode::invalid_input, "radical of the base meets the radical of the cocycle");
    }
    return rank(class_matrix(space, theta)) < theta.m();
}

bool has_radical_component(const BilinearPair& base, const Cocycle& theta) {
    return has_radical_component(cohomology(base), theta);
}

BilinearForm act(const Matrix& phi, const BilinearForm& f) {
    std::size_t n = f.base_dim();
    if (phi.rows() != n || phi.cols() != n) throw Error(ErrorCode::dimension_mismatch, "matrix and form sizes differ");
    // (phi^T F phi)[i][j]
    return BilinearForm(phi.transpose() * f.coords() * phi);
}

Cocycle act(const Matrix& phi, const Cocycle& theta) {
    std::vector<BilinearForm> comps;
    for (const auto& c : theta.components) comps.push_back(act(phi, c));
    return Cocycle(theta.base_dim, std::move(comps));
}

Matrix h2_action_matrix(const CohomologySpace& space, const Matrix& phi) {
    Matrix m(space.h2_dim, space.h2_dim, space.base.field());
    for (std::size_t t = 0; t < space.h2_dim; ++t) {
        Vector row = space.coordinates(act(phi, space.representatives[t]));
        for (std::size_t u = 0; u < space.h2_dim; ++u) m(t, u) = row[u];
    }
    return m;
}

Matrix class_matrix(const CohomologySpace& space, const Cocycle& theta) {
    require_same_base(space.base, theta);
    Matrix m(theta.m(), space.h2_dim, space.base.field());
    for (std::size_t r = 0; r < theta.m(); ++r) {
        Vector c = space.coordinates(theta.components[r]);
        for (std::size_t u = 0; u < space.h2_dim; ++u) m(r, u) = c[u];
    }
    return m;
}

bool extensions_equivalent(const BilinearPair& base, const Cocycle& theta, const Cocycle& mu,
                           const AutomorphismGroup& aut) {
    require_same_base(base, theta);
    require_same_base(base, mu);
    if (!(aut.base == base)) throw Error(ErrorCode::invalid_input, "automorphism group belongs to another pair");
    if (radicals_overlap(base, theta) || radicals_overlap(base, mu)) {
        throw Error(ErrorCode::radical_overlap, "radical of the base meets the radical of a cocycle");
    }
    CohomologySpace space = cohomology(base);
    Matrix ct = class_matrix(space, theta);
    Matrix cm = class_matrix(space, mu);
    if (rank(ct) < theta.m() || rank(cm) < mu.m()) {
        throw Error(ErrorCode::component_present, "an extension has a radical component");
    }
    if (theta.m() != mu.m()) return false;
    RrefResult target = rref(cm);
    for (const Matrix& phi : aut.elements) {
        if (rref(ct * h2_action_matrix(space, phi)).matrix == target.matrix) return true;
    }
    return false;
}

StrippedPair strip_radical_components(const BilinearPair& p) {
    if (radical(p).dim() == 0) return {p, 0};
    Decomposition d = decompose(p);
    CohomologySpace space = cohomology(d.base);
    std::size_t m = d.theta.m();
    const Field& f = p.field();

    // Row-reduce [C | I]; the right block T gives theta' = T theta whose
    // trailing rows have zero class.
    Matrix c = class_matrix(space, d.theta);
    Matrix aug(m, space.h2_dim + m, f);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t u = 0; u < space.h2_dim; ++u) aug(r, u) = c(r, u);
        aug(r, space.h2_dim + r) = Scalar::one(f);
    }
    RrefResult red = rref(aug);
    std::size_t rk = 0;
    for (std::size_t piv : red.pivots)
        if (piv < space.h2_dim) ++rk;
    if (rk == m) return {p, 0};

    std::vector<BilinearForm> kept;
    for (std::size_t r = 0; r < rk; ++r) {
        BilinearForm comb(d.base.dim(), f);
        for (std::size_t s = 0; s < m; ++s) {
            const Scalar& t = red.matrix(r, space.h2_dim + s);
            if (!t.is_zero()) comb = comb + t * d.theta.components[s];
        }
        kept.push_back(std::move(comb));
    }
    return {build_extension(d.base, Cocycle(d.base.dim(), std::move(kept))), m - rk};
}

}  // namespace bilpair
