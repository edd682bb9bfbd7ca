#include "bilpair/pair/decompose.hpp"

namespace bilpair {

Decomposition decompose(const BilinearPair& p) {
    Subspace rad = radical(p);
    if (rad.dim() == 0) throw Error(ErrorCode::nothing_to_decompose, "pair has zero radical");
    std::size_t n = p.dim();
    std::vector<std::size_t> free = rad.non_pivots();
    std::size_t u = free.size();
    std::size_t m = rad.dim();
    const Field& f = p.field();

    // Columns of `basis`: complement vectors, then the radical basis.
    Matrix complement(u, n, f);
    Matrix basis(n, n, f);
    for (std::size_t a = 0; a < u; ++a) {
        complement(a, free[a]) = Scalar::one(f);
        basis(free[a], a) = Scalar::one(f);
    }
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k < n; ++k) basis(k, u + r) = rad.basis()(r, k);

    Matrix to_ext = inverse(basis);
    BilinearPair adapted = apply_change_of_basis(p, to_ext);

    Decomposition d;
    d.base = BilinearPair(u, f);
    std::vector<BilinearForm> comps(m, BilinearForm(u, f));
    for (std::size_t a = 0; a < u; ++a)
        for (std::size_t b = 0; b < u; ++b) {
            for (std::size_t k = 0; k < u; ++k) d.base.at(a, b, k) = adapted.at(a, b, k);
            for (std::size_t t = 0; t < m; ++t) comps[t](a, b) = adapted.at(a, b, u + t);
        }
    d.theta = Cocycle(u, std::move(comps));
    d.complement_basis = std::move(complement);
    d.radical_basis = rad.basis();
    d.to_extension = std::move(to_ext);
    return d;
}

}  // namespace bilpair
