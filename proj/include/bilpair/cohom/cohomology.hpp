#pragma once

#include <vector>

#include "bilpair/equiv/equivalence.hpp"
#include "bilpair/pair/form.hpp"

namespace bilpair {

// delta h (u1, u2) = h(g(u1, u2)); h is given by its n coefficients.
BilinearForm coboundary(const BilinearPair& p, const Vector& h);

// Span of delta e_k^* inside the n^2-dimensional form space (flat index i*n+j).
Subspace coboundary_space(const BilinearPair& p);

// H^2 = forms modulo coboundaries. Representatives sit at the non-pivot
// coordinates of the coboundary space; H^2 coordinates of a form are the
// values of its reduced representative at those positions.
struct CohomologySpace {
    BilinearPair base;
    Subspace coboundary;
    std::size_t h2_dim = 0;
    std::vector<std::size_t> free_positions;  // flat indices
    std::vector<BilinearForm> representatives;

    BilinearForm reduce_form(const BilinearForm& f) const;
    Vector coordinates(const BilinearForm& f) const;
    BilinearForm from_coordinates(const Vector& c) const;
};

CohomologySpace cohomology(const BilinearPair& p);

struct H2Class {
    const CohomologySpace* space = nullptr;
    BilinearForm rep;  // zero at the coboundary pivots

    bool is_zero() const { return rep.is_zero(); }
    Vector coordinates() const { return space->coordinates(rep); }
    friend bool operator==(const H2Class& a, const H2Class& b) { return a.rep == b.rep; }
};

H2Class reduce(const CohomologySpace& space, const BilinearForm& f);

// (U + W, g_theta): g on U x U plus theta into the new coordinates n..n+m-1.
BilinearPair build_extension(const BilinearPair& base, const Cocycle& theta);

// (rad g ∩ rad theta) + W, computed without building the extension.
Subspace radical_of_extension(const BilinearPair& base, const Cocycle& theta);

// True iff the classes [theta_1], ..., [theta_m] are linearly dependent in H^2.
// Requires rad(base) ∩ rad(theta) = 0.
bool has_radical_component(const BilinearPair& base, const Cocycle& theta);
bool has_radical_component(const CohomologySpace& space, const Cocycle& theta);

// (phi f)(u1, u2) = f(phi u1, phi u2).
BilinearForm act(const Matrix& phi, const BilinearForm& f);
Cocycle act(const Matrix& phi, const Cocycle& theta);

// Row t is the H^2 coordinate vector of phi acting on representative t, so
// coordinates(act(phi, f)) = coordinates(f) * M. Requires phi in Aut(base).
Matrix h2_action_matrix(const CohomologySpace& space, const Matrix& phi);

// m x h2_dim matrix of class coordinates of theta's components.
Matrix class_matrix(const CohomologySpace& space, const Cocycle& theta);

// Some phi in aut carries span{[theta_i]} onto span{[mu_i]}. Requires zero
// radical overlap and no radical component on either side.
bool extensions_equivalent(const BilinearPair& base, const Cocycle& theta, const Cocycle& mu,
                           const AutomorphismGroup& aut);

struct StrippedPair {
    BilinearPair core;  // no radical component
    std::size_t count = 0;
};

// p is equivalent to add_radical_components(core, count).
StrippedPair strip_radical_components(const BilinearPair& p);

}  // namespace bilpair
