#pragma once

#include "bilpair/pair/bilinear_pair.hpp"
#include "bilpair/pair/form.hpp"

namespace bilpair {

// p split as base (on a complement U of the radical) plus a radical-valued
// cocycle theta, with an explicit witness.
struct Decomposition {
    BilinearPair base;
    Cocycle theta;
    Matrix complement_basis;  // rows: basis of U in the coordinates of p
    Matrix radical_basis;     // rows: RREF basis of rad(p)
    // apply_change_of_basis(p, to_extension) == build_extension(base, theta).
    Matrix to_extension;
};

// Complement: standard vectors at the non-pivot coordinates of the RREF
// radical basis. Throws nothing_to_decompose when the radical is zero.
Decomposition decompose(const BilinearPair& p);

}  // namespace bilpair
