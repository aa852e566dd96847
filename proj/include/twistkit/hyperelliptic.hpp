#pragma once

#include <vector>

#include "twistkit/free_group.hpp"
#include "twistkit/int_matrix.hpp"
#include "twistkit/surface.hpp"

// Branched double cover model of the genus g surface with one boundary
// component over the disk with 2g + 1 marked points.
//
// The orbifold group is the free product of involutions l_1 ... l_{2g+1};
// pi_1 of the cover is its even-length subgroup. The chain curve c_j lifts the
// arc between points j and j + 1 and its twist acts by the Artin half twist.
// D(k) / E(k) are the two lifts of the loop around points 1 ... 2k; their
// twists splice l_1 ... l_{2k} into a path on sheet 0 / sheet 1 only.
//
// This model is the source of the free group twist tables and an independent
// cross-check for them.
namespace twistkit::hyperelliptic {

// Letters 1 .. 2g+1; stored reduced (no equal neighbours).
using InvWord = std::vector<int>;

InvWord reduce(const InvWord& w);

InvWord half_twist(int j, int sign, const InvWord& w);
InvWord sheet_twist(int k, int sheet, int sign, const InvWord& w);

// (l_1 ... l_{2g+1})^2
InvWord boundary(int genus);

// Action of a standard twist on an even word.
InvWord act(CurveId c, int sign, const InvWord& w, int genus);

// x_i = (l_1 ... l_{2i-1})^{-1} l_{2i},  y_i = l_{2i+1} l_{2i}.
// With these, boundary(g) = [x_1, y_1] ... [x_g, y_g].
std::vector<InvWord> basis(int genus);

// Rewrites an even word in the free basis above.
FreeWord to_free(const InvWord& even, int genus);

// Class of an even word in the chain basis [A1], [B1], ...
IntVec chain_coordinates(const InvWord& even, int genus);

}  // namespace twistkit::hyperelliptic
