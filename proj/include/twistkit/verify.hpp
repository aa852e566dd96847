#pragma once

#include "twistkit/surface.hpp"
#include "twistkit/verdict.hpp"

namespace twistkit {

// Equality with the engine chosen by `opts.engine`. Auto picks the strongest
// exact engine for the surface: pi1 rel boundary for b = 1, homology on the
// closed torus, Dehn's algorithm on closed surfaces of genus >= 2.
Verdict verify_equal(const TwistWord& a, const TwistWord& b, const VerifyOptions& opts = {});

// As verify_equal, but a resource-capped exact engine falls back to the
// homology check (reported as such).
Verdict verify_or_homology(const TwistWord& a, const TwistWord& b, const VerifyOptions& opts = {});

}  // namespace twistkit

#include <string>
#include <vector>

namespace twistkit {

struct NamedRelation {
    std::string name;
    TwistWord lhs;
    TwistWord rhs;
};

// Braid, commutation, chain and hyperelliptic relations that every engine must accept.
std::vector<NamedRelation> standard_relations();

}  // namespace twistkit
