#pragma once

#include <stdexcept>

#include "twistkit/surface.hpp"
#include "twistkit/verdict.hpp"

namespace twistkit {

class RewriteError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RewriteReport {
    TwistWord input;
    TwistWord output;
    std::size_t steps = 0;
    Verdict verified;
};

// Moves the letters of `pattern` to positions start, start+1, ... of w by
// adjacent swaps X Y -> Y (Y^-1 X Y). The earliest unmatched pattern letter is
// pulled leftward first. Letter count is preserved.
RewriteReport commute_pull(const TwistWord& w, const TwistWord& pattern, std::size_t start = 0,
                           const VerifyOptions& opts = {});

struct ChainFactorization {
    TwistWord prefix;  // (a1 b1 a2)^4
    TwistWord remainder;  // 8n - 12 positive twists
    RewriteReport report;
};

// (a1 b1 ... an bn)^4 = (a1 b1 a2)^4 r on the genus n surface with one boundary component.
ChainFactorization factor_chain_power(int n, const VerifyOptions& opts = {});

// Positive word equal to a1^-1 on the closed surface:
// (b1 a2 b2 ... ag bg)(a1 b1 ... ag bg)^{4g+1}.
TwistWord inverse_twist_expansion(const SurfaceSig& sig);

// Positive plain word equal to c_j^-1 (chain curve j): a cyclic rotation of the
// hyperelliptic relation. For j = 1 this is inverse_twist_expansion.
TwistWord negative_chain_expansion(int j, const SurfaceSig& sig);

// Word v with t_c = v^-1 a1 v.
LetterSeq change_of_coordinates(CurveId c, const SurfaceSig& sig);

std::size_t expansion_length(int genus);

// Replaces every negative twist by positive twists; closed surfaces only.
RewriteReport positivize(const TwistWord& w, const VerifyOptions& opts = {});

// Replaces the first contiguous (a1 b1 a2)^4 at or after `from` by d2 e2.
RewriteReport chain_substitute(const TwistWord& w, std::size_t from = 0, const VerifyOptions& opts = {});

// Homology half of the chain relation check with explicit D2 / E2 classes.
bool chain_relation_holds_on_homology(const IntVec& d_class, const IntVec& e_class);

// (a1 b1 a2)^4 = d2 e2 under the homology engine and the pi1 engine on (g=2, b=1).
bool chain_relation_selftest();

}  // namespace twistkit
