#pragma once

#include <vector>

#include "twistkit/fibration.hpp"
#include "twistkit/homology.hpp"

namespace twistkit {

// Fillings X_0 ... X_n of the open book with page (n, 1) and monodromy delta.
struct FamilyReport {
    int n = 0;
    std::vector<Fibration> fillings;
    std::vector<BigInt> chis;
    std::vector<Verdict> equal_verdicts;  // X_i against X_0, i = 1..n
    std::vector<AbelianGroup> h1s;
    std::vector<bool> allowable;
};

// X_0 = (chain)^{4n+2}; X_{i+1} factors the leading (chain)^4 of the unconsumed
// power of X_i and replaces its (a1 b1 a2)^4 by d2 e2. A verification hitting
// the cap falls back to homology.
FamilyReport filling_family(int n, const VerifyOptions& opts = {});

struct TrefoilCompletions {
    Fibration big;    // double of the trefoil PALF, 24 letters
    Fibration small;  // closure ab (ab)^5, 12 letters
    Verdict equal;    // big and small words as torus mapping classes
};

TrefoilCompletions trefoil_completions();

// Mapping torus of phi # phi^-1 on the closed surface of genus 2g.
struct BranchedDouble {
    SurfaceSig fiber;
    TwistWord monodromy;
    TwistWord first_half;   // phi on copy 1
    TwistWord second_half;  // phi^-1 on copy 2
    SympMatrix swap;        // exchanges the two copies on H_1
};

// Copy 1 is the chain c_1..c_{2g}; copy 2 is the chain c_{2g+2}..c_{4g}, D_{2g}.
CurveId copy_two_curve(CurveId c, int genus);

BranchedDouble branched_double_cover(const SurfaceSig& page, const TwistWord& monodromy);

// H_1 of the mapping torus: coker(M - I) plus the base circle.
AbelianGroup mapping_torus_homology(const TwistWord& monodromy);

struct Splitting {
    Fibration x1;
    Fibration x2;
};

// x1 = positivize(phi), x2 = positivize(x1^-1), both over the disk.
Splitting splitting_words(const TwistWord& phi, const VerifyOptions& opts = {});

}  // namespace twistkit
