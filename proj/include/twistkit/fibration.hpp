#pragma once

#include <string>
#include <vector>

#include "twistkit/int_matrix.hpp"
#include "twistkit/rewriting.hpp"
#include "twistkit/surface.hpp"

namespace twistkit {

enum class Base { Disk, Sphere };

std::string to_string(Base b);

// Lefschetz fibration given by its fiber and positive word of vanishing cycles.
struct Fibration {
    SurfaceSig fiber;
    Base base = Base::Disk;
    TwistWord word;

    // Throws std::invalid_argument: negative letters, surface mismatch, a
    // sphere base over a bounded fiber, or a sphere word acting nontrivially on H_1.
    void validate() const;
};

// Z^rank + Z/d1 + ... + Z/dk with d1 | d2 | ... and each di >= 2.
struct AbelianGroup {
    std::size_t rank = 0;
    std::vector<BigInt> torsion;

    bool trivial() const { return rank == 0 && torsion.empty(); }
    std::string to_string() const;
    bool operator==(const AbelianGroup&) const = default;
};

// Invariant factors of m (nonzero diagonal of the Smith form, in divisibility order).
std::vector<BigInt> invariant_factors(IntMatrix m);

// Z^rows / column span of m.
AbelianGroup cokernel(const IntMatrix& m);

BigInt euler_characteristic(const Fibration& f);
AbelianGroup first_homology(const Fibration& f);
bool is_allowable(const Fibration& f);

struct Doubled {
    Fibration fibration;
    RewriteReport report;
};

// Caps the fiber, closes the word with its reverse-inverse and positivizes.
Doubled double_palf(const Fibration& palf, const VerifyOptions& opts = {});

Fibration fiber_sum(const Fibration& f1, const Fibration& f2);

// (a1 b1 ... an bn)^{4n+2} over the sphere.
Fibration gn_word(int n);

struct OpenBook {
    SurfaceSig page;
    TwistWord monodromy;
};

OpenBook boundary_open_book(const Fibration& palf);

}  // namespace twistkit
