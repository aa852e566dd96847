#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "twistkit/free_group.hpp"
#include "twistkit/surface.hpp"
#include "twistkit/verdict.hpp"

namespace twistkit {

class WordGrowthExceeded : public std::runtime_error {
public:
    explicit WordGrowthExceeded(std::size_t cap)
        : std::runtime_error("free word length exceeded cap of " + std::to_string(cap)), cap_(cap) {}
    std::size_t cap() const { return cap_; }

private:
    std::size_t cap_;
};

// Images of the free generators of pi_1(F, *) (basepoint on the boundary)
// under every standard twist and its inverse. Built once per genus.
class TwistTable {
public:
    static const TwistTable& get(int genus);

    int genus() const { return genus_; }

    // Image of generator k (1 <= k <= 2g), or its inverse for k < 0.
    const FreeWord& image(CurveId c, int sign, Gen k) const;

    // Column k holds the chain-basis class of generator k.
    const IntMatrix& abelianization() const { return abel_; }

private:
    explicit TwistTable(int genus);

    int genus_;
    // images_[{curve, sign}][2*(k-1)] = image of x_k, [2*(k-1)+1] = its inverse
    std::map<std::pair<CurveId, int>, std::vector<FreeWord>> images_;
    IntMatrix abel_;
};

IntVec abelianize(const FreeWord& w, int genus);

FreeWord apply_twist(const Twist& t, const FreeWord& w, const SurfaceSig& sig, std::size_t cap = default_word_cap);
FreeWord apply_word(const TwistWord& tw, const FreeWord& w, std::size_t cap = default_word_cap);

// Dehn's algorithm for the surface group <x_i, y_i | [x_1,y_1]...[x_g,y_g]>, g >= 2.
class DehnReducer {
public:
    explicit DehnReducer(int genus);

    // A freely reduced word containing no more than half of a cyclic
    // conjugate of the relator or its inverse.
    FreeWord reduce(const FreeWord& w) const;
    bool is_trivial(const FreeWord& w) const { return reduce(w).empty(); }

private:
    static std::size_t slot(Gen g) { return g > 0 ? 2 * static_cast<std::size_t>(g - 1) : 2 * static_cast<std::size_t>(-g - 1) + 1; }

    int genus_;
    std::vector<Gen> rel_;      // relator
    std::vector<Gen> rel_inv_;  // its inverse
    std::vector<int> pos_rel_;  // slot -> index in rel_
    std::vector<int> pos_inv_;
};

// Exact equality in Map(F, dF), b = 1: both words send every generator to the same reduced word.
Verdict mcg_equal_rel_boundary(const TwistWord& a, const TwistWord& b, std::size_t cap = default_word_cap);

// Equality on a closed surface: homology for g = 1, Dehn's algorithm on the
// induced automorphisms of the surface group for g >= 2.
Verdict closed_equal(const TwistWord& a, const TwistWord& b, std::size_t cap = default_word_cap);

}  // namespace twistkit
