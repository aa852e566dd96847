#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twistkit/int_matrix.hpp"

namespace twistkit {

// Genus g surface with b in {0, 1} boundary components.
struct SurfaceSig {
    int genus = 1;
    int boundary = 0;

    bool closed() const { return boundary == 0; }
    int rank() const { return 2 * genus; }
    void validate() const;
    std::string to_string() const;

    auto operator<=>(const SurfaceSig&) const = default;
};

enum class CurveKind : std::uint8_t { A, B, D, E, Delta };

// A curve of the standard system.
//
// A(i), B(i) form the chain c_1 = A(1), c_2 = B(1), c_3 = A(2), ... in which
// consecutive curves meet once. D(k), E(k) (2 <= k <= g) are the two boundary
// curves of a regular neighbourhood of c_1 ... c_{2k-1}; D2, E2 are the pair of
// the chain relation (a1 b1 a2)^4 = d2 e2. Delta is parallel to the boundary.
struct CurveId {
    CurveKind kind = CurveKind::A;
    int index = 1;

    static constexpr CurveId a(int i) { return {CurveKind::A, i}; }
    static constexpr CurveId b(int i) { return {CurveKind::B, i}; }
    static constexpr CurveId d(int k) { return {CurveKind::D, k}; }
    static constexpr CurveId e(int k) { return {CurveKind::E, k}; }
    static constexpr CurveId delta() { return {CurveKind::Delta, 0}; }

    // Position in the chain (1-based) for A/B curves.
    std::optional<int> chain_position() const;

    auto operator<=>(const CurveId&) const = default;
};

// Inverse of chain_position: c_j for 1 <= j <= 2g.
CurveId chain_curve(int j);

std::string curve_name(CurveId c);
std::optional<CurveId> parse_curve(std::string_view name);

bool is_valid(CurveId c, const SurfaceSig& sig);
bool is_nonseparating(CurveId c);

std::vector<CurveId> standard_curves(const SurfaceSig& sig);

IntVec homology_class(CurveId c, const SurfaceSig& sig);

// Intersection pairing in the chain basis: <c_j, c_{j+1}> = +1.
BigInt intersection(const IntVec& u, const IntVec& v);
IntMatrix intersection_form(int genus);

bool geometric_disjoint(CurveId c1, CurveId c2);

// Plain signed twist about a standard curve; entry of a conjugator.
struct Letter {
    CurveId base;
    int sign = 1;

    Letter inverse() const { return {base, -sign}; }
    auto operator<=>(const Letter&) const = default;
};

using LetterSeq = std::vector<Letter>;

LetterSeq inverse(const LetterSeq& s);
// Free cancellation of adjacent inverse letters.
LetterSeq reduce(LetterSeq s);

// conj * t_base^sign * conj^{-1}, products read left to right.
struct Twist {
    CurveId base;
    int sign = 1;
    LetterSeq conj;

    static Twist plain(CurveId c, int sign = 1) { return {c, sign, {}}; }

    bool is_plain() const { return conj.empty(); }
    Twist inverse() const { return {base, -sign, conj}; }

    // conj * (this) * conj^{-1} with the conjugator flattened and reduced.
    Twist conjugated_by(const LetterSeq& w) const;

    // The letters this twist expands to: conj, base^sign, conj^{-1}.
    LetterSeq expand() const;

    auto operator<=>(const Twist&) const = default;
};

class InvalidCurve : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A word of twists on one surface, composed left to right.
struct TwistWord {
    SurfaceSig surface;
    std::vector<Twist> letters;

    TwistWord() = default;
    TwistWord(SurfaceSig sig, std::vector<Twist> ls = {}) : surface(sig), letters(std::move(ls)) {}

    static TwistWord from_plain(SurfaceSig sig, const LetterSeq& seq);

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    // Throws InvalidCurve if a base or conjugator entry is not on the surface.
    void validate() const;

    bool all_positive() const;
    std::size_t count_sign(int sign) const;

    // Reverse-inverse.
    TwistWord inverse() const;
    TwistWord power(std::size_t n) const;
    LetterSeq expand() const;

    // Same letters on another signature (capping the boundary, for example).
    TwistWord on_surface(SurfaceSig sig) const;

    std::string to_string() const;

    friend TwistWord operator*(const TwistWord& a, const TwistWord& b);
    bool operator==(const TwistWord&) const = default;
};

// a1 b1 a2 b2 ... ag bg
TwistWord chain_word(const SurfaceSig& sig);

}  // namespace twistkit
