#pragma once

#include "twistkit/int_matrix.hpp"
#include "twistkit/surface.hpp"
#include "twistkit/verdict.hpp"

namespace twistkit {

// Integer 2g x 2g matrix preserving the chain intersection form.
class SympMatrix {
public:
    explicit SympMatrix(int genus);
    SympMatrix(int genus, IntMatrix m);

    static SympMatrix identity(int genus) { return SympMatrix(genus); }

    int genus() const { return genus_; }
    const IntMatrix& matrix() const { return m_; }

    IntVec apply(const IntVec& v) const { return m_.apply(v); }

    // In place M <- T_v^sign * M.
    void left_transvect(const IntVec& v, int sign);

    // Inverse through the form: M^{-1} = J^{-1} M^T J.
    SympMatrix inverse() const;

    bool is_symplectic() const;
    bool is_identity() const { return m_.is_identity(); }

    friend SympMatrix operator*(const SympMatrix& a, const SympMatrix& b);
    friend bool operator==(const SympMatrix& a, const SympMatrix& b) = default;

private:
    int genus_;
    IntMatrix m_;
};

// x -> x + sign * <x, v> v
SympMatrix transvection(const IntVec& v, int sign = 1);

// Action of the word on H_1, letters applied left to right:
// the result is M_{w_k} ... M_{w_1}.
SympMatrix homology_action(const TwistWord& w);

// Homology class of the curve twisted by t (conjugator applied).
IntVec twist_class(const Twist& t, const SurfaceSig& sig);

bool matrices_equal(const SympMatrix& a, const SympMatrix& b);
bool is_identity(const SympMatrix& m);

// Compare two words by their homology action. Faithful on the closed torus.
Verdict homology_equal(const TwistWord& a, const TwistWord& b);

}  // namespace twistkit
