#include "twistkit/homology.hpp"

#include <stdexcept>

namespace twistkit {

namespace {

const IntMatrix& form_inverse(int genus)
{
    thread_local std::vector<IntMatrix> cache;
    if (cache.size() <= static_cast<std::size_t>(genus)) cache.resize(static_cast<std::size_t>(genus) + 1);
    IntMatrix& slot = cache[static_cast<std::size_t>(genus)];
    if (slot.rows() == 0) slot = intersection_form(genus).unimodular_inverse();
    return slot;
}

void transvect_vector(IntVec& x, const IntVec& v, int sign)
{
    BigInt p = intersection(x, v);
    if (p == 0) return;
    if (sign < 0) p = -p;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (v[i] != 0) x[i] += p * v[i];
}

}  // namespace

SympMatrix::SympMatrix(int genus) : genus_(genus), m_(IntMatrix::identity(static_cast<std::size_t>(2 * genus))) {}

SympMatrix::SympMatrix(int genus, IntMatrix m) : genus_(genus), m_(std::move(m))
{
    const auto n = static_cast<std::size_t>(2 * genus);
    if (m_.rows() != n || m_.cols() != n) throw std::invalid_argument("SympMatrix: wrong dimension for genus");
}

void SympMatrix::left_transvect(const IntVec& v, int sign)
{
    const std::size_t n = m_.rows();
    if (v.size() != n) throw std::invalid_argument("transvection: length mismatch");
    IntVec col(n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < n; ++r) col[r] = m_(r, c);
        transvect_vector(col, v, sign);
        for (std::size_t r = 0; r < n; ++r) m_(r, c) = col[r];
    }
}

SympMatrix SympMatrix::inverse() const
{
    const IntMatrix j = intersection_form(genus_);
    return SympMatrix(genus_, form_inverse(genus_) * m_.transposed() * j);
}

bool SympMatrix::is_symplectic() const
{
    const IntMatrix j = intersection_form(genus_);
    return m_.transposed() * j * m_ == j;
}

SympMatrix operator*(const SympMatrix& a, const SympMatrix& b)
{
    if (a.genus_ != b.genus_) throw std::invalid_argument("SympMatrix product: genus mismatch");
    return SympMatrix(a.genus_, a.m_ * b.m_);
}

SympMatrix transvection(const IntVec& v, int sign)
{
    if (v.empty() || v.size() % 2 != 0) throw std::invalid_argument("transvection: vector length must be 2g");
    SympMatrix m(static_cast<int>(v.size() / 2));
    m.left_transvect(v, sign);
    return m;
}

IntVec twist_class(const Twist& t, const SurfaceSig& sig)
{
    IntVec v = homology_class(t.base, sig);
    // The curve of conj * t * conj^{-1} is f^{-1}(c) where f is conj's mapping class.
    for (const Letter& l : inverse(t.conj)) transvect_vector(v, homology_class(l.base, sig), l.sign);
    return v;
}

SympMatrix homology_action(const TwistWord& w)
{
    SympMatrix m(w.surface.genus);
    for (const Twist& t : w.letters) m.left_transvect(twist_class(t, w.surface), t.sign);
    return m;
}

bool matrices_equal(const SympMatrix& a, const SympMatrix& b)
{
    if (a.genus() != b.genus()) throw std::invalid_argument("matrices_equal: dimension mismatch");
    return a.matrix() == b.matrix();
}

bool is_identity(const SympMatrix& m) { return m.is_identity(); }

Verdict homology_equal(const TwistWord& a, const TwistWord& b)
{
    if (a.surface != b.surface) throw std::invalid_argument("homology_equal: words on different surfaces");
    const bool faithful = a.surface.genus == 1 && a.surface.closed();
    const bool eq = matrices_equal(homology_action(a), homology_action(b));
    Verdict v;
    v.exact = faithful || !eq;
    v.outcome = eq ? Outcome::Equal : Outcome::NotEqual;
    v.engine = faithful ? engine_name::homology_faithful : engine_name::homology_necessary;
    return v;
}

std::string to_string(Outcome o)
{
    switch (o) {
    case Outcome::Equal: return "true";
    case Outcome::NotEqual: return "false";
    case Outcome::Unknown: return "unknown";
    }
    return "unknown";
}

}  // namespace twistkit
