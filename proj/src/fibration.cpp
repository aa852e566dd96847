#include "twistkit/fibration.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "twistkit/homology.hpp"

namespace twistkit {

std::string to_string(Base b) { return b == Base::Disk ? "disk" : "sphere"; }

void Fibration::validate() const
{
    fiber.validate();
    if (word.surface != fiber) throw std::invalid_argument("fibration: word surface differs from fiber");
    word.validate();
    if (!word.all_positive()) throw std::invalid_argument("fibration: word has negative letters");
    if (base == Base::Sphere) {
        if (!fiber.closed()) throw std::invalid_argument("fibration: sphere base needs a closed fiber");
        if (!homology_action(word).is_identity())
            throw std::invalid_argument("fibration: word does not close up on homology");
    }
}

std::string AbelianGroup::to_string() const
{
    if (trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << " + ";
        first = false;
    };
    if (rank > 0) {
        sep();
        os << "Z";
        if (rank > 1) os << "^" << rank;
    }
    for (const BigInt& d : torsion) {
        sep();
        os << "Z/" << d.get_str();
    }
    return os.str();
}

std::vector<BigInt> invariant_factors(IntMatrix m)
{
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<BigInt> diag;
    for (std::size_t t = 0; t < std::min(R, C); ++t) {
        for (;;) {
            // Pivot: smallest nonzero absolute value in the remaining block.
            std::size_t pr = R, pc = C;
            for (std::size_t i = t; i < R; ++i)
                for (std::size_t j = t; j < C; ++j)
                    if (sgn(m(i, j)) != 0 && (pr == R || abs(m(i, j)) < abs(m(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == R) return diag;  // remaining block is zero
            if (pr != t)
                for (std::size_t j = 0; j < C; ++j) std::swap(m(pr, j), m(t, j));
            if (pc != t)
                for (std::size_t i = 0; i < R; ++i) std::swap(m(i, pc), m(i, t));
            bool clean = true;
            for (std::size_t i = t + 1; i < R; ++i) {
                if (sgn(m(i, t)) == 0) continue;
                BigInt q = m(i, t) / m(t, t);
                for (std::size_t j = t; j < C; ++j) m(i, j) -= q * m(t, j);
                if (sgn(m(i, t)) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                if (sgn(m(t, j)) == 0) continue;
                BigInt q = m(t, j) / m(t, t);
                for (std::size_t i = t; i < R; ++i) m(i, j) -= q * m(i, t);
                if (sgn(m(t, j)) != 0) clean = false;
            }
            if (clean) break;
        }
        diag.push_back(abs(m(t, t)));
    }
    // Diagonal to divisibility chain: (a, b) -> (gcd, lcm).
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            BigInt g = gcd(diag[i], diag[j]);
            BigInt l = lcm(diag[i], diag[j]);
            diag[i] = g;
            diag[j] = l;
        }
    return diag;
}

AbelianGroup cokernel(const IntMatrix& m)
{
    AbelianGroup g;
    auto d = invariant_factors(m);
    g.rank = m.rows() - d.size();
    for (const BigInt& x : d)
        if (x > 1) g.torsion.push_back(x);
    return g;
}

BigInt euler_characteristic(const Fibration& f)
{
    BigInt k = static_cast<unsigned long>(f.word.size());
    BigInt g = f.fiber.genus;
    if (f.base == Base::Disk) return 2 - 2 * g - f.fiber.boundary + k;
    return 2 * (2 - 2 * g) + k;
}

AbelianGroup first_homology(const Fibration& f)
{
    const std::size_t n = static_cast<std::size_t>(f.fiber.rank());
    IntMatrix m(n, f.word.size());
    for (std::size_t j = 0; j < f.word.size(); ++j) m.set_column(j, twist_class(f.word.letters[j], f.fiber));
    return cokernel(m);
}

bool is_allowable(const Fibration& f)
{
    for (const Twist& t : f.word.letters) {
        IntVec v = twist_class(t, f.fiber);
        bool zero = true;
        for (const BigInt& x : v) zero = zero && sgn(x) == 0;
        if (zero) return false;
    }
    return true;
}

Doubled double_palf(const Fibration& palf, const VerifyOptions& opts)
{
    palf.validate();
    if (palf.base != Base::Disk) throw std::invalid_argument("double: base must be the disk");
    if (palf.fiber.boundary != 1) throw std::invalid_argument("double: fiber must have one boundary component");
    if (!is_allowable(palf)) throw std::invalid_argument("double: fibration is not allowable");
    SurfaceSig closed{palf.fiber.genus, 0};
    TwistWord capped = palf.word.on_surface(closed);
    RewriteReport rep = positivize(capped * capped.inverse(), opts);
    Fibration out{closed, Base::Sphere, rep.output};
    return {std::move(out), std::move(rep)};
}

Fibration fiber_sum(const Fibration& f1, const Fibration& f2)
{
    if (f1.base != Base::Sphere || f2.base != Base::Sphere)
        throw std::invalid_argument("fiber_sum: both fibrations must be over the sphere");
    if (f1.fiber != f2.fiber) throw std::invalid_argument("fiber_sum: fiber signatures differ");
    return {f1.fiber, Base::Sphere, f1.word * f2.word};
}

Fibration gn_word(int n)
{
    if (n < 1) throw std::invalid_argument("gn: n must be at least 1");
    SurfaceSig sig{n, 0};
    return {sig, Base::Sphere, chain_word(sig).power(static_cast<std::size_t>(4 * n + 2))};
}

OpenBook boundary_open_book(const Fibration& palf)
{
    if (palf.fiber.boundary != 1) throw std::invalid_argument("open book: fiber must have one boundary component");
    return {palf.fiber, palf.word};
}

}  // namespace twistkit
