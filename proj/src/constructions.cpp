#include "twistkit/constructions.hpp"

#include <future>
#include <stdexcept>

#include "twistkit/verify.hpp"

namespace twistkit {

FamilyReport filling_family(int n, const VerifyOptions& opts)
{
    if (n < 2) throw std::invalid_argument("family: n must be at least 2");
    SurfaceSig sig{n, 1};
    FamilyReport rep;
    rep.n = n;
    TwistWord x = chain_word(sig).power(static_cast<std::size_t>(4 * n + 2));
    rep.fillings.push_back({sig, Base::Disk, x});

    const TwistWord block = TwistWord::from_plain(sig, {{CurveId::a(1), 1}, {CurveId::b(1), 1}, {CurveId::a(2), 1}}).power(4);
    const VerifyOptions cheap{EngineChoice::Homology, opts.cap};
    std::size_t offset = 0;
    for (int i = 0; i < n; ++i) {
        RewriteReport pulled = commute_pull(x, block, offset, cheap);
        RewriteReport subst = chain_substitute(pulled.output, offset, cheap);
        x = subst.output;
        offset += static_cast<std::size_t>(8 * n - 10);
        rep.fillings.push_back({sig, Base::Disk, x});
    }

    std::vector<std::future<Verdict>> pending;
    for (std::size_t i = 1; i < rep.fillings.size(); ++i)
        pending.push_back(std::async(std::launch::async, [&, i] {
            return verify_or_homology(rep.fillings[i].word, rep.fillings[0].word, opts);
        }));
    for (auto& p : pending) rep.equal_verdicts.push_back(p.get());

    for (const Fibration& f : rep.fillings) {
        rep.chis.push_back(euler_characteristic(f));
        rep.h1s.push_back(first_homology(f));
        rep.allowable.push_back(is_allowable(f));
    }
    return rep;
}

TrefoilCompletions trefoil_completions()
{
    SurfaceSig page{1, 1}, closed{1, 0};
    TwistWord ab = TwistWord::from_plain(page, {{CurveId::a(1), 1}, {CurveId::b(1), 1}});
    Fibration palf{page, Base::Disk, ab};
    Fibration big = double_palf(palf).fibration;
    TwistWord ab_closed = ab.on_surface(closed);
    Fibration small{closed, Base::Sphere, ab_closed * ab_closed.power(5)};
    small.validate();
    return {std::move(big), small, verify_equal(big.word, small.word)};
}

CurveId copy_two_curve(CurveId c, int genus)
{
    auto p = c.chain_position();
    if (!p || *p > 2 * genus) throw InvalidCurve("branched double: no copy-2 image of " + curve_name(c));
    if (*p == 2 * genus) return CurveId::d(2 * genus);
    return chain_curve(2 * genus + 1 + *p);
}

BranchedDouble branched_double_cover(const SurfaceSig& page, const TwistWord& monodromy)
{
    page.validate();
    if (page.boundary != 1) throw std::invalid_argument("branched double: page must have one boundary component");
    if (monodromy.surface != page) throw std::invalid_argument("branched double: monodromy not on the page");
    monodromy.validate();
    const int g = page.genus;
    SurfaceSig fiber{2 * g, 0};

    auto strip = [](const LetterSeq& s) {
        LetterSeq out;
        for (const Letter& l : s)
            if (l.base.kind != CurveKind::Delta) out.push_back(l);
        return reduce(std::move(out));
    };
    TwistWord phi(fiber);
    for (const Twist& t : monodromy.letters) {
        if (t.base.kind == CurveKind::Delta) continue;  // the two copies' deltas cancel
        if (!t.base.chain_position()) throw InvalidCurve("branched double: unsupported base " + curve_name(t.base));
        phi.letters.push_back({t.base, t.sign, strip(t.conj)});
    }
    TwistWord second(fiber);
    for (const Twist& t : phi.inverse().letters) {
        Twist m{copy_two_curve(t.base, g), t.sign, {}};
        for (const Letter& l : t.conj) m.conj.push_back({copy_two_curve(l.base, g), l.sign});
        second.letters.push_back(std::move(m));
    }

    // Swap on H_1 in the basis of the two chains.
    const std::size_t dim = static_cast<std::size_t>(4 * g);
    IntMatrix basis(dim, dim), image(dim, dim);
    for (int j = 1; j <= 2 * g; ++j) {
        IntVec one = homology_class(chain_curve(j), fiber);
        IntVec two = homology_class(copy_two_curve(chain_curve(j), g), fiber);
        // Orient D_{2g} so that the copy-2 chain pairs like the copy-1 chain.
        if (j == 2 * g && intersection(homology_class(chain_curve(4 * g), fiber), two) < 0)
            for (BigInt& x : two) x = -x;
        basis.set_column(static_cast<std::size_t>(j - 1), one);
        basis.set_column(static_cast<std::size_t>(2 * g + j - 1), two);
        image.set_column(static_cast<std::size_t>(j - 1), two);
        image.set_column(static_cast<std::size_t>(2 * g + j - 1), one);
    }
    SympMatrix swap(fiber.genus, image * basis.unimodular_inverse());

    return {fiber, phi * second, phi, second, swap};
}

AbelianGroup mapping_torus_homology(const TwistWord& monodromy)
{
    if (!monodromy.surface.closed()) throw std::invalid_argument("mapping torus: surface must be closed");
    const IntMatrix m = homology_action(monodromy).matrix();
    AbelianGroup h = cokernel(m - IntMatrix::identity(m.rows()));
    h.rank += 1;
    return h;
}

Splitting splitting_words(const TwistWord& phi, const VerifyOptions& opts)
{
    RewriteReport first = positivize(phi, opts);
    RewriteReport second = positivize(first.output.inverse(), opts);
    return {{phi.surface, Base::Disk, first.output}, {phi.surface, Base::Disk, second.output}};
}

}  // namespace twistkit
