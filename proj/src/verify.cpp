#include "twistkit/verify.hpp"

#include <stdexcept>

#include "twistkit/homology.hpp"
#include "twistkit/pi1.hpp"

namespace twistkit {

Verdict verify_equal(const TwistWord& a, const TwistWord& b, const VerifyOptions& opts)
{
    if (a.surface != b.surface) throw std::invalid_argument("verify: words on different surfaces");
    a.validate();
    b.validate();
    switch (opts.engine) {
    case EngineChoice::Homology: return homology_equal(a, b);
    case EngineChoice::Pi1: return mcg_equal_rel_boundary(a, b, opts.cap);
    case EngineChoice::Closed: return closed_equal(a, b, opts.cap);
    case EngineChoice::Auto: break;
    }
    if (a.surface.boundary == 1) return mcg_equal_rel_boundary(a, b, opts.cap);
    return closed_equal(a, b, opts.cap);
}

Verdict verify_or_homology(const TwistWord& a, const TwistWord& b, const VerifyOptions& opts)
{
    Verdict v = verify_equal(a, b, opts);
    if (!v.unknown()) return v;
    return homology_equal(a, b);
}

}  // namespace twistkit

namespace twistkit {

namespace {

TwistWord plain_word(SurfaceSig sig, std::initializer_list<CurveId> cs)
{
    TwistWord w(sig);
    for (CurveId c : cs) w.letters.push_back(Twist::plain(c));
    return w;
}

}  // namespace

std::vector<NamedRelation> standard_relations()
{
    const SurfaceSig s{2, 1};
    const CurveId a1 = CurveId::a(1), b1 = CurveId::b(1), a2 = CurveId::a(2), b2 = CurveId::b(2);
    const CurveId d2 = CurveId::d(2), e2 = CurveId::e(2);
    std::vector<NamedRelation> rs;
    auto braid = [&](CurveId p, CurveId q) {
        rs.push_back({"braid " + curve_name(p) + " " + curve_name(q), plain_word(s, {p, q, p}), plain_word(s, {q, p, q})});
    };
    auto commute = [&](CurveId p, CurveId q) {
        rs.push_back({"commute " + curve_name(p) + " " + curve_name(q), plain_word(s, {p, q}), plain_word(s, {q, p})});
    };
    braid(a1, b1);
    braid(b1, a2);
    braid(a2, b2);
    braid(d2, b2);
    commute(a1, a2);
    commute(a1, b2);
    commute(d2, a1);
    commute(e2, b1);
    commute(d2, e2);
    rs.push_back({"chain (a1 b1 a2)^4 = d2 e2", plain_word(s, {a1, b1, a2}).power(4), plain_word(s, {d2, e2})});
    rs.push_back({"chain^10 = delta", chain_word(s).power(10), plain_word(s, {CurveId::delta()})});
    const SurfaceSig t{1, 0};
    rs.push_back({"torus (a1 b1)^6 = 1", chain_word(t).power(6), TwistWord(t)});
    const SurfaceSig c{2, 0};
    rs.push_back({"closed chain^10 = 1", chain_word(c).power(10), TwistWord(c)});
    return rs;
}

}  // namespace twistkit
