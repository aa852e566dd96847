#include "twistkit/rewriting.hpp"

#include <algorithm>

#include "twistkit/homology.hpp"
#include "twistkit/pi1.hpp"
#include "twistkit/verify.hpp"

namespace twistkit {

namespace {

bool commutes_plainly(const Twist& x, const Twist& y)
{
    if (!x.is_plain() || !y.is_plain()) return false;
    return x.base == y.base || geometric_disjoint(x.base, y.base);
}

void require_genus_two(const SurfaceSig& sig, const char* what)
{
    if (sig.genus < 2) throw std::invalid_argument(std::string(what) + ": genus must be at least 2");
}

TwistWord chain_block(const SurfaceSig& sig)
{
    return TwistWord::from_plain(sig, {{CurveId::a(1), 1}, {CurveId::b(1), 1}, {CurveId::a(2), 1}}).power(4);
}

}  // namespace

RewriteReport commute_pull(const TwistWord& w, const TwistWord& pattern, std::size_t start, const VerifyOptions& opts)
{
    if (w.surface != pattern.surface) throw std::invalid_argument("commute_pull: pattern on a different surface");
    if (start > w.size()) throw RewriteError("commute_pull: start offset past end of word");
    RewriteReport rep{w, w, 0, {}};
    auto& out = rep.output.letters;
    for (std::size_t k = 0; k < pattern.size(); ++k) {
        const Twist& target = pattern.letters[k];
        std::size_t pos = start + k;
        std::size_t j = pos;
        while (j < out.size() && out[j] != target) ++j;
        if (j >= out.size())
            throw RewriteError("commute_pull: pattern letter " + std::to_string(k + 1) + " (" +
                               TwistWord(w.surface, {target}).to_string() + ") not realizable");
        for (; j > pos; --j) {
            Twist x = out[j - 1];
            const Twist& y = out[j];
            if (!commutes_plainly(x, y)) x = x.conjugated_by(inverse(y.expand()));
            out[j - 1] = y;
            out[j] = std::move(x);
            ++rep.steps;
        }
    }
    rep.verified = verify_equal(rep.input, rep.output, opts);
    return rep;
}

ChainFactorization factor_chain_power(int n, const VerifyOptions& opts)
{
    SurfaceSig sig{n, 1};
    sig.validate();
    require_genus_two(sig, "factor_chain_power");
    TwistWord block = chain_block(sig);
    RewriteReport rep = commute_pull(chain_word(sig).power(4), block, 0, opts);
    TwistWord prefix(sig, {rep.output.letters.begin(), rep.output.letters.begin() + 12});
    TwistWord remainder(sig, {rep.output.letters.begin() + 12, rep.output.letters.end()});
    return {std::move(prefix), std::move(remainder), std::move(rep)};
}

TwistWord inverse_twist_expansion(const SurfaceSig& sig)
{
    return negative_chain_expansion(1, sig);
}

TwistWord negative_chain_expansion(int j, const SurfaceSig& sig)
{
    sig.validate();
    int top = 2 * sig.genus;
    if (j < 1 || j > top) throw InvalidCurve("chain position out of range: " + std::to_string(j));
    TwistWord chain = chain_word(sig);
    TwistWord out(sig);
    for (int k = j + 1; k <= top; ++k) out.letters.push_back(Twist::plain(chain_curve(k)));
    out = out * chain.power(4 * sig.genus + 1);
    for (int k = 1; k < j; ++k) out.letters.push_back(Twist::plain(chain_curve(k)));
    return out;
}

std::size_t expansion_length(int genus)
{
    std::size_t g = static_cast<std::size_t>(genus);
    return (2 * g - 1) + 2 * g * (4 * g + 1);
}

LetterSeq change_of_coordinates(CurveId c, const SurfaceSig& sig)
{
    if (!is_valid(c, sig) || !is_nonseparating(c))
        throw InvalidCurve("no change of coordinates for " + curve_name(c));
    // W_k with c_k = W_k a1 W_k^-1: W_1 = 1, W_k = c_{k-1} c_k W_{k-1}.
    auto transport = [](int k) {
        LetterSeq w;
        for (int i = 2; i <= k; ++i) {
            LetterSeq next{{chain_curve(i - 1), 1}, {chain_curve(i), 1}};
            next.insert(next.end(), w.begin(), w.end());
            w = std::move(next);
        }
        return w;
    };
    int p = c.chain_position().value_or(0);
    if (p > 0) return inverse(transport(p));
    // d meets c_{2k} once, so d = (d c)^-1 c (d c).
    CurveId meet = chain_curve(2 * c.index);
    LetterSeq v = inverse(transport(2 * c.index));
    v.push_back({c, 1});
    v.push_back({meet, 1});
    return reduce(std::move(v));
}

RewriteReport positivize(const TwistWord& w, const VerifyOptions& opts)
{
    w.validate();
    if (!w.surface.closed()) throw std::invalid_argument("positivize: surface must be closed (b = 0)");
    for (const Twist& t : w.letters)
        if (!is_nonseparating(t.base)) throw InvalidCurve("positivize: separating base " + curve_name(t.base));
    RewriteReport rep{w, TwistWord(w.surface), 0, {}};
    for (const Twist& t : w.letters) {
        if (t.sign > 0) {
            rep.output.letters.push_back(t);
            continue;
        }
        int p = t.base.chain_position().value_or(0);
        TwistWord exp = p > 0 ? negative_chain_expansion(p, w.surface) : inverse_twist_expansion(w.surface);
        LetterSeq v_inv = p > 0 ? LetterSeq{} : inverse(change_of_coordinates(t.base, w.surface));
        for (const Twist& e : exp.letters) rep.output.letters.push_back(e.conjugated_by(v_inv).conjugated_by(t.conj));
        ++rep.steps;
    }
    rep.verified = verify_or_homology(rep.input, rep.output, opts);
    return rep;
}

RewriteReport chain_substitute(const TwistWord& w, std::size_t from, const VerifyOptions& opts)
{
    require_genus_two(w.surface, "chain_substitute");
    TwistWord block = chain_block(w.surface);
    const auto& ls = w.letters;
    std::size_t n = block.size();
    for (std::size_t i = from; i + n <= ls.size(); ++i) {
        if (!std::equal(block.letters.begin(), block.letters.end(), ls.begin() + static_cast<std::ptrdiff_t>(i)))
            continue;
        RewriteReport rep{w, TwistWord(w.surface), 1, {}};
        auto& out = rep.output.letters;
        out.assign(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(i));
        out.push_back(Twist::plain(CurveId::d(2)));
        out.push_back(Twist::plain(CurveId::e(2)));
        out.insert(out.end(), ls.begin() + static_cast<std::ptrdiff_t>(i + n), ls.end());
        rep.verified = verify_equal(rep.input, rep.output, opts);
        return rep;
    }
    throw RewriteError("chain_substitute: no occurrence of (a1 b1 a2)^4");
}

bool chain_relation_holds_on_homology(const IntVec& d_class, const IntVec& e_class)
{
    SurfaceSig sig{2, 1};
    SympMatrix lhs = homology_action(chain_block(sig));
    SympMatrix rhs = SympMatrix::identity(2);
    rhs.left_transvect(d_class, 1);
    rhs.left_transvect(e_class, 1);
    return lhs == rhs;
}

bool chain_relation_selftest()
{
    SurfaceSig sig{2, 1};
    if (!chain_relation_holds_on_homology(homology_class(CurveId::d(2), sig), homology_class(CurveId::e(2), sig)))
        return false;
    TwistWord de = TwistWord::from_plain(sig, {{CurveId::d(2), 1}, {CurveId::e(2), 1}});
    return mcg_equal_rel_boundary(chain_block(sig), de).equal();
}

}  // namespace twistkit
