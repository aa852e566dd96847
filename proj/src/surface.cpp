#include "twistkit/surface.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>

namespace twistkit {

void SurfaceSig::validate() const
{
    if (genus < 1) throw std::invalid_argument("surface genus must be >= 1");
    if (boundary != 0 && boundary != 1) throw std::invalid_argument("surface boundary must be 0 or 1");
}

std::string SurfaceSig::to_string() const
{
    return "(g=" + std::to_string(genus) + ",b=" + std::to_string(boundary) + ")";
}

std::optional<int> CurveId::chain_position() const
{
    switch (kind) {
    case CurveKind::A: return 2 * index - 1;
    case CurveKind::B: return 2 * index;
    default: return std::nullopt;
    }
}

CurveId chain_curve(int j)
{
    return j % 2 == 1 ? CurveId::a((j + 1) / 2) : CurveId::b(j / 2);
}

std::string curve_name(CurveId c)
{
    switch (c.kind) {
    case CurveKind::A: return "a" + std::to_string(c.index);
    case CurveKind::B: return "b" + std::to_string(c.index);
    case CurveKind::D: return "d" + std::to_string(c.index);
    case CurveKind::E: return "e" + std::to_string(c.index);
    case CurveKind::Delta: return "delta";
    }
    return "?";
}

std::optional<CurveId> parse_curve(std::string_view name)
{
    if (name == "delta") return CurveId::delta();
    if (name.size() < 2) return std::nullopt;
    CurveKind kind;
    switch (name.front()) {
    case 'a': kind = CurveKind::A; break;
    case 'b': kind = CurveKind::B; break;
    case 'd': kind = CurveKind::D; break;
    case 'e': kind = CurveKind::E; break;
    default: return std::nullopt;
    }
    const auto digits = name.substr(1);
    if (digits.front() == '0') return std::nullopt;
    int idx = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), idx);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || idx < 1) return std::nullopt;
    return CurveId{kind, idx};
}

bool is_valid(CurveId c, const SurfaceSig& sig)
{
    switch (c.kind) {
    case CurveKind::A:
    case CurveKind::B: return c.index >= 1 && c.index <= sig.genus;
    case CurveKind::D:
    case CurveKind::E: return c.index >= 2 && c.index <= sig.genus;
    case CurveKind::Delta: return sig.boundary == 1;
    }
    return false;
}

bool is_nonseparating(CurveId c) { return c.kind != CurveKind::Delta; }

std::vector<CurveId> standard_curves(const SurfaceSig& sig)
{
    sig.validate();
    std::vector<CurveId> out;
    for (int i = 1; i <= sig.genus; ++i) {
        out.push_back(CurveId::a(i));
        out.push_back(CurveId::b(i));
    }
    if (sig.genus >= 2) {
        out.push_back(CurveId::d(2));
        out.push_back(CurveId::e(2));
    }
    if (sig.boundary == 1) out.push_back(CurveId::delta());
    return out;
}

IntVec homology_class(CurveId c, const SurfaceSig& sig)
{
    if (!is_valid(c, sig)) throw InvalidCurve("curve " + curve_name(c) + " is not valid on surface " + sig.to_string());
    IntVec v(static_cast<std::size_t>(sig.rank()), BigInt(0));
    if (auto pos = c.chain_position()) {
        v[static_cast<std::size_t>(*pos - 1)] = 1;
    } else if (c.kind == CurveKind::D || c.kind == CurveKind::E) {
        // [A1] + ... + [Ak]; the sign is immaterial for the twist.
        for (int i = 1; i <= c.index; ++i) v[static_cast<std::size_t>(2 * i - 2)] = 1;
    }
    return v;
}

BigInt intersection(const IntVec& u, const IntVec& v)
{
    if (u.size() != v.size()) throw std::invalid_argument("intersection: length mismatch");
    BigInt s = 0;
    for (std::size_t j = 0; j + 1 < u.size(); ++j) s += u[j] * v[j + 1] - u[j + 1] * v[j];
    return s;
}

IntMatrix intersection_form(int genus)
{
    const std::size_t n = static_cast<std::size_t>(2 * genus);
    IntMatrix j(n, n);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        j(k, k + 1) = 1;
        j(k + 1, k) = -1;
    }
    return j;
}

bool geometric_disjoint(CurveId c1, CurveId c2)
{
    if (c1 == c2) return false;
    if (c1.kind == CurveKind::Delta || c2.kind == CurveKind::Delta) return true;
    const auto p1 = c1.chain_position();
    const auto p2 = c2.chain_position();
    if (p1 && p2) return std::abs(*p1 - *p2) != 1;
    if (!p1 && !p2) return true;  // D/E curves are pairwise disjoint
    const int pos = p1 ? *p1 : *p2;
    const int k = p1 ? c2.index : c1.index;
    return pos != 2 * k;
}

LetterSeq inverse(const LetterSeq& s)
{
    LetterSeq out;
    out.reserve(s.size());
    for (auto it = s.rbegin(); it != s.rend(); ++it) out.push_back(it->inverse());
    return out;
}

LetterSeq reduce(LetterSeq s)
{
    LetterSeq out;
    out.reserve(s.size());
    for (const Letter& l : s) {
        if (!out.empty() && out.back().base == l.base && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Twist Twist::conjugated_by(const LetterSeq& w) const
{
    LetterSeq c = w;
    c.insert(c.end(), conj.begin(), conj.end());
    return {base, sign, reduce(std::move(c))};
}

LetterSeq Twist::expand() const
{
    LetterSeq out = conj;
    out.push_back({base, sign});
    const LetterSeq inv = twistkit::inverse(conj);
    out.insert(out.end(), inv.begin(), inv.end());
    return out;
}

TwistWord TwistWord::from_plain(SurfaceSig sig, const LetterSeq& seq)
{
    TwistWord w(sig);
    w.letters.reserve(seq.size());
    for (const Letter& l : seq) w.letters.push_back(Twist::plain(l.base, l.sign));
    return w;
}

void TwistWord::validate() const
{
    surface.validate();
    auto check = [&](CurveId c) {
        if (!is_valid(c, surface))
            throw InvalidCurve("curve " + curve_name(c) + " is not valid on surface " + surface.to_string());
    };
    for (const Twist& t : letters) {
        if (t.sign != 1 && t.sign != -1) throw std::invalid_argument("twist sign must be +1 or -1");
        check(t.base);
        for (const Letter& l : t.conj) {
            if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("conjugator sign must be +1 or -1");
            check(l.base);
        }
    }
}

bool TwistWord::all_positive() const { return count_sign(-1) == 0; }

std::size_t TwistWord::count_sign(int sign) const
{
    std::size_t n = 0;
    for (const Twist& t : letters) n += (t.sign == sign) ? 1 : 0;
    return n;
}

TwistWord TwistWord::inverse() const
{
    TwistWord out(surface);
    out.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.push_back(it->inverse());
    return out;
}

TwistWord TwistWord::power(std::size_t n) const
{
    TwistWord out(surface);
    out.letters.reserve(letters.size() * n);
    for (std::size_t i = 0; i < n; ++i) out.letters.insert(out.letters.end(), letters.begin(), letters.end());
    return out;
}

LetterSeq TwistWord::expand() const
{
    LetterSeq out;
    for (const Twist& t : letters) {
        const LetterSeq e = t.expand();
        out.insert(out.end(), e.begin(), e.end());
    }
    return out;
}

TwistWord TwistWord::on_surface(SurfaceSig sig) const
{
    TwistWord out(sig, letters);
    out.validate();
    return out;
}

namespace {

void put_letter(std::ostream& os, const Letter& l)
{
    os << curve_name(l.base);
    if (l.sign < 0) os << "^-1";
}

}  // namespace

std::string TwistWord::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (const Twist& t : letters) {
        if (!first) os << ' ';
        first = false;
        if (!t.conj.empty()) {
            os << '[';
            for (std::size_t i = 0; i < t.conj.size(); ++i) {
                if (i) os << ' ';
                put_letter(os, t.conj[i]);
            }
            os << "]";
        }
        put_letter(os, {t.base, t.sign});
    }
    return os.str();
}

TwistWord operator*(const TwistWord& a, const TwistWord& b)
{
    if (a.surface != b.surface) throw std::invalid_argument("cannot concatenate words on different surfaces");
    TwistWord out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

TwistWord chain_word(const SurfaceSig& sig)
{
    TwistWord w(sig);
    for (int j = 1; j <= sig.rank(); ++j) w.letters.push_back(Twist::plain(chain_curve(j)));
    return w;
}

}  // namespace twistkit
