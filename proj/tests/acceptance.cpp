// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "twistkit/cli.hpp"
#include "twistkit/constructions.hpp"
#include "twistkit/homology.hpp"
#include "twistkit/pi1.hpp"
#include "twistkit/rewriting.hpp"
#include "twistkit/verify.hpp"

using namespace twistkit;

namespace {

// Time limits in milliseconds.
constexpr double torus_relation_ms = 1.0;
constexpr double boundary_twist_g2_ms = 60'000.0;
constexpr double hyperelliptic_homology_ms = 1'000.0;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) { return std::chrono::duration<double, std::milli>(Clock::now() - t0).count(); }

struct Check {
    bool ok = true;
    std::string why;
    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) why = what;
        ok = ok && cond;
    }
};

TwistWord plain(SurfaceSig sig, const std::vector<std::pair<CurveId, int>>& ls)
{
    TwistWord w(sig);
    for (auto [c, s] : ls) w.letters.push_back(Twist::plain(c, s));
    return w;
}

// ---- criterion 11 oracle: genus-1 automorphisms by string substitution ----
// Free group on x, y; uppercase is the inverse letter.

std::string naive_reduce(std::string w)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            char p = w[i], q = w[i + 1];
            if (p != q && std::tolower(p) == std::tolower(q)) {
                w.erase(i, 2);
                changed = true;
                break;
            }
        }
    }
    return w;
}

std::string naive_invert(const std::string& w)
{
    std::string r(w.rbegin(), w.rend());
    for (char& c : r) c = std::islower(c) ? static_cast<char>(std::toupper(c)) : static_cast<char>(std::tolower(c));
    return r;
}

// Images of x and y under a1^{+-1}, b1^{+-1}.
std::pair<std::string, std::string> naive_generator_images(char letter)
{
    switch (letter) {
    case 'a': return {"x", "yX"};
    case 'A': return {"x", "yx"};
    case 'b': return {"xy", "y"};
    default: return {"xY", "y"};  // 'B'
    }
}

std::string naive_substitute(const std::string& w, const std::pair<std::string, std::string>& img)
{
    std::string out;
    for (char c : w) {
        if (c == 'x') out += img.first;
        else if (c == 'y') out += img.second;
        else if (c == 'X') out += naive_invert(img.first);
        else out += naive_invert(img.second);
    }
    return naive_reduce(out);
}

// The word's images of x and y, applying twists left to right.
std::pair<std::string, std::string> naive_images(const std::string& word)
{
    std::pair<std::string, std::string> cur{"x", "y"};
    for (char t : word) {
        auto img = naive_generator_images(t);
        cur = {naive_substitute(cur.first, img), naive_substitute(cur.second, img)};
    }
    return cur;
}

TwistWord to_twist_word(const std::string& w)
{
    SurfaceSig sig{1, 1};
    TwistWord out(sig);
    for (char c : w) out.letters.push_back(Twist::plain(std::tolower(c) == 'a' ? CurveId::a(1) : CurveId::b(1), std::islower(c) ? 1 : -1));
    return out;
}

// ---- criteria ----

Check torus_relations()
{
    Check c;
    SurfaceSig t{1, 0};
    const CurveId a = CurveId::a(1), b = CurveId::b(1);
    TwistWord ab = plain(t, {{a, 1}, {b, 1}});
    struct Rel {
        const char* name;
        TwistWord lhs, rhs;
    };
    std::vector<Rel> rels{
        {"(ab)^6 = 1", ab.power(6), TwistWord(t)},
        {"a^-1 = b(ab)^5", plain(t, {{a, -1}}), plain(t, {{b, 1}}) * ab.power(5)},
        {"b^-1 = (ab)^5 a", plain(t, {{b, -1}}), ab.power(5) * plain(t, {{a, 1}})},
        {"(ab)^-1 = (ab)^5", ab.inverse(), ab.power(5)},
    };
    for (const Rel& r : rels) {
        auto t0 = Clock::now();
        Verdict v = verify_equal(r.lhs, r.rhs);
        double ms = ms_since(t0);
        c.require(v.equal() && v.exact && v.engine == engine_name::homology_faithful, std::string(r.name) + " not certified");
        c.require(ms < torus_relation_ms, std::string(r.name) + " took " + std::to_string(ms) + " ms");
    }
    return c;
}

Check boundary_twist()
{
    Check c;
    for (int g = 1; g <= 2; ++g) {
        SurfaceSig s{g, 1};
        TwistWord lhs = chain_word(s).power(static_cast<std::size_t>(4 * g + 2));
        TwistWord delta = plain(s, {{CurveId::delta(), 1}});
        auto t0 = Clock::now();
        Verdict v = mcg_equal_rel_boundary(lhs, delta);
        double ms = ms_since(t0);
        c.require(v.equal() && v.exact, "g=" + std::to_string(g) + " verdict " + to_string(v.outcome));
        if (g == 2) c.require(ms < boundary_twist_g2_ms, "g=2 took " + std::to_string(ms) + " ms");
    }
    return c;
}

Check hyperelliptic_homology()
{
    Check c;
    auto t0 = Clock::now();
    for (int n = 1; n <= 10; ++n) {
        SurfaceSig s{n, 0};
        c.require(homology_action(chain_word(s).power(static_cast<std::size_t>(4 * n + 2))).is_identity(),
                  "n=" + std::to_string(n) + " not identity");
    }
    double ms = ms_since(t0);
    c.require(ms < hyperelliptic_homology_ms, "took " + std::to_string(ms) + " ms");
    return c;
}

Check chain_relation()
{
    Check c;
    c.require(chain_relation_selftest(), "self test false");
    SurfaceSig s{2, 1};
    TwistWord lhs = plain(s, {{CurveId::a(1), 1}, {CurveId::b(1), 1}, {CurveId::a(2), 1}}).power(4);
    TwistWord rhs = plain(s, {{CurveId::d(2), 1}, {CurveId::e(2), 1}});
    c.require(homology_equal(lhs, rhs).equal(), "homology engine");
    c.require(mcg_equal_rel_boundary(lhs, rhs).equal(), "pi1 engine");
    return c;
}

Check chain_power_factor()
{
    Check c;
    for (int n = 2; n <= 5; ++n) {
        auto f = factor_chain_power(n);
        std::string tag = "n=" + std::to_string(n) + ": ";
        c.require(f.remainder.size() == static_cast<std::size_t>(8 * n - 12), tag + "remainder length");
        c.require(f.remainder.all_positive(), tag + "remainder not positive");
        for (const Twist& t : f.remainder.letters) c.require(is_nonseparating(t.base), tag + "separating base");
        SurfaceSig s{n, 1};
        c.require(homology_equal(f.prefix * f.remainder, chain_word(s).power(4)).equal(), tag + "homology");
        if (n == 2) c.require(f.report.verified.equal() && f.report.verified.exact, tag + "faithful verdict");
    }
    return c;
}

Check filling_family_check()
{
    Check c;
    auto two = filling_family(2);
    c.require(two.chis == std::vector<BigInt>{37, 27, 17}, "n=2 chis");
    for (const Verdict& v : two.equal_verdicts)
        c.require(v.equal() && v.exact && v.engine == engine_name::pi1_boundary, "n=2 verdict");
    for (const auto& h : two.h1s) c.require(h.trivial(), "n=2 H1");
    for (bool a : two.allowable) c.require(a, "n=2 allowable");
    auto three = filling_family(3);
    c.require(three.chis == std::vector<BigInt>{79, 69, 59, 49}, "n=3 chis");
    for (const Verdict& v : three.equal_verdicts) c.require(v.equal(), "n=3 verdict");
    return c;
}

Check trefoil()
{
    Check c;
    auto t = trefoil_completions();
    c.require(t.big.word.size() == 24, "big length");
    c.require(homology_action(t.big.word).is_identity(), "big action");
    c.require(euler_characteristic(t.big) == 24, "big chi");
    c.require(t.small.word.size() == 12, "small length");
    c.require(euler_characteristic(t.small) == 12, "small chi");
    c.require(t.equal.equal() && t.equal.exact, "faithful comparison");
    return c;
}

Check positivization()
{
    Check c;
    std::mt19937 rng(20261018);
    for (int i = 0; i < 100; ++i) {
        int g = 1 + i % 3;
        SurfaceSig s{g, 0};
        std::vector<CurveId> pool;
        for (CurveId cv : standard_curves(s))
            if (is_nonseparating(cv)) pool.push_back(cv);
        std::uniform_int_distribution<std::size_t> len(0, 10), pick(0, pool.size() - 1);
        std::uniform_int_distribution<int> coin(0, 1);
        TwistWord w(s);
        std::size_t n = len(rng);
        for (std::size_t k = 0; k < n; ++k) w.letters.push_back(Twist::plain(pool[pick(rng)], coin(rng) ? 1 : -1));
        auto rep = positivize(w, {EngineChoice::Homology, default_word_cap});
        std::size_t want = w.count_sign(1) + w.count_sign(-1) * ((2 * g - 1) + 2 * g * (4 * g + 1));
        c.require(rep.output.all_positive(), "output not positive");
        c.require(rep.output.size() == want, "length formula");
        c.require(homology_action(rep.output) == homology_action(w), "homology action changed");
    }
    return c;
}

Check branched_double()
{
    Check c;
    SurfaceSig p{1, 1};
    TwistWord a = plain(p, {{CurveId::a(1), 1}});
    TwistWord ab = plain(p, {{CurveId::a(1), 1}, {CurveId::b(1), 1}});
    for (const TwistWord& phi : {a, ab, ab.power(3)}) {
        auto bd = branched_double_cover(p, phi);
        auto m1 = homology_action(bd.first_half), m2 = homology_action(bd.second_half);
        c.require(m1 * m2 == m2 * m1, phi.to_string() + ": halves do not commute");
        auto m = homology_action(bd.monodromy);
        c.require(bd.swap * m * bd.swap.inverse() == m.inverse(), phi.to_string() + ": S M S^-1 != M^-1");
    }
    return c;
}

Check single_twist_torus()
{
    Check c;
    SurfaceSig t{1, 0};
    auto h = mapping_torus_homology(plain(t, {{CurveId::a(1), 1}}));
    c.require(h.rank == 2 && h.torsion.empty(), "got " + h.to_string());
    return c;
}

Check oracle_equivalence()
{
    Check c;
    std::vector<std::string> words{""};
    for (std::size_t len = 1; len <= 4; ++len) {
        std::vector<std::string> next;
        for (const std::string& w : words)
            if (w.size() == len - 1)
                for (char l : {'a', 'A', 'b', 'B'}) next.push_back(w + l);
        words.insert(words.end(), next.begin(), next.end());
    }
    std::vector<std::pair<std::string, std::string>> images;
    std::vector<TwistWord> tws;
    for (const std::string& w : words) {
        images.push_back(naive_images(w));
        tws.push_back(to_twist_word(w));
    }
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i; j < words.size(); ++j) {
            bool naive = images[i] == images[j];
            Verdict v = mcg_equal_rel_boundary(tws[i], tws[j]);
            if (v.unknown() || v.equal() != naive) ++mismatches;
        }
    c.require(naive_images("aba") == naive_images("bab"), "oracle misses the braid relation");
    c.require(naive_images("a") != naive_images(""), "oracle identifies a1 with 1");
    c.require(mismatches == 0, std::to_string(mismatches) + " mismatched pairs over " + std::to_string(words.size()) + " words");
    return c;
}

Check determinism()
{
    Check c;
    const std::string torus = R"({"surface":{"genus":1,"boundary":0},"word":[{"base":"a1"},{"base":"b1","sign":-1},{"base":"a1","conj":[{"base":"b1","sign":1}]}]})";
    const std::string page = R"({"surface":{"genus":1,"boundary":1},"base":"disk","word":[{"base":"a1"},{"base":"b1"}]})";
    std::string ab6 = "[";
    for (int i = 0; i < 6; ++i) ab6 += std::string(i ? "," : "") + R"({"base":"a1"},{"base":"b1"})";
    ab6 += "]";
    const std::string sum = R"({"surface":{"genus":1,"boundary":0},"first":)" + ab6 + R"(,"second":)" + ab6 + "}";
    std::vector<std::pair<std::vector<std::string>, std::string>> runs{
        {{"verify"}, torus},        {{"positivize"}, torus},      {{"double"}, page},
        {{"invariants"}, page},     {{"family", "--n", "2"}, ""}, {{"trefoil"}, ""},
        {{"branched-double"}, page}, {{"fibersum"}, sum},          {{"gn", "--n", "2"}, ""},
        {{"selftest"}, ""},
    };
    for (const auto& [args, input] : runs) {
        std::string outs[2];
        for (auto& o : outs) {
            std::istringstream in(input);
            std::ostringstream out, err;
            int code = cli::run(args, in, out, err);
            c.require(code == 0 || code == 1, args[0] + " exit " + std::to_string(code) + " " + err.str());
            o = out.str();
        }
        c.require(!outs[0].empty() && outs[0] == outs[1], args[0] + " reports differ");
    }
    return c;
}

}  // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Check()>>> criteria{
        {"torus relations (faithful)", torus_relations},
        {"chain power equals boundary twist, g = 1, 2", boundary_twist},
        {"hyperelliptic relation on homology, n <= 10", hyperelliptic_homology},
        {"chain relation self test", chain_relation},
        {"chain power factorization lengths", chain_power_factor},
        {"filling family", filling_family_check},
        {"trefoil completions", trefoil},
        {"positivization contract", positivization},
        {"branched double cover", branched_double},
        {"mapping torus of a single twist", single_twist_torus},
        {"free-group engine against string oracle", oracle_equivalence},
        {"CLI determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = Clock::now();
        Check c;
        try {
            c = criteria[i].second();
        } catch (const std::exception& e) {
            c.ok = false;
            c.why = std::string("exception: ") + e.what();
        }
        double ms = ms_since(t0);
        std::printf("%s [%2zu] %s (%.1f ms)%s%s\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, ms,
                    c.ok ? "" : ": ", c.why.c_str());
        if (!c.ok) ++failed;
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed;
}
