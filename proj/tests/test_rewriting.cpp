#include "doctest.h"
#include "test_util.hpp"
#include "twistkit/homology.hpp"
#include "twistkit/pi1.hpp"
#include "twistkit/rewriting.hpp"
#include "twistkit/verify.hpp"

using namespace twistkit;
using twistkit::test::word;

TEST_CASE("commute_pull single swap")
{
    SurfaceSig s{1, 1};
    auto rep = commute_pull(word(s, "b1 a1"), word(s, "a1"));
    CHECK(rep.steps == 1);
    REQUIRE(rep.output.size() == 2);
    CHECK(rep.output.letters[0] == Twist::plain(CurveId::a(1)));
    CHECK(rep.output.letters[1].base == CurveId::b(1));
    CHECK(rep.output.letters[1].conj == LetterSeq{{CurveId::a(1), -1}});
    CHECK(rep.verified.equal());
    CHECK(rep.verified.engine == engine_name::pi1_boundary);
}

TEST_CASE("commute_pull disjoint letters stay plain")
{
    SurfaceSig s{2, 1};
    auto rep = commute_pull(word(s, "a2 a1"), word(s, "a1"));
    CHECK(rep.output == word(s, "a1 a2"));
    CHECK(rep.verified.equal());
}

TEST_CASE("commute_pull on a word already starting with the pattern")
{
    SurfaceSig s{2, 1};
    auto w = word(s, "a1 b1 a2 b2");
    auto rep = commute_pull(w, word(s, "a1 b1"));
    CHECK(rep.steps == 0);
    CHECK(rep.output == w);
}

TEST_CASE("commute_pull rejects unrealizable patterns")
{
    SurfaceSig s{2, 1};
    CHECK_THROWS_AS(commute_pull(word(s, "a1 b1"), word(s, "a2")), RewriteError);
    CHECK_THROWS_AS(commute_pull(word(s, "a1"), word(s, "a1 a1")), RewriteError);
}

TEST_CASE("factor_chain_power lengths and verification")
{
    for (int n = 2; n <= 5; ++n) {
        CAPTURE(n);
        auto f = factor_chain_power(n);
        CHECK(f.prefix.size() == 12);
        CHECK(f.remainder.size() == static_cast<std::size_t>(8 * n - 12));
        CHECK(f.remainder.all_positive());
        for (const Twist& t : f.remainder.letters) CHECK(is_nonseparating(t.base));
        CHECK(f.report.output.size() == f.report.input.size());
        CHECK(f.report.verified.equal());
        CHECK(f.report.verified.exact);
    }
}

TEST_CASE("inverse_twist_expansion")
{
    SurfaceSig t{1, 0};
    CHECK(inverse_twist_expansion(t) == word(t, "b1 a1 b1 a1 b1 a1 b1 a1 b1 a1 b1"));
    for (int g = 1; g <= 4; ++g) {
        SurfaceSig s{g, 0};
        auto e = inverse_twist_expansion(s);
        CHECK(e.size() == expansion_length(g));
        CHECK(e.all_positive());
        CHECK(homology_action(word(s, "a1") * e).is_identity());
    }
    CHECK(expansion_length(2) == 39);
    SurfaceSig s2{2, 0};
    auto v = closed_equal(word(s2, "a1") * inverse_twist_expansion(s2), TwistWord(s2));
    CHECK(v.equal());
    CHECK(v.engine == engine_name::pi1_closed);
}

TEST_CASE("negative chain expansions equal inverse twists")
{
    for (int g = 1; g <= 3; ++g) {
        SurfaceSig s{g, 0};
        for (int j = 1; j <= 2 * g; ++j) {
            CAPTURE(g);
            CAPTURE(j);
            TwistWord inv(s, {Twist::plain(chain_curve(j), -1)});
            auto e = negative_chain_expansion(j, s);
            CHECK(e.size() == expansion_length(g));
            CHECK(closed_equal(inv, e).equal());
        }
    }
}

TEST_CASE("change of coordinates carries a1 to every standard curve")
{
    for (int g = 2; g <= 3; ++g)
        for (int b = 0; b <= 1; ++b) {
            SurfaceSig s{g, b};
            for (CurveId c : standard_curves(s)) {
                if (!is_nonseparating(c)) continue;
                CAPTURE(curve_name(c));
                LetterSeq v = change_of_coordinates(c, s);
                Twist moved{CurveId::a(1), 1, inverse(v)};
                TwistWord lhs(s, {Twist::plain(c)}), rhs(s, {moved});
                IntVec got = twist_class(moved, s), want = homology_class(c, s), neg = want;
                for (auto& x : neg) x = -x;
                CHECK((got == want || got == neg));
                CHECK(verify_equal(lhs, rhs).equal());
            }
        }
    CHECK_THROWS_AS(change_of_coordinates(CurveId::delta(), SurfaceSig{2, 1}), InvalidCurve);
}

TEST_CASE("positivize on the torus")
{
    SurfaceSig t{1, 0};
    auto rep = positivize(word(t, "a1 b1 B1 A1"));
    CHECK(rep.output.size() == 24);
    CHECK(rep.output == word(t, "a1 b1").power(12));
    CHECK(rep.verified.equal());
    CHECK(rep.verified.exact);

    auto single = positivize(word(t, "A1"));
    CHECK(single.output.size() == 11);
    CHECK(single.output == word(t, "b1") * word(t, "a1 b1").power(5));

    auto pos = word(t, "a1 b1 a1");
    auto same = positivize(pos);
    CHECK(same.output == pos);
    CHECK(same.steps == 0);
}

TEST_CASE("positivize rejects bad input")
{
    CHECK_THROWS_AS(positivize(word(SurfaceSig{2, 1}, "A1")), std::invalid_argument);
}

TEST_CASE("positivize random words preserve homology")
{
    std::mt19937 rng(4242);
    for (int i = 0; i < 100; ++i) {
        int g = 1 + i % 3;
        SurfaceSig s{g, 0};
        auto w = test::random_word(rng, s, 10, true);
        VerifyOptions h{EngineChoice::Homology, default_word_cap};
        auto rep = positivize(w, h);
        CAPTURE(w.to_string());
        CHECK(rep.output.all_positive());
        CHECK(rep.output.size() == w.count_sign(1) + w.count_sign(-1) * expansion_length(g));
        CHECK(homology_action(rep.output) == homology_action(w));
        if (g == 1) CHECK(rep.verified.exact);
    }
}

TEST_CASE("positivize with the closed engine at genus 2")
{
    SurfaceSig s{2, 0};
    auto rep = positivize(word(s, "a1 D2 b2 E2"));
    CHECK(rep.output.all_positive());
    CHECK(rep.verified.equal());
    CHECK(rep.verified.engine == engine_name::pi1_closed);
}

TEST_CASE("chain_substitute")
{
    SurfaceSig s{2, 1};
    auto f = factor_chain_power(2);
    auto boundary_word = f.report.output * chain_word(s).power(6);
    REQUIRE(boundary_word.size() == 40);
    auto rep = chain_substitute(boundary_word);
    CHECK(rep.output.size() == 30);
    CHECK(rep.verified.equal());
    CHECK(rep.verified.engine == engine_name::pi1_boundary);
    CHECK(homology_action(rep.output) == homology_action(boundary_word));
    CHECK_THROWS_AS(chain_substitute(word(s, "a1 b1 a2")), RewriteError);
}

TEST_CASE("chain relation self test")
{
    SurfaceSig s{2, 1};
    CHECK(chain_relation_selftest());
    IntVec d = homology_class(CurveId::d(2), s), e = homology_class(CurveId::e(2), s);
    CHECK(chain_relation_holds_on_homology(d, e));
    CHECK(chain_relation_holds_on_homology(e, d));
    IntVec bumped = d;
    IntVec a1 = homology_class(CurveId::a(1), s);
    for (std::size_t i = 0; i < bumped.size(); ++i) bumped[i] += a1[i];
    CHECK_FALSE(chain_relation_holds_on_homology(bumped, e));
}
