#include "doctest.h"
#include "test_util.hpp"
#include "twistkit/homology.hpp"

using namespace twistkit;
using twistkit::test::vec;
using twistkit::test::word;

TEST_CASE("transvection examples")
{
    const SympMatrix ta = transvection(vec({1, 0}));
    CHECK(ta.apply(vec({0, 1})) == vec({-1, 1}));  // [B1] -> [B1] - [A1]
    CHECK(ta.apply(vec({1, 0})) == vec({1, 0}));
    CHECK(transvection(vec({0, 0})).is_identity());
    const SympMatrix tb = transvection(vec({0, 1}));
    CHECK(tb.apply(vec({1, 0})) == vec({1, 1}));  // [A1] -> [A1] + [B1]
    CHECK(tb.apply(vec({0, 1})) == vec({0, 1}));
    CHECK((transvection(vec({1, 0}), -1) * ta).is_identity());
    CHECK_THROWS(transvection(vec({1, 0, 0})));
}

TEST_CASE("homology action of relations")
{
    const SurfaceSig torus{1, 0};
    CHECK(is_identity(homology_action(word(torus, "a1 b1").power(6))));
    CHECK(is_identity(homology_action(word({2, 1}, "delta"))));
    CHECK(is_identity(homology_action(chain_word({2, 0}).power(10))));
    CHECK(matrices_equal(homology_action(word(torus, "a1 b1").power(5) * word(torus, "a1 b1")), SympMatrix::identity(1)));
    CHECK_FALSE(is_identity(homology_action(word(torus, "a1"))));
    CHECK_THROWS(matrices_equal(SympMatrix::identity(1), SympMatrix::identity(2)));
    // (a1 b1 a2)^4 = d2 e2 on homology
    CHECK(matrices_equal(homology_action(word({2, 1}, "a1 b1 a2").power(4)), homology_action(word({2, 1}, "d2 e2"))));
}

TEST_CASE("conjugated letter acts as the transvection of its class")
{
    std::mt19937 rng(7);
    const SurfaceSig sig{3, 1};
    for (int trial = 0; trial < 50; ++trial) {
        TwistWord conj = test::random_word(rng, sig, 6);
        Twist t = Twist::plain(CurveId::b(2), trial % 2 ? 1 : -1);
        for (const Twist& c : conj.letters) t.conj.push_back({c.base, c.sign});
        const TwistWord expanded = TwistWord::from_plain(sig, t.expand());
        CHECK(matrices_equal(homology_action(TwistWord(sig, {t})), homology_action(expanded)));
        CHECK(matrices_equal(homology_action(TwistWord(sig, {t})), transvection(twist_class(t, sig), t.sign)));
    }
}

TEST_CASE("homology action properties on random words")
{
    std::mt19937 rng(20261018);
    for (int trial = 0; trial < 100; ++trial) {
        const SurfaceSig sig{1 + trial % 3, trial % 2};
        const TwistWord w1 = test::random_word(rng, sig, 50, trial % 4 == 0);
        const TwistWord w2 = test::random_word(rng, sig, 50);
        const SympMatrix m1 = homology_action(w1), m2 = homology_action(w2);
        // letters act left to right, so the word product is the reversed matrix product
        CHECK(matrices_equal(homology_action(w1 * w2), m2 * m1));
        CHECK(m1.is_symplectic());
        CHECK(m1.matrix().determinant() == 1);
        CHECK(is_identity(homology_action(w1 * w1.inverse())));
        CHECK(matrices_equal(m1.inverse(), homology_action(w1.inverse())));
    }
}

TEST_CASE("hyperelliptic relation on homology")
{
    for (int n = 1; n <= 10; ++n) {
        const SurfaceSig sig{n, 0};
        CHECK(is_identity(homology_action(chain_word(sig).power(static_cast<std::size_t>(4 * n + 2)))));
        CHECK_FALSE(is_identity(homology_action(chain_word(sig).power(static_cast<std::size_t>(2 * n + 1)))));
    }
}

TEST_CASE("homology_equal engine labels")
{
    const Verdict v = homology_equal(word({1, 0}, "a1 b1").power(6), TwistWord({1, 0}));
    CHECK(v.equal());
    CHECK(v.exact);
    CHECK(v.engine == engine_name::homology_faithful);
    const Verdict w = homology_equal(chain_word({2, 0}).power(10), TwistWord({2, 0}));
    CHECK(w.equal());
    CHECK_FALSE(w.exact);
    CHECK(homology_equal(word({2, 0}, "a1"), TwistWord({2, 0})).outcome == Outcome::NotEqual);
}
