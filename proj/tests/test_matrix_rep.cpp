#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "compalg/matrix_rep.hpp"
#include "compalg/rng.hpp"

using namespace compalg;

namespace {

const AlgebraSpec& O() { return AlgebraSpec::octonions(); }
const AlgebraSpec& H() { return AlgebraSpec::quaternions(); }

Element<Rational> rnd_oct(Rng& rng) {
    Element<Rational> x(O());
    for (int i = 0; i < 8; ++i) x[i] = rng.small_rational();
    return x;
}

}  // namespace

TEST_CASE("embedding of generators") {
    const auto m4 = embed(Element<Rational>::basis(O(), 4));
    CHECK(m4.at(0, 0).is_zero());
    CHECK(m4.at(0, 1) == OperatorEntry{-Element<Rational>::unit(H()), true});
    CHECK(m4.at(1, 0) == OperatorEntry{Element<Rational>::unit(H()), true});

    CHECK(embed(Element<Rational>::basis(O(), 0)) == OpMatrix::identity());

    const auto m5 = embed(Element<Rational>::basis(O(), 5));
    CHECK(m5.at(0, 1) == OperatorEntry{-Element<Rational>::basis(H(), 1), true});
    CHECK(m5.at(1, 0) == OperatorEntry{Element<Rational>::basis(H(), 1), true});
}

TEST_CASE("embed rejects non-octonions") {
    CHECK_THROWS_AS(embed(Element<Rational>::unit(H())), std::invalid_argument);
}

TEST_CASE("twist rule on flagged entries") {
    // (e1 eps)(e2 eps) = conj(e2) e1 = -e2 e1 = e3
    const OperatorEntry a{Element<Rational>::basis(H(), 1), true};
    const OperatorEntry b{Element<Rational>::basis(H(), 2), true};
    const auto p = entry_multiply(a, b);
    CHECK_FALSE(p.eps);
    CHECK(p.value == Element<Rational>::basis(H(), 3));
}

TEST_CASE("matrix product realizes the octonion product") {
    Rng rng(21);
    for (int t = 0; t < 200; ++t) {
        const auto x = rnd_oct(rng);
        const auto y = rnd_oct(rng);
        CHECK(op_multiply(embed(x), embed(y)) == embed(multiply(x, y)));
    }
    for (int mu = 0; mu < 8; ++mu)
        for (int nu = 0; nu < 8; ++nu) {
            const auto x = Element<Rational>::basis(O(), mu);
            const auto y = Element<Rational>::basis(O(), nu);
            CHECK(op_multiply(embed(x), embed(y)) == embed(multiply(x, y)));
        }
}

TEST_CASE("identity is neutral") {
    Rng rng(4);
    const auto m = embed(rnd_oct(rng));
    CHECK(op_multiply(OpMatrix::identity(), m) == m);
    CHECK(op_multiply(m, OpMatrix::identity()) == m);
}

TEST_CASE("embedding is linear") {
    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
        const auto x = rnd_oct(rng);
        const auto y = rnd_oct(rng);
        const auto s = rng.small_rational();
        auto sum = embed(x + s * y);
        auto parts = embed(x);
        const auto sy = embed(s * y);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                OperatorEntry combined{parts.at(i, j).value + sy.at(i, j).value,
                                       sum.at(i, j).eps};
                CHECK(sum.at(i, j) == combined);
            }
    }
}

TEST_CASE("square of the doubling generator is minus one") {
    const auto e4 = embed(Element<Rational>::basis(O(), 4));
    const auto sq = op_multiply(e4, e4);
    CHECK(sq == embed(-Element<Rational>::basis(O(), 0)));
}

TEST_CASE("sandwich conjugation matches coefficient conjugation") {
    for (int mu = 0; mu < 8; ++mu) {
        const auto x = Element<Rational>::basis(O(), mu);
        CHECK(conjugate_by_epsilon(embed(x)) == embed(conjugate(x)));
    }
    CHECK(conjugate_by_epsilon(embed(Element<Rational>::basis(O(), 3))) ==
          embed(-Element<Rational>::basis(O(), 3)));
    CHECK(conjugate_by_epsilon(OpMatrix::identity()) == OpMatrix::identity());

    Rng rng(6);
    for (int t = 0; t < 100; ++t) {
        const auto m = embed(rnd_oct(rng));
        CHECK(conjugate_by_epsilon(conjugate_by_epsilon(m)) == m);
    }
}

TEST_CASE("extract inverts embed and validates shape") {
    Rng rng(7);
    for (int t = 0; t < 100; ++t) {
        const auto x = rnd_oct(rng);
        CHECK(extract(embed(x)) == x);
    }
    CHECK(extract(OpMatrix::identity()) == Element<Rational>::basis(O(), 0));

    OpMatrix bad = OpMatrix::identity();
    bad.at(1, 1) = OperatorEntry{Element<Rational>::basis(H(), 1), false};
    CHECK_THROWS_WITH_AS(extract(bad), "matrix does not have the embedded shape: entry (1,1) must repeat (0,0)",
                         std::invalid_argument);

    OpMatrix bad2 = embed(Element<Rational>::basis(O(), 4));
    bad2.at(0, 1).eps = false;
    CHECK_THROWS_AS(extract(bad2), std::invalid_argument);
    CHECK_THROWS_AS(conjugate_by_epsilon(bad2), std::invalid_argument);
}
