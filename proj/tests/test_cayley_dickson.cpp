#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "compalg/cayley_dickson.hpp"
#include "compalg/rng.hpp"

using namespace compalg;

TEST_CASE("doubling chain lands exactly on the canonical tables") {
    // The fixed conjugate placement reproduces the canonical tables with the
    // identity labeling, so the isomorphism search returns the identity.
    const auto c2 = double_algebra(AlgebraSpec::reals(), -1);
    CHECK(c2 == AlgebraSpec::complexes());
    const auto c4 = double_algebra(AlgebraSpec::complexes(), -1);
    CHECK(c4 == AlgebraSpec::quaternions());
    const auto c8 = double_algebra(AlgebraSpec::quaternions(), -1);
    CHECK(c8 == AlgebraSpec::octonions());

    const auto phi = find_isomorphism(c8, AlgebraSpec::octonions());
    REQUIRE(phi.has_value());
    CHECK(phi->perm == SignedPermutation::identity(8).perm);
    CHECK(phi->sign == SignedPermutation::identity(8).sign);
}

TEST_CASE("doubled conjugation is (conj(x), -y) on basis elements") {
    const auto& h = AlgebraSpec::quaternions();
    const auto d = double_algebra(h, -1);
    for (int mu = 0; mu < 8; ++mu) {
        Element<Rational> x(h), y(h);
        if (mu < 4)
            x[mu] = 1;
        else
            y[mu - 4] = 1;
        const auto [cx, cy] = cd_conjugate(x, y);
        const auto direct = conjugate(Element<Rational>::basis(d, mu));
        for (int i = 0; i < 4; ++i) {
            CHECK(direct[i] == cx[i]);
            CHECK(direct[i + 4] == cy[i]);
        }
    }
}

TEST_CASE("doubled algebra keeps the unit") {
    for (int base : {1, 2, 4}) {
        const auto d = double_algebra(AlgebraSpec::canonical(base), -1);
        CHECK(d.dim() == 2 * base);
        CHECK(d.is_unital());
    }
}

TEST_CASE("split twist: constructor succeeds, norm is indefinite") {
    const auto d = double_algebra(AlgebraSpec::complexes(), 1);
    CHECK(d.is_unital());
    const auto e2 = Element<Rational>::basis(d, 2);
    CHECK(multiply(e2, e2) == Element<Rational>::unit(d));  // e2^2 = +e0
    CHECK(inner(e2, e2) == -1);
}

TEST_CASE("general rational twist is accepted") {
    const auto d = double_algebra(AlgebraSpec::complexes(), Rational(-3, 2));
    CHECK(d.is_unital());
    CHECK(d.dim() == 4);
    const auto e2 = Element<Rational>::basis(d, 2);
    // e2^2 = alpha * conj(e0)e0 scaled: (0,1)(0,1) = (alpha, 0)
    const auto sq = multiply(e2, e2);
    CHECK(sq[0] == Rational(-3, 2));
}

TEST_CASE("doubling rejections") {
    CHECK_THROWS_AS(double_algebra(AlgebraSpec::complexes(), 0), std::invalid_argument);
    // non-unital base
    std::vector<Rational> flat(8, Rational(0));
    const auto bad = AlgebraSpec::from_tensor(2, std::move(flat));
    CHECK_THROWS_AS(double_algebra(bad, -1), std::invalid_argument);
}

TEST_CASE("identity search on equal tables returns the identity") {
    const auto phi = find_isomorphism(AlgebraSpec::octonions(), AlgebraSpec::octonions());
    REQUIRE(phi.has_value());
    CHECK(phi->perm == SignedPermutation::identity(8).perm);
    CHECK(phi->sign == SignedPermutation::identity(8).sign);
}

TEST_CASE("conjugation is an automorphism of the complexes") {
    SignedPermutation conj = SignedPermutation::identity(2);
    conj.sign[1] = -1;
    CHECK(is_isomorphism(conj, AlgebraSpec::complexes(), AlgebraSpec::complexes()));
}

TEST_CASE("found isomorphisms satisfy the homomorphism property everywhere") {
    const auto alt = AlgebraSpec::from_triples(8, AlgebraSpec::octonion_triples_alt());
    const auto phi = find_isomorphism(alt, AlgebraSpec::octonions());
    REQUIRE(phi.has_value());
    CHECK(is_isomorphism(*phi, alt, AlgebraSpec::octonions()));
    CHECK_FALSE(is_isomorphism(SignedPermutation::identity(8), alt, AlgebraSpec::octonions()));
}

TEST_CASE("alternate orientation table is itself a composition table") {
    const auto alt = AlgebraSpec::from_triples(8, AlgebraSpec::octonion_triples_alt());
    CHECK(verify_algebra_identities(alt, 50, 9).all_pass());
}

TEST_CASE("search rejections") {
    CHECK_THROWS_AS(find_isomorphism(AlgebraSpec::quaternions(), AlgebraSpec::octonions()),
                    std::invalid_argument);
    const auto odd = double_algebra(AlgebraSpec::complexes(), Rational(-3, 2));  // not monomial
    CHECK_THROWS_AS(find_isomorphism(odd, AlgebraSpec::quaternions()), std::invalid_argument);
}

TEST_CASE("search result is the lexicographic first match") {
    // the complexes admit exactly two automorphisms: identity and conjugation;
    // identity must win the tie-break
    const auto phi = find_isomorphism(AlgebraSpec::complexes(), AlgebraSpec::complexes());
    REQUIRE(phi.has_value());
    CHECK(phi->sign[1] == 1);
}
