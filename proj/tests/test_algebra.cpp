#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "compalg/algebra.hpp"
#include "compalg/rng.hpp"

using namespace compalg;

namespace {

Element<Rational> rnd_elem(const AlgebraSpec& alg, Rng& rng) {
    Element<Rational> x(alg);
    for (int i = 0; i < alg.dim(); ++i) x[i] = rng.small_rational();
    return x;
}

// Independent basis-product oracle: walks the orientation triples directly
// instead of going through the structure tensor.
std::pair<int, int> oracle_basis_mul(int i, int j) {
    static const std::array<std::array<int, 3>, 7> lines = {
        {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {3, 4, 7}, {5, 3, 6}, {7, 2, 5}}};
    if (i == 0) return {1, j};
    if (j == 0) return {1, i};
    if (i == j) return {-1, 0};
    for (const auto& [a, b, c] : lines) {
        if (i == a && j == b) return {1, c};
        if (i == b && j == a) return {-1, c};
        if (i == b && j == c) return {1, a};
        if (i == c && j == b) return {-1, a};
        if (i == c && j == a) return {1, b};
        if (i == a && j == c) return {-1, b};
    }
    return {0, 0};  // unreachable for a Fano cover
}

}  // namespace

TEST_CASE("structure tensor frozen entries") {
    const auto& o = AlgebraSpec::octonions();
    CHECK(o.c(3, 1, 2) == 1);
    CHECK(o.c(0, 1, 1) == -1);
    CHECK(AlgebraSpec::complexes().c(1, 0, 1) == 1);
    CHECK(o.epsilon(1, 2, 3) == 1);
    CHECK(o.epsilon(2, 1, 3) == -1);
    CHECK(o.epsilon(1, 1, 3) == 0);
}

TEST_CASE("unsupported dimension is rejected with the allowed list") {
    CHECK_THROWS_WITH_AS(AlgebraSpec::canonical(3),
                         "unsupported dimension 3; allowed dimensions are 1, 2, 4, 8",
                         std::invalid_argument);
    CHECK_THROWS_AS(AlgebraSpec::canonical(16), std::invalid_argument);
}

TEST_CASE("all 64 octonion basis products match the orientation oracle") {
    const auto& o = AlgebraSpec::octonions();
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            const auto [sign, k] = oracle_basis_mul(i, j);
            const auto prod =
                multiply(Element<Rational>::basis(o, i), Element<Rational>::basis(o, j));
            for (int s = 0; s < 8; ++s) CHECK(prod[s] == (s == k ? Rational(sign) : Rational(0)));
        }
}

TEST_CASE("basis closure: exactly one unit-magnitude coefficient per product") {
    for (int n : {1, 2, 4, 8}) {
        const auto& alg = AlgebraSpec::canonical(n);
        CHECK(alg.is_monomial());
        CHECK(alg.is_unital());
    }
}

TEST_CASE("multiply examples") {
    const auto& o = AlgebraSpec::octonions();
    auto e = [&](int i) { return Element<Rational>::basis(o, i); };
    CHECK(multiply(e(1), e(2)) == e(3));
    CHECK(multiply(e(1), e(4)) == e(5));
    CHECK(multiply(e(1), e(1)) == -e(0));

    Rng rng(7);
    for (int t = 0; t < 20; ++t) {
        const auto x = rnd_elem(o, rng);
        CHECK(multiply(e(0), x) == x);
        CHECK(multiply(x, e(0)) == x);
    }
}

TEST_CASE("multiply rejects mismatched algebras") {
    const auto a = Element<Rational>::unit(AlgebraSpec::quaternions());
    const auto b = Element<Rational>::unit(AlgebraSpec::octonions());
    CHECK_THROWS_AS(multiply(a, b), std::invalid_argument);
}

TEST_CASE("conjugation") {
    const auto& o = AlgebraSpec::octonions();
    CHECK(conjugate(Element<Rational>::basis(o, 3)) == -Element<Rational>::basis(o, 3));
    CHECK(conjugate(Element<Rational>::basis(o, 0)) == Element<Rational>::basis(o, 0));
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        const auto x = rnd_elem(o, rng);
        CHECK(conjugate(conjugate(x)) == x);
    }
}

TEST_CASE("trace") {
    for (int n : {2, 4, 8}) {
        const auto& alg = AlgebraSpec::canonical(n);
        CHECK(trace(Element<Rational>::basis(alg, 0)) == n);
        if (n > 4) CHECK(trace(Element<Rational>::basis(alg, 5)) == 0);
        Element<Rational> x(alg);
        x[0] = 2;
        x[1] = 3;
        CHECK(trace(x) == 2 * n);
    }
}

TEST_CASE("inner product equals the coefficient sum and composes") {
    const auto& o = AlgebraSpec::octonions();
    for (int mu = 0; mu < 8; ++mu)
        for (int nu = 0; nu < 8; ++nu)
            CHECK(inner(Element<Rational>::basis(o, mu), Element<Rational>::basis(o, nu)) ==
                  (mu == nu ? 1 : 0));

    Rng rng(11);
    for (int t = 0; t < 30; ++t) {
        const auto x = rnd_elem(o, rng);
        const auto y = rnd_elem(o, rng);
        Rational dot = 0;
        for (int i = 0; i < 8; ++i) dot += x[i] * y[i];
        CHECK(inner(x, y) == dot);
        const auto xy = multiply(x, y);
        CHECK(inner(xy, xy) == inner(x, x) * inner(y, y));
        CHECK(trace(multiply(x, conjugate(x))) == Rational(8) * inner(x, x));
    }
}

TEST_CASE("coordinate extraction through the algebra") {
    const auto& o = AlgebraSpec::octonions();
    Element<Rational> v(o);
    v[0] = 2;
    v[5] = 3;
    CHECK(coordinate(v, 5) == 3);
    CHECK(coordinate(Element<Rational>::basis(o, 0), 0) == 1);
    CHECK_THROWS_AS(coordinate(v, 8), std::invalid_argument);

    Rng rng(13);
    for (int n : {2, 4, 8}) {
        const auto& alg = AlgebraSpec::canonical(n);
        for (int t = 0; t < 100; ++t) {
            const auto x = rnd_elem(alg, rng);
            for (int mu = 0; mu < n; ++mu) CHECK(coordinate(x, mu) == x[mu]);
        }
    }
}

TEST_CASE("tensor identities: metric row, contractions, antisymmetry, index pairing") {
    for (int n : {2, 4, 8}) {
        const auto& alg = AlgebraSpec::canonical(n);
        const Metric g(n);
        // c^0_{mu nu} = g_{mu nu}
        for (int mu = 0; mu < n; ++mu)
            for (int nu = 0; nu < n; ++nu) CHECK(alg.c(0, mu, nu) == g(mu, nu));
        // c^sigma_{sigma 0} = n, c^sigma_{sigma k} = 0
        Rational c0 = 0;
        for (int s = 0; s < n; ++s) c0 += alg.c(s, s, 0);
        CHECK(c0 == n);
        for (int k = 1; k < n; ++k) {
            Rational ck = 0;
            for (int s = 0; s < n; ++s) ck += alg.c(s, s, k);
            CHECK(ck == 0);
        }
        // antisymmetry on Latin indices
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j)
                for (int k = 1; k < n; ++k) CHECK(alg.c(k, i, j) == -alg.c(k, j, i));
        // c^sigma_{mu nu} g_{sigma rho} = c^sigma_{rho mu} g_{sigma nu}
        for (int mu = 0; mu < n; ++mu)
            for (int nu = 0; nu < n; ++nu)
                for (int rho = 0; rho < n; ++rho) {
                    Rational lhs = 0, rhs = 0;
                    for (int s = 0; s < n; ++s) {
                        lhs += alg.c(s, mu, nu) * g(s, rho);
                        rhs += alg.c(s, rho, mu) * g(s, nu);
                    }
                    CHECK(lhs == rhs);
                }
    }
}

TEST_CASE("trace associates over basis triples") {
    for (int n : {2, 4, 8}) {
        const auto& alg = AlgebraSpec::canonical(n);
        for (int s = 0; s < n; ++s)
            for (int mu = 0; mu < n; ++mu)
                for (int nu = 0; nu < n; ++nu) {
                    const auto es = Element<Rational>::basis(alg, s);
                    const auto em = Element<Rational>::basis(alg, mu);
                    const auto en = Element<Rational>::basis(alg, nu);
                    CHECK(trace(multiply(es, multiply(em, en))) ==
                          trace(multiply(multiply(es, em), en)));
                }
    }
}

TEST_CASE("identity suite passes on the canonical tables") {
    for (int n : {2, 4, 8}) {
        const auto report = verify_algebra_identities(AlgebraSpec::canonical(n), 100, 42);
        CHECK(report.all_pass());
        CHECK(report.checks.size() == 4);
    }
}

TEST_CASE("identity suite catches a flipped orientation") {
    auto triples = AlgebraSpec::octonion_triples();
    std::swap(triples.front().i, triples.front().j);  // reverse (1,2,3)
    const auto mutated = AlgebraSpec::from_triples(8, triples);
    const auto report = verify_algebra_identities(mutated, 100, 42);
    CHECK_FALSE(report.all_pass());
    bool composition_failed = false;
    for (const auto& c : report.checks)
        if (c.name == "composition" && !c.pass) {
            composition_failed = true;
            CHECK(!c.counterexample.empty());
        }
    CHECK(composition_failed);
}

TEST_CASE("verify rejects nonpositive sample counts") {
    CHECK_THROWS_AS(verify_algebra_identities(AlgebraSpec::octonions(), 0, 1),
                    std::invalid_argument);
}

TEST_CASE("element constructor checks coefficient count") {
    CHECK_THROWS_AS(Element<Rational>(AlgebraSpec::octonions(), {1, 2}), std::invalid_argument);
}
