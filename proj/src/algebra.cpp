#include "compalg/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "compalg/rng.hpp"

namespace compalg {

namespace {

std::string format_element(const Element<Rational>& x) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < x.dim(); ++i) {
        if (i) os << ", ";
        os << to_string(x[i]);
    }
    os << ")";
    return os.str();
}

Element<Rational> random_element(const AlgebraSpec& alg, Rng& rng) {
    Element<Rational> x(alg);
    for (int i = 0; i < alg.dim(); ++i) x[i] = rng.small_rational();
    return x;
}

}  // namespace

AlgebraSpec::AlgebraSpec(int n, std::vector<Rational> flat) : n_(n), flat_(std::move(flat)) {
    rebuild_terms();
}

void AlgebraSpec::rebuild_terms() {
    terms_.clear();
    for (int s = 0; s < n_; ++s)
        for (int mu = 0; mu < n_; ++mu)
            for (int nu = 0; nu < n_; ++nu) {
                const Rational& v = c(s, mu, nu);
                if (v != 0) terms_.push_back({s, mu, nu, v, to_double(v)});
            }
}

AlgebraSpec AlgebraSpec::from_triples(int n, const std::vector<SignedTriple>& positive) {
    std::vector<Rational> flat(static_cast<std::size_t>(n) * n * n);
    auto at = [&](int s, int mu, int nu) -> Rational& {
        return flat[static_cast<std::size_t>((s * n + mu) * n + nu)];
    };
    // unit rows
    for (int mu = 0; mu < n; ++mu) {
        at(mu, 0, mu) = 1;
        at(mu, mu, 0) = 1;
    }
    at(0, 0, 0) = 1;  // both assignments above hit (0,0,0)
    // imaginary block: -delta_ij e_0 + eps_ijk e_k
    for (int i = 1; i < n; ++i) at(0, i, i) = -1;
    for (const auto& t : positive) {
        if (t.i < 1 || t.j < 1 || t.k < 1 || t.i >= n || t.j >= n || t.k >= n ||
            t.i == t.j || t.j == t.k || t.i == t.k)
            throw std::invalid_argument("orientation triple indices must be distinct imaginary indices");
        const std::array<std::array<int, 3>, 6> perms = {{{t.i, t.j, t.k},
                                                          {t.j, t.k, t.i},
                                                          {t.k, t.i, t.j},
                                                          {t.j, t.i, t.k},
                                                          {t.i, t.k, t.j},
                                                          {t.k, t.j, t.i}}};
        for (std::size_t p = 0; p < 6; ++p) {
            const int sign = p < 3 ? 1 : -1;
            at(perms[p][2], perms[p][0], perms[p][1]) += sign;
        }
    }
    return AlgebraSpec(n, std::move(flat));
}

AlgebraSpec AlgebraSpec::from_tensor(int n, std::vector<Rational> flat) {
    if (n < 1) throw std::invalid_argument("dimension must be positive");
    if (flat.size() != static_cast<std::size_t>(n) * n * n)
        throw std::invalid_argument("tensor has wrong shape for dimension " + std::to_string(n));
    return AlgebraSpec(n, std::move(flat));
}

const std::vector<SignedTriple>& AlgebraSpec::octonion_triples() {
    static const std::vector<SignedTriple> t = {
        {1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {3, 4, 7}, {5, 3, 6}, {7, 2, 5}};
    return t;
}

const std::vector<SignedTriple>& AlgebraSpec::octonion_triples_alt() {
    static const std::vector<SignedTriple> t = {
        {1, 3, 2}, {2, 6, 4}, {4, 5, 1}, {3, 6, 5}, {1, 7, 6}, {2, 7, 5}, {4, 7, 3}};
    return t;
}

const AlgebraSpec& AlgebraSpec::reals() {
    static const AlgebraSpec a = from_triples(1, {});
    return a;
}
const AlgebraSpec& AlgebraSpec::complexes() {
    static const AlgebraSpec a = from_triples(2, {});
    return a;
}
const AlgebraSpec& AlgebraSpec::quaternions() {
    static const AlgebraSpec a = from_triples(4, {{1, 2, 3}});
    return a;
}
const AlgebraSpec& AlgebraSpec::octonions() {
    static const AlgebraSpec a = from_triples(8, octonion_triples());
    return a;
}

const AlgebraSpec& AlgebraSpec::canonical(int n) {
    switch (n) {
        case 1: return reals();
        case 2: return complexes();
        case 4: return quaternions();
        case 8: return octonions();
        default:
            throw std::invalid_argument("unsupported dimension " + std::to_string(n) +
                                        "; allowed dimensions are 1, 2, 4, 8");
    }
}

Rational AlgebraSpec::epsilon(int i, int j, int k) const {
    if (i < 1 || j < 1 || k < 1 || i >= n_ || j >= n_ || k >= n_)
        throw std::invalid_argument("epsilon indices must be imaginary indices");
    return c(k, i, j);
}

std::vector<SignedTriple> AlgebraSpec::positive_triples() const {
    std::vector<SignedTriple> out;
    for (int i = 1; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            for (int k = 1; k < n_; ++k) {
                if (k == i || k == j) continue;
                const Rational& v = c(k, i, j);
                if (v > 0)
                    out.push_back({i, j, k});
            }
    return out;
}

bool AlgebraSpec::is_unital() const {
    for (int s = 0; s < n_; ++s)
        for (int mu = 0; mu < n_; ++mu) {
            const Rational want = (s == mu) ? 1 : 0;
            if (c(s, 0, mu) != want || c(s, mu, 0) != want) return false;
        }
    return true;
}

bool AlgebraSpec::is_monomial() const {
    for (int mu = 0; mu < n_; ++mu)
        for (int nu = 0; nu < n_; ++nu) {
            int nonzero = 0;
            for (int s = 0; s < n_; ++s) {
                const Rational& v = c(s, mu, nu);
                if (v == 0) continue;
                ++nonzero;
                if (v != 1 && v != -1) return false;
            }
            if (nonzero != 1) return false;
        }
    return true;
}

IdentityReport verify_algebra_identities(const AlgebraSpec& alg, int samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    IdentityReport report;
    report.n = alg.dim();
    report.samples = samples;
    report.seed = seed;
    Rng rng(seed);
    const int n = alg.dim();

    IdentityCheck comp{"composition", true, ""};
    for (int s = 0; s < samples && comp.pass; ++s) {
        const auto x = random_element(alg, rng);
        const auto y = random_element(alg, rng);
        const auto xy = multiply(x, y);
        if (inner(xy, xy) != inner(x, x) * inner(y, y)) {
            comp.pass = false;
            comp.counterexample = "x=" + format_element(x) + " y=" + format_element(y);
        }
    }
    report.checks.push_back(std::move(comp));

    IdentityCheck anti{"anticommutator", true, ""};
    for (int mu = 0; mu < n && anti.pass; ++mu)
        for (int nu = 0; nu < n && anti.pass; ++nu) {
            const auto emu = Element<Rational>::basis(alg, mu);
            const auto enu = Element<Rational>::basis(alg, nu);
            auto lhs = multiply(emu, conjugate(enu));
            lhs += multiply(enu, conjugate(emu));
            Element<Rational> want(alg);
            if (mu == nu) want[0] = 2;
            if (!(lhs == want)) {
                anti.pass = false;
                anti.counterexample = "mu=" + std::to_string(mu) + " nu=" + std::to_string(nu);
            }
        }
    report.checks.push_back(std::move(anti));

    IdentityCheck moufang{"moufang", true, ""};
    for (int s = 0; s < samples && moufang.pass; ++s) {
        const auto x = random_element(alg, rng);
        const auto y = random_element(alg, rng);
        const auto z = random_element(alg, rng);
        const auto lhs = multiply(x, multiply(multiply(y, z), x));
        const auto rhs = multiply(multiply(x, y), multiply(z, x));
        if (!(lhs == rhs)) {
            moufang.pass = false;
            moufang.counterexample =
                "x=" + format_element(x) + " y=" + format_element(y) + " z=" + format_element(z);
        }
    }
    report.checks.push_back(std::move(moufang));

    IdentityCheck lca{"left-conjugate-assoc", true, ""};
    for (int s = 0; s < samples && lca.pass; ++s) {
        const auto x = random_element(alg, rng);
        const auto u = random_element(alg, rng);
        const auto lhs = multiply(x, multiply(conjugate(x), u));
        const auto rhs = multiply(multiply(x, conjugate(x)), u);
        if (!(lhs == rhs)) {
            lca.pass = false;
            lca.counterexample = "x=" + format_element(x) + " u=" + format_element(u);
        }
    }
    report.checks.push_back(std::move(lca));

    return report;
}

}  // namespace compalg
