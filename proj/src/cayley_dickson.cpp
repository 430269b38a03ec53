#include "compalg/cayley_dickson.hpp"

#include <algorithm>
#include <sstream>

namespace compalg {

AlgebraSpec double_algebra(const AlgebraSpec& base, const Rational& alpha) {
    if (alpha == 0) throw std::invalid_argument("doubling twist alpha must be nonzero");
    if (!base.is_unital()) throw std::invalid_argument("doubling requires a unital base algebra");
    const int n = base.dim();
    if (n != 1 && n != 2 && n != 4 && n != 8)
        throw std::invalid_argument("doubling base dimension must be 1, 2, 4 or 8");
    const int m = 2 * n;

    auto part = [&](int mu) {
        // basis of the doubled algebra: (e_mu, 0) for mu < n, (0, e_{mu-n}) after
        Element<Rational> x(base), y(base);
        if (mu < n)
            x[mu] = 1;
        else
            y[mu - n] = 1;
        return std::make_pair(x, y);
    };

    std::vector<Rational> flat(static_cast<std::size_t>(m) * m * m);
    for (int mu = 0; mu < m; ++mu)
        for (int nu = 0; nu < m; ++nu) {
            const auto [x1, y1] = part(mu);
            const auto [x2, y2] = part(nu);
            const auto [f, s] = cd_multiply(x1, y1, x2, y2, alpha);
            for (int k = 0; k < n; ++k) {
                flat[static_cast<std::size_t>((k * m + mu) * m + nu)] = f[k];
                flat[static_cast<std::size_t>(((k + n) * m + mu) * m + nu)] = s[k];
            }
        }
    AlgebraSpec doubled = AlgebraSpec::from_tensor(m, std::move(flat));

    // For the division-twist the doubled table must land in the canonical
    // isomorphism class; anything else is a construction bug.
    if (alpha == -1 && m <= 8) {
        if (!find_isomorphism(doubled, AlgebraSpec::canonical(m)))
            throw std::logic_error("doubled algebra is not isomorphic to the canonical table");
    }
    return doubled;
}

SignedPermutation SignedPermutation::identity(int n) {
    SignedPermutation p;
    p.perm.resize(static_cast<std::size_t>(n));
    p.sign.assign(static_cast<std::size_t>(n), 1);
    for (int i = 0; i < n; ++i) p.perm[static_cast<std::size_t>(i)] = i;
    return p;
}

std::string SignedPermutation::describe() const {
    std::ostringstream os;
    for (int mu = 1; mu < dim(); ++mu) {
        if (mu > 1) os << ", ";
        os << "e" << mu << " -> " << (sign[static_cast<std::size_t>(mu)] < 0 ? "-" : "+") << "e"
           << perm[static_cast<std::size_t>(mu)];
    }
    return os.str();
}

bool is_isomorphism(const SignedPermutation& phi, const AlgebraSpec& a, const AlgebraSpec& b) {
    if (phi.dim() != a.dim() || a.dim() != b.dim()) return false;
    const int n = a.dim();
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu) {
            auto prod = multiply(Element<Rational>::basis(a, mu), Element<Rational>::basis(a, nu));
            const auto lhs = phi.apply(prod, b);
            const auto rhs = multiply(Element<Rational>::basis(b, phi.perm[static_cast<std::size_t>(mu)]),
                                      Element<Rational>::basis(b, phi.perm[static_cast<std::size_t>(nu)]));
            auto scaled = Rational(phi.sign[static_cast<std::size_t>(mu)] *
                                   phi.sign[static_cast<std::size_t>(nu)]) *
                          rhs;
            if (!(lhs == scaled)) return false;
        }
    return true;
}

namespace {

/// Product index and sign for monomial tables: e_mu e_nu = sign * e_k.
struct MonomialTable {
    std::vector<int> index;  // n*n
    std::vector<int> sign;   // n*n

    static MonomialTable build(const AlgebraSpec& alg) {
        const int n = alg.dim();
        MonomialTable t;
        t.index.assign(static_cast<std::size_t>(n) * n, 0);
        t.sign.assign(static_cast<std::size_t>(n) * n, 0);
        for (int mu = 0; mu < n; ++mu)
            for (int nu = 0; nu < n; ++nu)
                for (int s = 0; s < n; ++s) {
                    const Rational& v = alg.c(s, mu, nu);
                    if (v != 0) {
                        t.index[static_cast<std::size_t>(mu * n + nu)] = s;
                        t.sign[static_cast<std::size_t>(mu * n + nu)] = v > 0 ? 1 : -1;
                    }
                }
        return t;
    }
    int idx(int mu, int nu, int n) const { return index[static_cast<std::size_t>(mu * n + nu)]; }
    int sgn(int mu, int nu, int n) const { return sign[static_cast<std::size_t>(mu * n + nu)]; }
};

/// Lex-ordered DFS over images of e_1..e_{n-1}, pruning with the unsigned
/// product structure. `found` collects structure-preserving permutations in
/// lexicographic order.
class PermSearch {
public:
    PermSearch(const MonomialTable& ta, const MonomialTable& tb, int n)
        : ta_(ta), tb_(tb), n_(n), perm_(static_cast<std::size_t>(n), -1),
          used_(static_cast<std::size_t>(n), false) {
        perm_[0] = 0;
        used_[0] = true;
    }

    template <class Visit>
    bool run(Visit&& visit) {
        return dfs(1, visit);
    }

private:
    bool consistent() const {
        for (int i = 1; i < n_; ++i) {
            if (perm_[static_cast<std::size_t>(i)] < 0) continue;
            for (int j = 1; j < n_; ++j) {
                if (perm_[static_cast<std::size_t>(j)] < 0) continue;
                const int ka = ta_.idx(i, j, n_);
                const int kb = tb_.idx(perm_[static_cast<std::size_t>(i)],
                                       perm_[static_cast<std::size_t>(j)], n_);
                const int ka_img = perm_[static_cast<std::size_t>(ka)];
                if (ka_img >= 0) {
                    if (ka_img != kb) return false;
                } else {
                    // image of ka still free: kb must be available
                    if (used_[static_cast<std::size_t>(kb)]) return false;
                }
            }
        }
        return true;
    }

    template <class Visit>
    bool dfs(int pos, Visit& visit) {
        if (pos == n_) return visit(perm_);
        for (int t = 1; t < n_; ++t) {
            if (used_[static_cast<std::size_t>(t)]) continue;
            perm_[static_cast<std::size_t>(pos)] = t;
            used_[static_cast<std::size_t>(t)] = true;
            if (consistent() && dfs(pos + 1, visit)) return true;
            used_[static_cast<std::size_t>(t)] = false;
            perm_[static_cast<std::size_t>(pos)] = -1;
        }
        return false;
    }

    const MonomialTable& ta_;
    const MonomialTable& tb_;
    int n_;
    std::vector<int> perm_;
    std::vector<bool> used_;
};

}  // namespace

std::optional<SignedPermutation> find_isomorphism(const AlgebraSpec& a, const AlgebraSpec& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("isomorphism search requires equal dimensions");
    if (!a.is_monomial() || !b.is_monomial())
        throw std::invalid_argument("isomorphism search requires monomial tables");
    const int n = a.dim();
    if (n == 1) return SignedPermutation::identity(1);

    const auto ta = MonomialTable::build(a);
    const auto tb = MonomialTable::build(b);

    std::optional<SignedPermutation> result;
    PermSearch search(ta, tb, n);
    search.run([&](const std::vector<int>& perm) {
        // signs in lex order, +1 before -1; bit 0 of mask drives e_{n-1}
        const int imag = n - 1;
        for (std::uint64_t mask = 0; mask < (1ULL << imag); ++mask) {
            SignedPermutation phi;
            phi.perm = perm;
            phi.sign.assign(static_cast<std::size_t>(n), 1);
            for (int i = 1; i < n; ++i)
                if (mask >> (imag - i) & 1ULL) phi.sign[static_cast<std::size_t>(i)] = -1;
            if (is_isomorphism(phi, a, b)) {
                result = std::move(phi);
                return true;
            }
        }
        return false;
    });
    return result;
}

}  // namespace compalg
