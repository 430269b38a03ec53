#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compalg/algebra.hpp"

namespace compalg {

/// Doubling data: the base algebra plus the twist scalar alpha.
struct DoublingSpec {
    const AlgebraSpec* base;
    Rational alpha;
};

/// The fixed conjugate placement of the pair product, as a display string.
inline const char* doubling_convention() {
    return "(x1,y1)(x2,y2) = (x1*x2 + alpha*conj(y2)*y1, y2*x1 + y1*conj(x2))";
}

/// Pair product used throughout:
///   (x1, y1)(x2, y2) = (x1 x2 + alpha conj(y2) y1,  y2 x1 + y1 conj(x2)).
/// The conjugate placement is fixed here once; the doubled tables are
/// cross-checked against the canonical ones by isomorphism search.
template <class S>
std::pair<Element<S>, Element<S>> cd_multiply(const Element<S>& x1, const Element<S>& y1,
                                              const Element<S>& x2, const Element<S>& y2,
                                              const S& alpha) {
    Element<S> first = multiply(x1, x2);
    first += alpha * multiply(conjugate(y2), y1);
    Element<S> second = multiply(y2, x1);
    second += multiply(y1, conjugate(x2));
    return {std::move(first), std::move(second)};
}

/// Structure tensor of (A, alpha): dimension doubles, basis ordered as
/// (e_mu, 0) then (0, e_mu). Requires a unital base and alpha != 0.
AlgebraSpec double_algebra(const AlgebraSpec& base, const Rational& alpha);
inline AlgebraSpec double_algebra(const DoublingSpec& spec) {
    return double_algebra(*spec.base, spec.alpha);
}

/// Conjugation in the doubled algebra: (x, y) -> (conj(x), -y).
template <class S>
std::pair<Element<S>, Element<S>> cd_conjugate(const Element<S>& x, const Element<S>& y) {
    return {conjugate(x), -y};
}

/// Basis relabeling with sign flips: e_mu -> sign[mu] * e_{perm[mu]},
/// fixing e_0. When it carries one multiplication table onto another it is
/// an algebra isomorphism.
struct SignedPermutation {
    std::vector<int> perm;   // perm[0] == 0
    std::vector<int> sign;   // sign[0] == +1, entries in {-1, +1}

    int dim() const { return static_cast<int>(perm.size()); }
    static SignedPermutation identity(int n);

    template <class S>
    Element<S> apply(const Element<S>& x, const AlgebraSpec& target) const {
        Element<S> out(target);
        for (int mu = 0; mu < x.dim(); ++mu)
            out[perm[static_cast<std::size_t>(mu)]] =
                S(sign[static_cast<std::size_t>(mu)]) * x[mu];
        return out;
    }

    std::string describe() const;
};

/// True iff phi(e_mu e_nu) = phi(e_mu) phi(e_nu) for all basis pairs of A,
/// with products taken in A on the left and in B on the right.
bool is_isomorphism(const SignedPermutation& phi, const AlgebraSpec& a, const AlgebraSpec& b);

/// Exhaustive search over signed permutations fixing e_0, returning the
/// lexicographically first match (ordered by permutation, then by signs
/// with +1 before -1), or nullopt. Both tables must be monomial.
std::optional<SignedPermutation> find_isomorphism(const AlgebraSpec& a, const AlgebraSpec& b);

}  // namespace compalg
