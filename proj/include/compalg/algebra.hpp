#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "compalg/rational.hpp"

namespace compalg {

/// Positive orientation triple: e_i e_j = e_k with sign +1.
struct SignedTriple {
    int i, j, k;
    friend bool operator==(const SignedTriple&, const SignedTriple&) = default;
};

/// Multiplication data for a finite-dimensional algebra with unit e_0:
/// e_mu e_nu = c^sigma_{mu nu} e_sigma. The rank-3 tensor is the single
/// source of truth for multiplication; everything else (trace, inner
/// product, conjugation) is derived from it plus the split into the real
/// axis e_0 and the imaginary axes e_1..e_{N-1}.
class AlgebraSpec {
public:
    /// One nonzero tensor entry. Coefficients are kept both exactly and as
    /// doubles so the float evaluation path avoids per-term conversions.
    struct Term {
        int sigma, mu, nu;
        Rational coef;
        double coef_d;
    };

    /// The canonical unital composition algebras, built from the epsilon
    /// orientation triples. Allowed dimensions: 1, 2, 4, 8.
    static const AlgebraSpec& canonical(int n);
    static const AlgebraSpec& reals();
    static const AlgebraSpec& complexes();
    static const AlgebraSpec& quaternions();
    static const AlgebraSpec& octonions();

    /// Builds the tensor from a list of positively oriented triples,
    /// antisymmetrized over all index permutations (even -> +1, odd -> -1,
    /// repeated index -> 0); unlisted components are zero. The unit rows
    /// c^sigma_{0 mu} = c^sigma_{mu 0} = delta and the imaginary diagonal
    /// e_i^2 = -e_0 are always present.
    static AlgebraSpec from_triples(int n, const std::vector<SignedTriple>& positive);

    /// Wraps an explicit tensor (layout c[sigma][mu][nu], flattened with
    /// sigma slowest). Used for doubled algebras and file input.
    static AlgebraSpec from_tensor(int n, std::vector<Rational> flat);

    /// The orientation triples of the canonical octonion table.
    static const std::vector<SignedTriple>& octonion_triples();
    /// Alternate orientation set for the same seven lines, with lines
    /// {1,2,3}, {2,4,6} and {2,5,7} reversed. Kept for reconciliation
    /// against the primary table via the signed-permutation search.
    static const std::vector<SignedTriple>& octonion_triples_alt();

    int dim() const { return n_; }
    const Rational& c(int sigma, int mu, int nu) const {
        return flat_[static_cast<std::size_t>((sigma * n_ + mu) * n_ + nu)];
    }
    const std::vector<Term>& terms() const { return terms_; }

    /// epsilon_{ijk} read off the tensor via c^k_{ij} (Latin indices only).
    Rational epsilon(int i, int j, int k) const;

    /// Positively oriented triples recovered from the tensor (i < j, k free),
    /// in deterministic order. Exact for monomial tables.
    std::vector<SignedTriple> positive_triples() const;

    /// True when c^sigma_{0 mu} = c^sigma_{mu 0} = delta^sigma_mu.
    bool is_unital() const;

    /// True when every basis product has exactly one nonzero coefficient of
    /// magnitude one (so signed-permutation search applies).
    bool is_monomial() const;

    bool operator==(const AlgebraSpec& other) const {
        return n_ == other.n_ && flat_ == other.flat_;
    }

private:
    AlgebraSpec(int n, std::vector<Rational> flat);
    void rebuild_terms();

    int n_ = 0;
    std::vector<Rational> flat_;
    std::vector<Term> terms_;
};

/// Diagonal metric g = diag(+1, -1, ..., -1); the e_0 row of the structure
/// tensor, used to raise and lower indices against it.
struct Metric {
    int n;
    explicit Metric(int n) : n(n) {}
    Rational operator()(int mu, int nu) const {
        if (mu != nu || mu < 0 || mu >= n) return 0;
        return mu == 0 ? Rational(1) : Rational(-1);
    }
};

/// Coefficient vector x = x^mu e_mu over a scalar ring S (exact Rational,
/// double, or Polynomial for symbolic lowering). Stores a non-owning
/// reference to its AlgebraSpec; the canonical specs are static singletons
/// and custom specs must outlive their elements.
template <class S>
class Element {
public:
    explicit Element(const AlgebraSpec& alg)
        : alg_(&alg), coeffs_(static_cast<std::size_t>(alg.dim())) {}

    Element(const AlgebraSpec& alg, std::vector<S> coeffs)
        : alg_(&alg), coeffs_(std::move(coeffs)) {
        if (static_cast<int>(coeffs_.size()) != alg.dim())
            throw std::invalid_argument("coefficient count does not match algebra dimension");
    }

    static Element basis(const AlgebraSpec& alg, int mu) {
        if (mu < 0 || mu >= alg.dim())
            throw std::invalid_argument("basis index out of range");
        Element e(alg);
        e.coeffs_[static_cast<std::size_t>(mu)] = S(1);
        return e;
    }
    static Element unit(const AlgebraSpec& alg) { return basis(alg, 0); }

    const AlgebraSpec& algebra() const { return *alg_; }
    int dim() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<S>& coeffs() const { return coeffs_; }
    const S& operator[](int mu) const { return coeffs_[static_cast<std::size_t>(mu)]; }
    S& operator[](int mu) { return coeffs_[static_cast<std::size_t>(mu)]; }

    Element& operator+=(const Element& o) {
        check_same(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    Element& operator-=(const Element& o) {
        check_same(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator-(const Element& a) {
        Element r(*a.alg_);
        for (int i = 0; i < a.dim(); ++i) r[i] = -a[i];
        return r;
    }
    friend Element operator*(const S& s, const Element& a) {
        Element r(*a.alg_);
        for (int i = 0; i < a.dim(); ++i) r[i] = s * a[i];
        return r;
    }
    friend bool operator==(const Element& a, const Element& b) {
        return a.algebra() == b.algebra() && a.coeffs_ == b.coeffs_;
    }

    void check_same(const Element& o) const {
        if (alg_ == o.alg_) return;
        if (!(*alg_ == *o.alg_))
            throw std::invalid_argument("elements belong to different algebras");
    }

private:
    const AlgebraSpec* alg_;
    std::vector<S> coeffs_;
};

namespace detail {
inline const Rational& term_coef(const AlgebraSpec::Term& t, const Rational*) { return t.coef; }
inline double term_coef(const AlgebraSpec::Term& t, const double*) { return t.coef_d; }
template <class S>
const Rational& term_coef(const AlgebraSpec::Term& t, const S*) { return t.coef; }
}  // namespace detail

/// (ab)^sigma = c^sigma_{mu nu} a^mu b^nu. Exact when S is exact.
template <class S>
Element<S> multiply(const Element<S>& a, const Element<S>& b) {
    a.check_same(b);
    Element<S> out(a.algebra());
    for (const auto& t : a.algebra().terms()) {
        S prod = a[t.mu] * b[t.nu];
        out[t.sigma] += prod * detail::term_coef(t, static_cast<const S*>(nullptr));
    }
    return out;
}

/// Conjugation: fixes the e_0 coefficient, negates the imaginary ones.
template <class S>
Element<S> conjugate(const Element<S>& a) {
    Element<S> r(a.algebra());
    r[0] = a[0];
    for (int i = 1; i < a.dim(); ++i) r[i] = -a[i];
    return r;
}

/// Tr x = N x^0 (Tr e_0 = N, Tr e_i = 0, extended linearly).
template <class S>
S trace(const Element<S>& a) {
    return S(a.dim()) * a[0];
}

/// <a|b> = (1/N) Tr(conj(a) b); computed through the multiplication route.
template <class S>
S inner(const Element<S>& a, const Element<S>& b) {
    S t = trace(multiply(conjugate(a), b));
    return t / S(a.dim());
}

/// Coefficient extraction through the algebra rather than storage:
/// returns the e_0 component of (x conj(e_mu) + e_mu conj(x)) / 2, which
/// must equal the stored coefficient exactly.
template <class S>
S coordinate(const Element<S>& a, int mu) {
    if (mu < 0 || mu >= a.dim()) throw std::invalid_argument("coordinate index out of range");
    const Element<S> e = Element<S>::basis(a.algebra(), mu);
    Element<S> v = multiply(a, conjugate(e));
    v += multiply(e, conjugate(a));
    return v[0] / S(2);
}

/// One identity verdict; `counterexample` is empty on pass.
struct IdentityCheck {
    std::string name;
    bool pass = true;
    std::string counterexample;
};

struct IdentityReport {
    int n = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    std::vector<IdentityCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Exact randomized check of the composition law, the basis anticommutator,
/// the Moufang identity and x(conj(x)u) = (x conj(x))u. Failures land in the
/// report, not in exceptions.
IdentityReport verify_algebra_identities(const AlgebraSpec& alg, int samples, std::uint64_t seed);

}  // namespace compalg
