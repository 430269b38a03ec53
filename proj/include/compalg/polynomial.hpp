#pragma once

#include <map>
#include <string>
#include <vector>

#include "compalg/rational.hpp"

namespace compalg {

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are keyed by exponent vectors in a std::map, so iteration order
/// (and hence printing, serialization and elimination pivoting) is
/// deterministic. A default-constructed polynomial is the zero polynomial
/// with unspecified arity; it combines with any arity.
class Polynomial {
public:
    using Exps = std::vector<int>;

    Polynomial() = default;
    Polynomial(int constant) { *this = Polynomial(Rational(constant)); }
    Polynomial(const Rational& constant) {
        if (constant != 0) terms_[Exps{}] = constant;
    }

    static Polynomial constant(int nvars, const Rational& value);
    static Polynomial variable(int nvars, int index);

    /// Arity; -1 while the polynomial is a pure constant of unspecified arity.
    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()
    int total_degree() const;         // -1 for the zero polynomial

    const std::map<Exps, Rational>& terms() const { return terms_; }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Rational& s);
    friend Polynomial operator*(const Rational& s, const Polynomial& a) { return a * s; }
    Polynomial& operator*=(const Rational& s) { return *this = *this * s; }
    friend Polynomial operator/(const Polynomial& a, const Rational& s);
    /// Division only by constant polynomials (used by generic scalar code).
    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) {
        return a / b.constant_value();
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }

    Polynomial derivative(int var) const;

    Rational eval(const std::vector<Rational>& point) const;
    double eval(const std::vector<double>& point) const;

    /// Deterministic rendering, e.g. "3/2*x0^2*x1 - x3". `var` names the
    /// variable family.
    std::string str(const std::string& var = "x") const;

private:
    void adopt_arity(const Polynomial& o);
    void set_arity(int nvars);
    /// Canonical key form: trailing zero exponents are stripped, so equal
    /// polynomials compare equal regardless of declared arity.
    static Exps normalized(Exps e) {
        while (!e.empty() && e.back() == 0) e.pop_back();
        return e;
    }

    int nvars_ = -1;
    std::map<Exps, Rational> terms_;
};

/// One function A -> A in componentwise form: `comp[mu]` is the polynomial
/// U^mu in the real coordinates x_0..x_{n-1}.
struct ComponentPolynomial {
    int nvars = 0;
    std::vector<Polynomial> comp;

    static ComponentPolynomial zero(int n) {
        ComponentPolynomial p;
        p.nvars = n;
        p.comp.assign(static_cast<std::size_t>(n), Polynomial());
        return p;
    }
    int dim() const { return static_cast<int>(comp.size()); }
    bool is_zero() const {
        for (const auto& c : comp)
            if (!c.is_zero()) return false;
        return true;
    }
    friend bool operator==(const ComponentPolynomial& a, const ComponentPolynomial& b) {
        return a.nvars == b.nvars && a.comp == b.comp;
    }
};

/// Exact partial derivative, componentwise.
ComponentPolynomial differentiate(const ComponentPolynomial& p, int mu);

}  // namespace compalg
