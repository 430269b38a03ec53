#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "compalg/algebra.hpp"
#include "compalg/polynomial.hpp"

namespace compalg {

/// Nodes of the input language for functions U : A -> A in one variable x
/// and its conjugate. Products are strictly binary: grouping is part of the
/// semantics because multiplication is non-associative.
enum class ExprKind {
    Variable,     // x
    Conjugate,    // conj(child)
    BasisConst,   // e<index>
    ScalarConst,  // rational literal
    Sum,          // signed terms
    Product,      // lhs * rhs, binary
    Power,        // child^n, n >= 1, left-nested self-product
    CoordProj,    // coordinate projection; API-only, no surface syntax
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    ExprKind kind;
    std::vector<std::pair<int, ExprPtr>> terms;  // Sum: sign in {-1,+1}
    ExprPtr lhs, rhs;                            // Product
    ExprPtr child;                               // Conjugate, Power, CoordProj
    int power = 0;                               // Power
    int index = 0;                               // BasisConst, CoordProj
    Rational scalar;                             // ScalarConst

    static ExprPtr variable();
    static ExprPtr conj(ExprPtr c);
    static ExprPtr basis(int index);
    static ExprPtr constant(Rational value);
    static ExprPtr sum(std::vector<std::pair<int, ExprPtr>> terms);
    static ExprPtr product(ExprPtr l, ExprPtr r);
    static ExprPtr pow(ExprPtr c, int n);
    static ExprPtr coord(ExprPtr c, int index);
};

bool equal(const ExprPtr& a, const ExprPtr& b);

/// Syntax error with 1-based position info.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int line, int col)
        : std::runtime_error(std::move(msg)), line(line), col(col) {}
    int line, col;
};

/// Grammar:
///   expr   := ["+"|"-"] term (("+"|"-") term)*
///   term   := factor ("*" factor)?
///   factor := primary ("^" integer)*
///   primary:= rational | "x" | "e" digit | "conj" "(" expr ")" | "(" expr ")"
/// A second "*" inside one term is rejected: unparenthesized triple products
/// are ambiguous in a non-associative algebra.
ExprPtr parse(const std::string& text);

/// Rendering that reparses to an identical tree for any parser-produced
/// tree. CoordProj and negative scalar constants have no surface syntax and
/// print in a non-reparseable diagnostic form.
std::string print(const ExprPtr& e);

namespace detail {
template <class S>
S scalar_from_rational(const Rational& r) {
    return S(r);
}
template <>
inline double scalar_from_rational<double>(const Rational& r) {
    return to_double(r);
}
}  // namespace detail

/// Structural evaluation at a point; Product delegates to the algebra
/// multiplication, so this is exact over exact scalars.
template <class S>
Element<S> evaluate(const ExprPtr& e, const Element<S>& x) {
    const AlgebraSpec& alg = x.algebra();
    switch (e->kind) {
        case ExprKind::Variable:
            return x;
        case ExprKind::Conjugate:
            return conjugate(evaluate(e->child, x));
        case ExprKind::BasisConst:
            if (e->index >= alg.dim())
                throw std::invalid_argument("basis constant e" + std::to_string(e->index) +
                                            " does not fit in dimension " + std::to_string(alg.dim()));
            return Element<S>::basis(alg, e->index);
        case ExprKind::ScalarConst: {
            Element<S> r(alg);
            r[0] = detail::scalar_from_rational<S>(e->scalar);
            return r;
        }
        case ExprKind::Sum: {
            Element<S> acc(alg);
            for (const auto& [sign, term] : e->terms) {
                if (sign >= 0)
                    acc += evaluate(term, x);
                else
                    acc -= evaluate(term, x);
            }
            return acc;
        }
        case ExprKind::Product:
            return multiply(evaluate(e->lhs, x), evaluate(e->rhs, x));
        case ExprKind::Power: {
            if (e->power < 1) throw std::invalid_argument("power exponent must be >= 1");
            const Element<S> base = evaluate(e->child, x);
            Element<S> acc = base;
            for (int k = 1; k < e->power; ++k) acc = multiply(acc, base);
            return acc;
        }
        case ExprKind::CoordProj: {
            const Element<S> v = evaluate(e->child, x);
            Element<S> r(alg);
            r[0] = coordinate(v, e->index);
            return r;
        }
    }
    throw std::logic_error("unreachable");
}

/// Expands the expression into n real component polynomials by evaluating
/// it over the polynomial ring: lower(e)(coords of x) == evaluate(e, x)
/// identically. Rejects expansions beyond the supported total degree.
ComponentPolynomial lower(const ExprPtr& e, int n);

inline constexpr int kMaxLoweredDegree = 64;

/// Componentwise JSON wire format:
///   {"N": int, "components": [[{"exps": [int...], "coef": "p/q"}...]...]}
std::string component_polynomial_to_json(const ComponentPolynomial& p);
ComponentPolynomial component_polynomial_from_json(const std::string& text);

}  // namespace compalg
