#pragma once

#include <vector>

#include "compalg/polynomial.hpp"

namespace compalg {

/// n x n matrix whose entries are polynomials in n commuting symbols
/// d_0..d_{n-1} standing for the partial derivatives. Composition is the
/// matrix product over the polynomial ring.
struct SymbolicOperator {
    int n = 0;
    std::vector<Polynomial> entries;  // row-major

    static SymbolicOperator zero(int n);
    static SymbolicOperator scalar(int n, const Polynomial& p);  // p * identity

    const Polynomial& at(int r, int c) const {
        return entries[static_cast<std::size_t>(r * n + c)];
    }
    Polynomial& at(int r, int c) { return entries[static_cast<std::size_t>(r * n + c)]; }

    friend bool operator==(const SymbolicOperator& a, const SymbolicOperator& b) {
        return a.n == b.n && a.entries == b.entries;
    }
};

SymbolicOperator compose(const SymbolicOperator& a, const SymbolicOperator& b);

/// sum_mu d_mu^2
Polynomial laplacian_symbol(int n);

/// Interprets each monomial d^alpha as the differential operator
/// partial^alpha and applies the matrix to a componentwise function:
/// (op U)^r = sum_c op(r,c)(partial) U^c.
ComponentPolynomial apply(const SymbolicOperator& op, const ComponentPolynomial& u);

}  // namespace compalg
