#include "compalg/symbolic.hpp"

#include <stdexcept>

namespace compalg {

SymbolicOperator SymbolicOperator::zero(int n) {
    SymbolicOperator op;
    op.n = n;
    op.entries.assign(static_cast<std::size_t>(n) * n, Polynomial());
    return op;
}

SymbolicOperator SymbolicOperator::scalar(int n, const Polynomial& p) {
    SymbolicOperator op = zero(n);
    for (int i = 0; i < n; ++i) op.at(i, i) = p;
    return op;
}

SymbolicOperator compose(const SymbolicOperator& a, const SymbolicOperator& b) {
    if (a.n != b.n) throw std::invalid_argument("operator size mismatch");
    SymbolicOperator c = SymbolicOperator::zero(a.n);
    for (int r = 0; r < a.n; ++r)
        for (int k = 0; k < a.n; ++k) {
            if (a.at(r, k).is_zero()) continue;
            for (int col = 0; col < a.n; ++col) {
                if (b.at(k, col).is_zero()) continue;
                c.at(r, col) += a.at(r, k) * b.at(k, col);
            }
        }
    return c;
}

Polynomial laplacian_symbol(int n) {
    Polynomial p;
    for (int i = 0; i < n; ++i) {
        const Polynomial d = Polynomial::variable(n, i);
        p += d * d;
    }
    return p;
}

ComponentPolynomial apply(const SymbolicOperator& op, const ComponentPolynomial& u) {
    if (op.n != u.dim()) throw std::invalid_argument("operator and function dimension mismatch");
    ComponentPolynomial out = ComponentPolynomial::zero(u.nvars);
    for (int r = 0; r < op.n; ++r)
        for (int c = 0; c < op.n; ++c) {
            const Polynomial& entry = op.at(r, c);
            for (const auto& [alpha, coef] : entry.terms()) {
                Polynomial term = u.comp[static_cast<std::size_t>(c)];
                for (std::size_t v = 0; v < alpha.size(); ++v)
                    for (int k = 0; k < alpha[v]; ++k) term = term.derivative(static_cast<int>(v));
                out.comp[static_cast<std::size_t>(r)] += term * coef;
            }
        }
    return out;
}

}  // namespace compalg
