#pragma once

#include <array>

#include "compalg/algebra.hpp"

namespace compalg {

/// Entry of the 2x2 operator representation: a quaternion value, optionally
/// carrying one trailing conjugation-root symbol. The symbol is a flag and
/// never a standalone value; products normalize it away via the square rule,
/// so higher powers are unrepresentable by construction.
struct OperatorEntry {
    Element<Rational> value;
    bool eps = false;

    OperatorEntry() : value(AlgebraSpec::quaternions()) {}
    OperatorEntry(Element<Rational> v, bool flag) : value(std::move(v)), eps(flag) {}
    bool is_zero() const {
        for (int i = 0; i < value.dim(); ++i)
            if (value[i] != 0) return false;
        return true;
    }
    friend bool operator==(const OperatorEntry& a, const OperatorEntry& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.eps == b.eps && a.value == b.value;
    }
};

/// 2x2 matrix with operator entries. Octonions embed as
/// [[q1, -q2 eps], [q2 eps, q1]] with q1 = e0..e3 half, q2 = e4..e7 half.
class OpMatrix {
public:
    OpMatrix() = default;
    const OperatorEntry& at(int r, int c) const { return m_[index(r, c)]; }
    OperatorEntry& at(int r, int c) { return m_[index(r, c)]; }

    static OpMatrix identity();

    friend bool operator==(const OpMatrix& a, const OpMatrix& b) { return a.m_ == b.m_; }

private:
    static std::size_t index(int r, int c) { return static_cast<std::size_t>(r * 2 + c); }
    std::array<OperatorEntry, 4> m_{};
};

/// Entry product under the twist rules:
///   (q1 eps)(q2 eps) = conj(q2) q1
///   (q1 eps) q2      = (q1 conj(q2)) eps
///   q1 (q2 eps)      = (q2 q1) eps
///   eps eps          = 1
OperatorEntry entry_multiply(const OperatorEntry& a, const OperatorEntry& b);

/// Splits an octonion into quaternion halves and builds the 2x2 form.
OpMatrix embed(const Element<Rational>& theta);

/// Inverse of embed; rejects matrices without the embedded shape, naming
/// the offending entry.
Element<Rational> extract(const OpMatrix& m);

/// Plain 2x2 matrix multiplication with entry products following the twist
/// rules. Together with embed this realizes the octonion product.
OpMatrix op_multiply(const OpMatrix& a, const OpMatrix& b);

/// Conjugation as the sandwich between two copies of the diagonal
/// conjugation-root operator. Sandwiched products reverse order, which
/// makes the flagged entries pass through unconjugated while plain entries
/// conjugate; the diagonal sign pattern supplies the rest. The result is
/// checked against coefficient-level conjugation before returning.
OpMatrix conjugate_by_epsilon(const OpMatrix& m);

}  // namespace compalg
