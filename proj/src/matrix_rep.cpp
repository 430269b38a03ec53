#include "compalg/matrix_rep.hpp"

#include <stdexcept>
#include <string>

namespace compalg {

namespace {

const AlgebraSpec& H() { return AlgebraSpec::quaternions(); }

OperatorEntry entry_add(const OperatorEntry& a, const OperatorEntry& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.eps != b.eps)
        throw std::invalid_argument("cannot add a flagged and an unflagged operator entry");
    return {a.value + b.value, a.eps};
}

}  // namespace

OperatorEntry entry_multiply(const OperatorEntry& a, const OperatorEntry& b) {
    if (a.eps && b.eps) return {multiply(conjugate(b.value), a.value), false};
    if (a.eps) return {multiply(a.value, conjugate(b.value)), true};
    if (b.eps) return {multiply(b.value, a.value), true};
    return {multiply(a.value, b.value), false};
}

OpMatrix OpMatrix::identity() {
    OpMatrix m;
    m.at(0, 0) = {Element<Rational>::unit(H()), false};
    m.at(1, 1) = {Element<Rational>::unit(H()), false};
    return m;
}

OpMatrix embed(const Element<Rational>& theta) {
    if (theta.dim() != 8) throw std::invalid_argument("embed expects an octonion");
    Element<Rational> q1(H()), q2(H());
    for (int i = 0; i < 4; ++i) {
        q1[i] = theta[i];
        q2[i] = theta[i + 4];
    }
    OpMatrix m;
    m.at(0, 0) = {q1, false};
    m.at(0, 1) = {-q2, true};
    m.at(1, 0) = {q2, true};
    m.at(1, 1) = {q1, false};
    return m;
}

Element<Rational> extract(const OpMatrix& m) {
    const auto reject = [](const char* which) {
        throw std::invalid_argument(std::string("matrix does not have the embedded shape: entry ") +
                                    which);
    };
    if (!m.at(0, 0).is_zero() && m.at(0, 0).eps) reject("(0,0) carries the flag");
    if (!m.at(1, 1).is_zero() && m.at(1, 1).eps) reject("(1,1) carries the flag");
    if (!(m.at(0, 0).value == m.at(1, 1).value)) reject("(1,1) must repeat (0,0)");
    if (!m.at(0, 1).is_zero() && !m.at(0, 1).eps) reject("(0,1) must carry the flag");
    if (!m.at(1, 0).is_zero() && !m.at(1, 0).eps) reject("(1,0) must carry the flag");
    if (!(m.at(0, 1).value == -m.at(1, 0).value)) reject("(0,1) must negate (1,0)");

    const auto& q1 = m.at(0, 0).value;
    const auto& q2 = m.at(1, 0).value;
    Element<Rational> theta(AlgebraSpec::octonions());
    for (int i = 0; i < 4; ++i) {
        theta[i] = q1[i];
        theta[i + 4] = q2[i];
    }
    return theta;
}

OpMatrix op_multiply(const OpMatrix& a, const OpMatrix& b) {
    OpMatrix c;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            c.at(i, j) =
                entry_add(entry_multiply(a.at(i, 0), b.at(0, j)), entry_multiply(a.at(i, 1), b.at(1, j)));
    return c;
}

OpMatrix conjugate_by_epsilon(const OpMatrix& m) {
    const Element<Rational> x = extract(m);  // rejects non-embedded input

    OpMatrix s;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            OperatorEntry e = m.at(i, j);
            if (!e.eps) e.value = conjugate(e.value);
            const int sign = (i == j) ? 1 : -1;  // diagonal pattern (+1, -1)
            if (sign < 0) e.value = -e.value;
            s.at(i, j) = e;
        }

    if (!(s == embed(conjugate(x))))
        throw std::logic_error("sandwich conjugation disagrees with coefficient conjugation");
    return s;
}

}  // namespace compalg
