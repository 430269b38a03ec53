#include "compalg/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace compalg {

RrefResult rref(RatMatrix m) {
    RrefResult out;
    if (m.empty()) return out;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::size_t piv = 0;
    for (std::size_t c = 0; c < cols && piv < rows; ++c) {
        std::size_t sel = piv;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[piv], m[sel]);
        const Rational inv = m[piv][c];
        for (std::size_t cc = c; cc < cols; ++cc) m[piv][cc] /= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == piv || m[r][c] == 0) continue;
            const Rational f = m[r][c];
            for (std::size_t cc = c; cc < cols; ++cc)
                if (m[piv][cc] != 0) m[r][cc] -= f * m[piv][cc];
        }
        out.pivot_cols.push_back(static_cast<int>(c));
        ++piv;
    }
    out.rank = static_cast<int>(piv);
    m.resize(piv);
    out.mat = std::move(m);
    return out;
}

std::vector<RatRow> nullspace_basis(const RatMatrix& m, int ncols) {
    const auto r = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
    for (int c : r.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<RatRow> basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        RatRow v(static_cast<std::size_t>(ncols), Rational(0));
        v[static_cast<std::size_t>(f)] = 1;
        for (std::size_t row = 0; row < r.mat.size(); ++row) {
            const int p = r.pivot_cols[row];
            v[static_cast<std::size_t>(p)] = -r.mat[row][static_cast<std::size_t>(f)];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatRow> solve(const RatMatrix& m, const RatRow& rhs) {
    if (m.size() != rhs.size()) throw std::invalid_argument("solve: shape mismatch");
    if (m.empty()) return RatRow{};
    const std::size_t cols = m.front().size();
    RatMatrix aug = m;
    for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(rhs[r]);
    const auto red = rref(std::move(aug));
    RatRow x(cols, Rational(0));
    for (std::size_t row = 0; row < red.mat.size(); ++row) {
        const int p = red.pivot_cols[row];
        if (static_cast<std::size_t>(p) == cols) return std::nullopt;  // 0 = nonzero
        x[static_cast<std::size_t>(p)] = red.mat[row].back();
    }
    return x;
}

bool same_row_space(const RatMatrix& a, const RatMatrix& b, int ncols) {
    auto pad = [&](RatMatrix m) {
        for (auto& row : m) row.resize(static_cast<std::size_t>(ncols), Rational(0));
        return rref(std::move(m)).mat;
    };
    return pad(a) == pad(b);
}

std::optional<RatMatrix> solve_left_factor(const RatMatrix& a, const RatMatrix& b) {
    if (a.empty() || b.empty()) return RatMatrix{};
    const std::size_t cols = a.front().size();
    // transpose A once; each row r of B needs x with x A = r, i.e. A^T x^T = r^T
    RatMatrix at(cols, RatRow(a.size(), Rational(0)));
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) at[c][r] = a[r][c];
    RatMatrix result;
    for (const auto& row : b) {
        if (row.size() != cols) throw std::invalid_argument("solve_left_factor: shape mismatch");
        auto x = solve(at, row);
        if (!x) return std::nullopt;
        result.push_back(std::move(*x));
    }
    return result;
}

int rank(RatMatrix m) { return rref(std::move(m)).rank; }

}  // namespace compalg
