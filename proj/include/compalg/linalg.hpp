#pragma once

#include <optional>
#include <vector>

#include "compalg/rational.hpp"

namespace compalg {

using RatRow = std::vector<Rational>;
using RatMatrix = std::vector<RatRow>;

struct RrefResult {
    RatMatrix mat;               // reduced row echelon form, zero rows dropped
    std::vector<int> pivot_cols; // ascending
    int rank = 0;
};

/// Gauss-Jordan elimination over the rationals, first nonzero pivot per
/// column, fully reduced. Deterministic.
RrefResult rref(RatMatrix m);

/// Basis of {x : M x = 0} with one vector per free column, free columns
/// ascending, entry +1 at the free column. Deterministic.
std::vector<RatRow> nullspace_basis(const RatMatrix& m, int ncols);

/// Particular solution of M x = rhs, or nullopt when inconsistent.
std::optional<RatRow> solve(const RatMatrix& m, const RatRow& rhs);

/// True when the row spaces coincide (identical RREF).
bool same_row_space(const RatMatrix& a, const RatMatrix& b, int ncols);

/// Finds R with R * A = B, or nullopt when some row of B lies outside the
/// row space of A. Used to pin down constant reshufflings between
/// first-order systems.
std::optional<RatMatrix> solve_left_factor(const RatMatrix& a, const RatMatrix& b);

/// Rank, via elimination.
int rank(RatMatrix m);

}  // namespace compalg
