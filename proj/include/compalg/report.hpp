#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "compalg/cr.hpp"
#include "compalg/polynomial.hpp"
#include "compalg/rational.hpp"

namespace compalg {

enum class CheckForm { real, quaternionic, complex_pairs, vector, jadczyk, kappa };

std::string check_form_name(CheckForm f);
std::optional<CheckForm> check_form_from_name(const std::string& name);

struct CheckConfig {
    int n = 8;
    CheckForm form = CheckForm::real;
    std::optional<Rational> kappa;  // required for CheckForm::kappa
    int samples = 20;
    std::uint64_t seed = 42;
    double tolerance = 1e-9;
};

/// Residual survey of one function at sampled points. The verdict is
/// "analytic" iff the max residual is within tolerance at every sampled
/// point; on the exact path residuals are exact rationals and the verdict
/// is tolerance-free in practice.
struct ResidualReport {
    std::string form;
    std::optional<Rational> kappa;
    std::vector<std::vector<Rational>> points;
    std::vector<Rational> point_max;  // max |residual component| per point
    std::vector<double> point_l2;     // Euclidean norm per point
    Rational max_residual{0};
    double tolerance = 1e-9;
    std::uint64_t seed = 42;
    std::string scalar_field = "rational";
    bool analytic = false;

    std::string verdict() const { return analytic ? "analytic" : "not-analytic"; }
    std::string to_json() const;
    std::string to_plain() const;
    std::string to_csv() const;
};

/// Samples integer-coordinate points in [-3,3]^n and evaluates the chosen
/// residual form exactly at each.
ResidualReport check_function(const ComponentPolynomial& u, const CheckConfig& cfg);

}  // namespace compalg
