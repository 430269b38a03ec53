#include "compalg/report.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "compalg/rng.hpp"

namespace compalg {

std::string check_form_name(CheckForm f) {
    switch (f) {
        case CheckForm::real: return "real";
        case CheckForm::quaternionic: return "quat";
        case CheckForm::complex_pairs: return "complex";
        case CheckForm::vector: return "vector";
        case CheckForm::jadczyk: return "jadczyk";
        case CheckForm::kappa: return "kappa";
    }
    return "?";
}

std::optional<CheckForm> check_form_from_name(const std::string& name) {
    if (name == "real") return CheckForm::real;
    if (name == "quat") return CheckForm::quaternionic;
    if (name == "complex") return CheckForm::complex_pairs;
    if (name == "vector") return CheckForm::vector;
    if (name == "jadczyk") return CheckForm::jadczyk;
    if (name == "kappa") return CheckForm::kappa;
    return std::nullopt;
}

namespace {

std::vector<Rational> form_residual(const ComponentPolynomial& u, const std::vector<Rational>& x,
                                    const CheckConfig& cfg) {
    switch (cfg.form) {
        case CheckForm::real:
            return residual_real(u, x, Variant::analytic).coeffs();
        case CheckForm::quaternionic:
            return residual_blocks(u, x, BlockForm::quaternionic).coeffs();
        case CheckForm::complex_pairs:
            return residual_blocks(u, x, BlockForm::complex_pairs).coeffs();
        case CheckForm::vector: {
            const auto [s, v] = residual_vector_form(u, x);
            std::vector<Rational> out;
            out.reserve(v.size() + 1);
            out.push_back(s);
            out.insert(out.end(), v.begin(), v.end());
            return out;
        }
        case CheckForm::jadczyk:
            return residual_jadczyk(u, x);
        case CheckForm::kappa:
            if (!cfg.kappa) throw std::invalid_argument("kappa form needs a kappa value");
            return residual_kappa(u, x, *cfg.kappa);
    }
    throw std::logic_error("unreachable");
}

}  // namespace

ResidualReport check_function(const ComponentPolynomial& u, const CheckConfig& cfg) {
    if (u.dim() != cfg.n)
        throw std::invalid_argument("function dimension does not match the configured n");
    ResidualReport rep;
    rep.form = check_form_name(cfg.form);
    rep.kappa = cfg.kappa;
    rep.tolerance = cfg.tolerance;
    rep.seed = cfg.seed;
    rep.analytic = true;

    Rng rng(cfg.seed);
    for (int s = 0; s < cfg.samples; ++s) {
        const auto x = rng.grid_point(cfg.n);
        const auto r = form_residual(u, x, cfg);
        Rational mx = 0;
        double l2sq = 0;
        for (const auto& v : r) {
            const Rational a = v < 0 ? Rational(-v) : v;
            if (a > mx) mx = a;
            const double d = to_double(v);
            l2sq += d * d;
        }
        if (to_double(mx) > cfg.tolerance) rep.analytic = false;
        if (mx > rep.max_residual) rep.max_residual = mx;
        rep.points.push_back(x);
        rep.point_max.push_back(mx);
        rep.point_l2.push_back(std::sqrt(l2sq));
    }
    return rep;
}

std::string ResidualReport::to_json() const {
    nlohmann::ordered_json root;
    root["form"] = form;
    if (kappa)
        root["kappa"] = to_string(*kappa);
    else
        root["kappa"] = nullptr;
    auto pts = nlohmann::ordered_json::array();
    for (const auto& p : points) {
        auto row = nlohmann::ordered_json::array();
        for (const auto& c : p) row.push_back(to_string(c));
        pts.push_back(std::move(row));
    }
    root["points"] = std::move(pts);
    root["max_residual"] = to_decimal_string(max_residual);
    root["verdict"] = verdict();
    root["tolerance"] = to_decimal_string(tolerance);
    root["seed"] = seed;
    return root.dump();
}

std::string ResidualReport::to_plain() const {
    std::ostringstream os;
    os << "form: " << form << "\n";
    if (kappa) os << "kappa: " << to_string(*kappa) << "\n";
    os << "points: " << points.size() << " (seed " << seed << ")\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
        os << "  point " << i << " (";
        for (std::size_t j = 0; j < points[i].size(); ++j) {
            if (j) os << ", ";
            os << to_string(points[i][j]);
        }
        os << "): max " << to_string(point_max[i]) << "\n";
    }
    os << "max residual: " << to_decimal_string(max_residual) << "\n";
    os << "tolerance: " << to_decimal_string(tolerance) << "\n";
    os << "verdict: " << verdict() << "\n";
    return os.str();
}

std::string ResidualReport::to_csv() const {
    std::ostringstream os;
    os << "point,max_residual\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
        os << "\"";
        for (std::size_t j = 0; j < points[i].size(); ++j) {
            if (j) os << ";";
            os << to_string(points[i][j]);
        }
        os << "\"," << "\"" << to_string(point_max[i]) << "\"\n";
    }
    os << "verdict," << verdict() << "\n";
    return os.str();
}

}  // namespace compalg
