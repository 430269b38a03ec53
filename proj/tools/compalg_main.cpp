#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "compalg/algebra.hpp"
#include "compalg/cayley_dickson.hpp"
#include "compalg/cr.hpp"
#include "compalg/expr.hpp"
#include "compalg/matrix_rep.hpp"
#include "compalg/report.hpp"

namespace {

using namespace compalg;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;   // checked and failed
constexpr int kExitUsage = 2;    // configuration / parse / io errors

std::string format_product(const Element<Rational>& p) {
    int nonzero = 0, idx = -1;
    for (int i = 0; i < p.dim(); ++i)
        if (p[i] != 0) {
            ++nonzero;
            idx = i;
        }
    if (nonzero == 0) return "0";
    if (nonzero == 1 && (p[idx] == 1 || p[idx] == -1))
        return (p[idx] < 0 ? "-e" : "e") + std::to_string(idx);
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < p.dim(); ++i) {
        if (i) os << ", ";
        os << to_string(p[i]);
    }
    os << ")";
    return os.str();
}

std::string tensor_json(const AlgebraSpec& alg) {
    nlohmann::ordered_json root;
    root["N"] = alg.dim();
    auto c = nlohmann::ordered_json::array();
    for (int s = 0; s < alg.dim(); ++s) {
        auto plane = nlohmann::ordered_json::array();
        for (int mu = 0; mu < alg.dim(); ++mu) {
            auto row = nlohmann::ordered_json::array();
            for (int nu = 0; nu < alg.dim(); ++nu) {
                const Rational& v = alg.c(s, mu, nu);
                if (denominator(v) == 1 && numerator(v) >= INT32_MIN && numerator(v) <= INT32_MAX)
                    row.push_back(numerator(v).convert_to<long long>());
                else
                    row.push_back(to_string(v));
            }
            plane.push_back(std::move(row));
        }
        c.push_back(std::move(plane));
    }
    root["c"] = std::move(c);
    return root.dump();
}

AlgebraSpec load_tensor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    nlohmann::json root;
    try {
        in >> root;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("bad JSON in '" + path + "': " + e.what());
    }
    if (!root.contains("N") || !root.contains("c"))
        throw std::invalid_argument("'" + path + "' needs keys N and c");
    const int n = root["N"].get<int>();
    std::vector<Rational> flat;
    flat.reserve(static_cast<std::size_t>(n) * n * n);
    const auto& c = root["c"];
    if (static_cast<int>(c.size()) != n) throw std::invalid_argument("tensor shape mismatch");
    for (const auto& plane : c) {
        if (static_cast<int>(plane.size()) != n) throw std::invalid_argument("tensor shape mismatch");
        for (const auto& row : plane) {
            if (static_cast<int>(row.size()) != n) throw std::invalid_argument("tensor shape mismatch");
            for (const auto& v : row) {
                if (v.is_number_integer())
                    flat.emplace_back(v.get<long long>());
                else if (v.is_string())
                    flat.push_back(parse_rational(v.get<std::string>()));
                else
                    throw std::invalid_argument("tensor entries must be integers or \"p/q\" strings");
            }
        }
    }
    return AlgebraSpec::from_tensor(n, std::move(flat));
}

// ---------------------------------------------------------------- table ---

int cmd_table(int n, const std::string& format, bool tensor, bool doubled,
              const std::string& alpha_text) {
    const AlgebraSpec* alg = &AlgebraSpec::canonical(n);
    AlgebraSpec storage = *alg;  // keep doubled table alive
    if (doubled) {
        storage = double_algebra(*alg, parse_rational(alpha_text));
        alg = &storage;
    }
    if (tensor) {
        std::cout << tensor_json(*alg) << "\n";
        return kExitOk;
    }
    const int d = alg->dim();
    if (format == "json") {
        nlohmann::ordered_json root;
        root["n"] = d;
        auto table = nlohmann::ordered_json::array();
        for (int mu = 0; mu < d; ++mu) {
            auto row = nlohmann::ordered_json::array();
            for (int nu = 0; nu < d; ++nu)
                row.push_back(format_product(
                    multiply(Element<Rational>::basis(*alg, mu), Element<Rational>::basis(*alg, nu))));
            table.push_back(std::move(row));
        }
        root["table"] = std::move(table);
        auto triples = nlohmann::ordered_json::array();
        for (const auto& t : alg->positive_triples()) triples.push_back({t.i, t.j, t.k});
        root["triples"] = std::move(triples);
        std::cout << root.dump() << "\n";
        return kExitOk;
    }
    if (format == "csv") {
        std::cout << "i,j,product\n";
        for (int mu = 0; mu < d; ++mu)
            for (int nu = 0; nu < d; ++nu)
                std::cout << mu << "," << nu << ","
                          << format_product(multiply(Element<Rational>::basis(*alg, mu),
                                                     Element<Rational>::basis(*alg, nu)))
                          << "\n";
        return kExitOk;
    }
    std::cout << "algebra N=" << d << "\n";
    if (doubled) std::cout << "doubling convention: " << doubling_convention() << "\n";
    for (int mu = 0; mu < d; ++mu)
        for (int nu = 0; nu < d; ++nu)
            std::cout << "e" << mu << "*e" << nu << " = "
                      << format_product(multiply(Element<Rational>::basis(*alg, mu),
                                                 Element<Rational>::basis(*alg, nu)))
                      << "\n";
    std::cout << "positive triples:";
    const auto triples = alg->positive_triples();
    if (triples.empty()) std::cout << " none";
    for (const auto& t : triples) std::cout << " (" << t.i << "," << t.j << "," << t.k << ")";
    std::cout << "\n";
    return kExitOk;
}

// --------------------------------------------------------------- verify ---

int cmd_verify(int n, int samples, std::uint64_t seed, const std::string& format,
               bool mutate_epsilon) {
    AlgebraSpec alg = AlgebraSpec::canonical(n);
    if (mutate_epsilon) {
        // deliberately corrupt the orientation data: reverse one triple, or
        // flip the imaginary square when there is none
        if (n == 8) {
            auto triples = AlgebraSpec::octonion_triples();
            std::swap(triples.front().i, triples.front().j);
            alg = AlgebraSpec::from_triples(n, triples);
        } else if (n == 4) {
            alg = AlgebraSpec::from_triples(4, {{2, 1, 3}});
        } else if (n == 2) {
            std::vector<Rational> flat(8, Rational(0));
            auto at = [&](int s, int mu, int nu) -> Rational& {
                return flat[static_cast<std::size_t>((s * 2 + mu) * 2 + nu)];
            };
            at(0, 0, 0) = 1;
            at(1, 0, 1) = 1;
            at(1, 1, 0) = 1;
            at(0, 1, 1) = 1;  // e1^2 = +e0 breaks the composition law
            alg = AlgebraSpec::from_tensor(2, std::move(flat));
        }
    }

    auto report = verify_algebra_identities(alg, samples, seed);
    std::vector<IdentityCheck> checks = report.checks;
    if (!mutate_epsilon && (n == 2 || n == 4 || n == 8)) {
        checks.push_back({"operator-factorization", factorization_check(n), ""});
        checks.push_back({"index-transposition", lemma2_identity_check(n), ""});
    }
    if (!mutate_epsilon && n == 8) {
        bool embed_ok = true;
        std::string witness;
        for (int mu = 0; mu < 8 && embed_ok; ++mu)
            for (int nu = 0; nu < 8 && embed_ok; ++nu) {
                const auto a = Element<Rational>::basis(alg, mu);
                const auto b = Element<Rational>::basis(alg, nu);
                if (!(op_multiply(embed(a), embed(b)) == embed(multiply(a, b)))) {
                    embed_ok = false;
                    witness = "mu=" + std::to_string(mu) + " nu=" + std::to_string(nu);
                }
            }
        checks.push_back({"matrix-embedding", embed_ok, witness});
    }

    bool all = true;
    for (const auto& c : checks) all = all && c.pass;

    if (format == "json") {
        nlohmann::ordered_json root;
        root["n"] = n;
        root["samples"] = samples;
        root["seed"] = seed;
        auto arr = nlohmann::ordered_json::array();
        for (const auto& c : checks) {
            nlohmann::ordered_json e;
            e["name"] = c.name;
            e["pass"] = c.pass;
            if (!c.pass) e["counterexample"] = c.counterexample;
            arr.push_back(std::move(e));
        }
        root["checks"] = std::move(arr);
        root["all_pass"] = all;
        std::cout << root.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "check,result\n";
        for (const auto& c : checks) std::cout << c.name << "," << (c.pass ? "pass" : "fail") << "\n";
    } else {
        std::cout << "n: " << n << ", samples: " << samples << ", seed: " << seed << "\n";
        for (const auto& c : checks) {
            std::cout << c.name << ": " << (c.pass ? "pass" : "FAIL");
            if (!c.pass && !c.counterexample.empty()) std::cout << " (" << c.counterexample << ")";
            std::cout << "\n";
        }
        std::cout << "result: " << (all ? "all passed" : "failures detected") << "\n";
    }
    return all ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------- check ---

int cmd_check(int n, const std::string& expr_text, const std::string& file_path,
              const std::string& form_name, const std::string& kappa_text, int samples,
              std::uint64_t seed, double tol, const std::string& format) {
    ComponentPolynomial u;
    if (!expr_text.empty()) {
        u = lower(parse(expr_text), n);
    } else {
        std::ifstream in(file_path);
        if (!in) throw std::invalid_argument("cannot open '" + file_path + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        u = component_polynomial_from_json(buf.str());
        if (u.dim() != n)
            throw std::invalid_argument("file function has dimension " + std::to_string(u.dim()) +
                                        ", expected " + std::to_string(n));
    }

    CheckConfig cfg;
    cfg.n = n;
    const auto form = check_form_from_name(form_name);
    if (!form) throw std::invalid_argument("unknown form '" + form_name + "'");
    cfg.form = *form;
    if (cfg.form == CheckForm::kappa) {
        if (kappa_text.empty()) throw std::invalid_argument("--form kappa needs --kappa p/q");
        cfg.kappa = parse_rational(kappa_text);
    } else if (!kappa_text.empty()) {
        throw std::invalid_argument("--kappa only applies to --form kappa");
    }
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.tolerance = tol;

    const auto report = check_function(u, cfg);
    if (format == "json")
        std::cout << report.to_json() << "\n";
    else if (format == "csv")
        std::cout << report.to_csv();
    else
        std::cout << report.to_plain();
    return report.analytic ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------- emit-matrix ---

std::string entry_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    if (p.terms().size() == 1) {
        const auto& [exps, coef] = *p.terms().begin();
        int var = -1, total = 0;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            total += exps[i];
            if (exps[i] == 1) var = static_cast<int>(i);
        }
        if (total == 1 && (coef == 1 || coef == -1))
            return (coef < 0 ? "-d" : "+d") + std::to_string(var);
    }
    return p.str("d");
}

int cmd_emit_matrix(int n, const std::string& variant_name, const std::string& format) {
    Variant variant;
    if (variant_name == "analytic")
        variant = Variant::analytic;
    else if (variant_name == "antianalytic")
        variant = Variant::antianalytic;
    else
        throw std::invalid_argument("variant must be analytic or antianalytic");

    const auto op = dirac_matrix(n, variant);
    if (format == "json") {
        nlohmann::ordered_json root;
        root["n"] = n;
        root["variant"] = variant_name;
        auto rows = nlohmann::ordered_json::array();
        for (int r = 0; r < n; ++r) {
            auto row = nlohmann::ordered_json::array();
            for (int c = 0; c < n; ++c) row.push_back(entry_string(op.at(r, c)));
            rows.push_back(std::move(row));
        }
        root["rows"] = std::move(rows);
        std::cout << root.dump() << "\n";
        return kExitOk;
    }
    const char* sep = format == "csv" ? "," : " ";
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            if (c) std::cout << sep;
            std::cout << entry_string(op.at(r, c));
        }
        std::cout << "\n";
    }
    return kExitOk;
}

// ------------------------------------------------------------------ iso ---

int cmd_iso(const std::string& path_a, const std::string& path_b, const std::string& format) {
    const AlgebraSpec a = load_tensor_file(path_a);
    const AlgebraSpec b = load_tensor_file(path_b);
    const auto phi = find_isomorphism(a, b);
    if (format == "json") {
        nlohmann::ordered_json root;
        root["found"] = phi.has_value();
        if (phi) {
            root["perm"] = phi->perm;
            root["sign"] = phi->sign;
        }
        std::cout << root.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "mu,image,sign\n";
        if (phi)
            for (int mu = 0; mu < phi->dim(); ++mu)
                std::cout << mu << "," << phi->perm[static_cast<std::size_t>(mu)] << ","
                          << phi->sign[static_cast<std::size_t>(mu)] << "\n";
    } else {
        if (phi)
            std::cout << "isomorphism: " << phi->describe() << "\n";
        else
            std::cout << "none\n";
    }
    return phi ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"composition-algebra tables, identity verification and analyticity checks"};
    app.require_subcommand(1);

    int n = 8;
    int samples = 20;
    std::uint64_t seed = 42;
    double tol = 1e-9;
    std::string format = "plain";
    std::string expr_text, file_path, form_name = "real", kappa_text, variant_name = "antianalytic";
    std::string iso_a, iso_b, alpha_text = "-1";
    bool tensor = false, doubled = false, mutate_epsilon = false;

    auto* table = app.add_subcommand("table", "print a basis multiplication table");
    table->add_option("--n", n, "algebra dimension")->required();
    table->add_option("--format", format, "plain|json|csv");
    table->add_flag("--tensor", tensor, "emit the structure tensor as JSON");
    table->add_flag("--double", doubled, "double the canonical algebra first");
    table->add_option("--alpha", alpha_text, "doubling twist (with --double)");

    auto* verify = app.add_subcommand("verify", "run the exact identity suite");
    verify->add_option("--n", n, "algebra dimension")->required();
    verify->add_option("--samples", samples, "random samples per identity");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--format", format, "plain|json|csv");
    verify->add_flag("--mutate-epsilon", mutate_epsilon)->group("");  // testing hook

    auto* check = app.add_subcommand("check", "test a function against a Cauchy-Riemann form");
    check->add_option("--n", n, "algebra dimension")->required();
    auto* oexpr = check->add_option("--expr", expr_text, "function in the expression language");
    auto* ofile = check->add_option("--file", file_path, "componentwise JSON file");
    oexpr->excludes(ofile);
    check->add_option("--form", form_name, "real|quat|complex|vector|jadczyk|kappa");
    check->add_option("--kappa", kappa_text, "kappa value p/q (with --form kappa)");
    check->add_option("--samples", samples, "sample points");
    check->add_option("--seed", seed, "random seed");
    check->add_option("--tol", tol, "residual tolerance");
    check->add_option("--format", format, "plain|json|csv");

    auto* emit = app.add_subcommand("emit-matrix", "print the symbolic operator matrix");
    emit->add_option("--n", n, "algebra dimension")->required();
    emit->add_option("--variant", variant_name, "analytic|antianalytic");
    emit->add_option("--format", format, "plain|json|csv");

    auto* iso = app.add_subcommand("iso", "search for a signed-permutation isomorphism");
    iso->add_option("a", iso_a, "structure tensor file")->required();
    iso->add_option("b", iso_b, "structure tensor file")->required();
    iso->add_option("--format", format, "plain|json|csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (format != "plain" && format != "json" && format != "csv") {
        std::cerr << "error: unknown format '" << format << "'\n";
        return kExitUsage;
    }

    try {
        if (table->parsed()) return cmd_table(n, format, tensor, doubled, alpha_text);
        if (verify->parsed()) return cmd_verify(n, samples, seed, format, mutate_epsilon);
        if (check->parsed()) {
            if (expr_text.empty() && file_path.empty()) {
                std::cerr << "error: check needs --expr or --file\n";
                return kExitUsage;
            }
            return cmd_check(n, expr_text, file_path, form_name, kappa_text, samples, seed, tol,
                             format);
        }
        if (emit->parsed()) return cmd_emit_matrix(n, variant_name, format);
        if (iso->parsed()) return cmd_iso(iso_a, iso_b, format);
    } catch (const ParseError& e) {
        std::cerr << "parse error at " << e.line << ":" << e.col << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
