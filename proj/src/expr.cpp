#include "compalg/expr.hpp"

#include <cctype>
#include <sstream>

#include <nlohmann/json.hpp>

namespace compalg {

ExprPtr Expr::variable() {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Variable;
    return e;
}
ExprPtr Expr::conj(ExprPtr c) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Conjugate;
    e->child = std::move(c);
    return e;
}
ExprPtr Expr::basis(int index) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::BasisConst;
    e->index = index;
    return e;
}
ExprPtr Expr::constant(Rational value) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::ScalarConst;
    e->scalar = std::move(value);
    return e;
}
ExprPtr Expr::sum(std::vector<std::pair<int, ExprPtr>> terms) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Sum;
    e->terms = std::move(terms);
    return e;
}
ExprPtr Expr::product(ExprPtr l, ExprPtr r) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Product;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
}
ExprPtr Expr::pow(ExprPtr c, int n) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Power;
    e->child = std::move(c);
    e->power = n;
    return e;
}
ExprPtr Expr::coord(ExprPtr c, int index) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::CoordProj;
    e->child = std::move(c);
    e->index = index;
    return e;
}

bool equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
        case ExprKind::Variable: return true;
        case ExprKind::Conjugate: return equal(a->child, b->child);
        case ExprKind::BasisConst: return a->index == b->index;
        case ExprKind::ScalarConst: return a->scalar == b->scalar;
        case ExprKind::Sum: {
            if (a->terms.size() != b->terms.size()) return false;
            for (std::size_t i = 0; i < a->terms.size(); ++i)
                if (a->terms[i].first != b->terms[i].first ||
                    !equal(a->terms[i].second, b->terms[i].second))
                    return false;
            return true;
        }
        case ExprKind::Product: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
        case ExprKind::Power: return a->power == b->power && equal(a->child, b->child);
        case ExprKind::CoordProj: return a->index == b->index && equal(a->child, b->child);
    }
    return false;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    ExprPtr run() {
        skip_ws();
        ExprPtr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char get() {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(peek()))) get();
    }
    bool accept(char c) {
        skip_ws();
        if (peek() == c) {
            get();
            return true;
        }
        return false;
    }
    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        get();
    }

    BigInt read_integer() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
        return BigInt(digits);
    }

    ExprPtr parse_expr() {
        std::vector<std::pair<int, ExprPtr>> terms;
        int sign = 1;
        skip_ws();
        if (peek() == '+' || peek() == '-') sign = get() == '-' ? -1 : 1;
        terms.emplace_back(sign, parse_term());
        for (;;) {
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                const int s = get() == '-' ? -1 : 1;
                terms.emplace_back(s, parse_term());
            } else {
                break;
            }
        }
        if (terms.size() == 1 && terms.front().first == 1) return terms.front().second;
        return Expr::sum(std::move(terms));
    }

    ExprPtr parse_term() {
        skip_ws();
        const std::size_t term_start = pos_;
        ExprPtr left = parse_factor();
        if (!accept('*')) return left;
        ExprPtr right = parse_factor();
        skip_ws();
        if (peek() == '*') {
            const std::string span = text_.substr(term_start, pos_ - term_start + 1);
            fail("ambiguous product needs explicit grouping near '" + span + "'");
        }
        return Expr::product(std::move(left), std::move(right));
    }

    ExprPtr parse_factor() {
        ExprPtr base = parse_primary();
        while (accept('^')) {
            const BigInt n = read_integer();
            if (n < 1) fail("power exponent must be >= 1");
            if (n > kMaxLoweredDegree) fail("power exponent too large");
            base = Expr::pow(std::move(base), n.convert_to<int>());
        }
        return base;
    }

    ExprPtr parse_primary() {
        skip_ws();
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const BigInt num = read_integer();
            // disambiguate rational "p/q" from "^" etc.; '/' only follows here
            if (accept('/')) {
                const BigInt den = read_integer();
                if (den == 0) fail("zero denominator");
                return Expr::constant(Rational(num, den));
            }
            return Expr::constant(Rational(num));
        }
        if (c == '(') {
            get();
            ExprPtr inner = parse_expr();
            expect(')');
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string word;
            while (std::isalpha(static_cast<unsigned char>(peek()))) word += get();
            if (word == "x") return Expr::variable();
            if (word == "e") {
                if (!std::isdigit(static_cast<unsigned char>(peek())))
                    fail("basis constant needs a digit, e.g. e3");
                const int idx = get() - '0';
                return Expr::basis(idx);
            }
            if (word == "conj") {
                expect('(');
                ExprPtr inner = parse_expr();
                expect(')');
                return Expr::conj(std::move(inner));
            }
            fail("unknown identifier '" + word + "'");
        }
        fail("expected a factor");
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

bool is_atomic(const ExprPtr& e) {
    switch (e->kind) {
        case ExprKind::Variable:
        case ExprKind::BasisConst:
        case ExprKind::Conjugate:
        case ExprKind::CoordProj:
            return true;
        case ExprKind::ScalarConst:
            return e->scalar >= 0;
        default:
            return false;
    }
}

std::string print_factor(const ExprPtr& e);

std::string print_node(const ExprPtr& e) {
    switch (e->kind) {
        case ExprKind::Variable:
            return "x";
        case ExprKind::BasisConst:
            return "e" + std::to_string(e->index);
        case ExprKind::ScalarConst:
            return to_string(e->scalar);
        case ExprKind::Conjugate:
            return "conj(" + print_node(e->child) + ")";
        case ExprKind::CoordProj:
            return "coord(" + print_node(e->child) + ", " + std::to_string(e->index) + ")";
        case ExprKind::Product:
            return print_factor(e->lhs) + "*" + print_factor(e->rhs);
        case ExprKind::Power:
            return print_factor(e->child) + "^" + std::to_string(e->power);
        case ExprKind::Sum: {
            std::string out;
            bool first = true;
            for (const auto& [sign, term] : e->terms) {
                if (first) {
                    if (sign < 0) out += "-";
                    first = false;
                } else {
                    out += sign < 0 ? " - " : " + ";
                }
                // nested sums need explicit grouping to survive reparsing
                if (term->kind == ExprKind::Sum)
                    out += "(" + print_node(term) + ")";
                else
                    out += print_node(term);
            }
            return out;
        }
    }
    return "?";
}

std::string print_factor(const ExprPtr& e) {
    if (is_atomic(e)) return print_node(e);
    if (e->kind == ExprKind::Power) return print_node(e);  // already a factor
    return "(" + print_node(e) + ")";
}

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).run(); }

std::string print(const ExprPtr& e) { return print_node(e); }

ComponentPolynomial lower(const ExprPtr& e, int n) {
    Element<Polynomial> x(AlgebraSpec::canonical(n));
    for (int mu = 0; mu < n; ++mu) x[mu] = Polynomial::variable(n, mu);
    const Element<Polynomial> v = evaluate(e, x);
    ComponentPolynomial out = ComponentPolynomial::zero(n);
    for (int mu = 0; mu < n; ++mu) {
        if (v[mu].total_degree() > kMaxLoweredDegree)
            throw std::invalid_argument("expression expands beyond the supported degree");
        out.comp[static_cast<std::size_t>(mu)] = v[mu];
    }
    return out;
}

std::string component_polynomial_to_json(const ComponentPolynomial& p) {
    nlohmann::ordered_json root;
    root["N"] = p.nvars;
    auto comps = nlohmann::ordered_json::array();
    for (const auto& poly : p.comp) {
        auto terms = nlohmann::ordered_json::array();
        for (const auto& [exps, coef] : poly.terms()) {
            nlohmann::ordered_json t;
            std::vector<int> full = exps;
            full.resize(static_cast<std::size_t>(p.nvars), 0);
            t["exps"] = full;
            t["coef"] = to_string(coef);
            terms.push_back(std::move(t));
        }
        comps.push_back(std::move(terms));
    }
    root["components"] = std::move(comps);
    return root.dump();
}

ComponentPolynomial component_polynomial_from_json(const std::string& text) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("bad componentwise JSON: ") + e.what());
    }
    if (!root.is_object() || !root.contains("N") || !root.contains("components"))
        throw std::invalid_argument("componentwise JSON needs keys N and components");
    const int n = root["N"].get<int>();
    if (n < 1) throw std::invalid_argument("componentwise JSON: N must be positive");
    const auto& comps = root["components"];
    if (!comps.is_array() || static_cast<int>(comps.size()) != n)
        throw std::invalid_argument("componentwise JSON: components must be an array of length N");
    ComponentPolynomial p = ComponentPolynomial::zero(n);
    for (int mu = 0; mu < n; ++mu) {
        Polynomial poly = Polynomial::constant(n, 0);
        for (const auto& term : comps[static_cast<std::size_t>(mu)]) {
            const auto exps = term.at("exps").get<std::vector<int>>();
            if (static_cast<int>(exps.size()) != n)
                throw std::invalid_argument("componentwise JSON: exps must have length N");
            for (int v : exps)
                if (v < 0) throw std::invalid_argument("componentwise JSON: negative exponent");
            const Rational coef = parse_rational(term.at("coef").get<std::string>());
            Polynomial mono = Polynomial::constant(n, coef);
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < exps[static_cast<std::size_t>(i)]; ++k)
                    mono = mono * Polynomial::variable(n, i);
            poly += mono;
        }
        p.comp[static_cast<std::size_t>(mu)] = poly;
    }
    return p;
}

}  // namespace compalg
