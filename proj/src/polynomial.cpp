#include "compalg/polynomial.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace compalg {

Polynomial Polynomial::constant(int nvars, const Rational& value) {
    Polynomial p;
    p.set_arity(nvars);
    if (value != 0) p.terms_[Exps{}] = value;
    return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
    Polynomial p;
    p.set_arity(nvars);
    Exps e(static_cast<std::size_t>(index) + 1, 0);
    e[static_cast<std::size_t>(index)] = 1;
    p.terms_[std::move(e)] = 1;
    return p;
}

void Polynomial::set_arity(int nvars) {
    if (nvars < 0) throw std::invalid_argument("arity must be nonnegative");
    nvars_ = nvars;
}

void Polynomial::adopt_arity(const Polynomial& o) {
    if (o.nvars_ < 0) return;
    if (nvars_ < 0) {
        nvars_ = o.nvars_;
        return;
    }
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("polynomial arity mismatch");
}

bool Polynomial::is_constant() const {
    for (const auto& [e, c] : terms_)
        for (int v : e)
            if (v != 0) return false;
    return true;
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw std::logic_error("polynomial is not constant");
    return terms_.begin()->second;
}

int Polynomial::total_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_)
        deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
    return deg;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    adopt_arity(o);
    for (const auto& [e, c] : o.terms_) {
        Exps key = e;  // keys are already in canonical form
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator-(const Polynomial& a) {
    Polynomial r = a;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.nvars_ = a.nvars_ >= 0 ? a.nvars_ : b.nvars_;
    if (a.nvars_ >= 0 && b.nvars_ >= 0 && a.nvars_ != b.nvars_)
        throw std::invalid_argument("polynomial arity mismatch");
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Polynomial::Exps e(std::max(ea.size(), eb.size()), 0);
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            auto& slot = r.terms_[Polynomial::normalized(std::move(e))];
            slot += ca * cb;
        }
    for (auto it = r.terms_.begin(); it != r.terms_.end();)
        it = it->second == 0 ? r.terms_.erase(it) : std::next(it);
    return r;
}

Polynomial operator*(const Polynomial& a, const Rational& s) {
    Polynomial r;
    r.nvars_ = a.nvars_;
    if (s == 0) return r;
    r.terms_ = a.terms_;
    for (auto& [e, c] : r.terms_) c *= s;
    return r;
}

Polynomial operator/(const Polynomial& a, const Rational& s) {
    if (s == 0) throw std::invalid_argument("division by zero");
    return a * (Rational(1) / s);
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial r;
    r.nvars_ = nvars_;
    for (const auto& [e, c] : terms_) {
        if (static_cast<std::size_t>(var) >= e.size() || e[static_cast<std::size_t>(var)] == 0)
            continue;
        Exps d = e;
        const int k = d[static_cast<std::size_t>(var)]--;
        r.terms_[normalized(std::move(d))] = c * k;
    }
    return r;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

double Polynomial::eval(const std::vector<double>& point) const {
    double acc = 0;
    for (const auto& [e, c] : terms_) {
        double t = to_double(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

std::string Polynomial::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string factors;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += var + std::to_string(i);
            if (e[i] > 1) factors += "^" + std::to_string(e[i]);
        }
        if (factors.empty()) {
            os << to_string(mag);
        } else {
            if (mag != 1) os << to_string(mag) << "*";
            os << factors;
        }
    }
    return os.str();
}

ComponentPolynomial differentiate(const ComponentPolynomial& p, int mu) {
    if (mu < 0 || mu >= p.nvars) throw std::invalid_argument("derivative index out of range");
    ComponentPolynomial r;
    r.nvars = p.nvars;
    r.comp.reserve(p.comp.size());
    for (const auto& c : p.comp) r.comp.push_back(c.derivative(mu));
    return r;
}

}  // namespace compalg
