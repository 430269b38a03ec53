#include "compalg/cr.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "compalg/cayley_dickson.hpp"
#include "compalg/rng.hpp"

namespace compalg {

namespace {

const AlgebraSpec& cr_algebra(int n) {
    if (n != 2 && n != 4 && n != 8)
        throw std::invalid_argument("Cauchy-Riemann operators need dimension 2, 4 or 8");
    return AlgebraSpec::canonical(n);
}

int variant_sign(Variant v) { return v == Variant::analytic ? 1 : -1; }

std::vector<Rational> quaternion_coords(const LinearMap& jac, int row0, int col) {
    std::vector<Rational> q(4);
    for (int i = 0; i < 4; ++i) q[static_cast<std::size_t>(i)] = jac[static_cast<std::size_t>(row0 + i)][static_cast<std::size_t>(col)];
    return q;
}

}  // namespace

SymbolicOperator dirac_matrix(int n, Variant variant) {
    const AlgebraSpec& alg = cr_algebra(n);
    const int s = variant_sign(variant);
    SymbolicOperator op = SymbolicOperator::zero(n);
    for (int sigma = 0; sigma < n; ++sigma) {
        op.at(sigma, sigma) += Polynomial::variable(n, 0);
        for (int i = 1; i < n; ++i)
            for (int nu = 0; nu < n; ++nu) {
                const Rational& c = alg.c(sigma, i, nu);
                if (c != 0) op.at(sigma, nu) += Polynomial::variable(n, i) * (Rational(s) * c);
            }
    }
    return op;
}

bool factorization_check(int n) {
    const auto a = dirac_matrix(n, Variant::analytic);
    const auto b = dirac_matrix(n, Variant::antianalytic);
    const auto want = SymbolicOperator::scalar(n, laplacian_symbol(n));
    return compose(a, b) == want && compose(b, a) == want;
}

bool lemma2_identity_check(int n) {
    const AlgebraSpec& alg = cr_algebra(n);
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu)
            for (int rho = 0; rho < n; ++rho) {
                const Rational lhs = alg.c(nu, rho, mu);
                const Rational rhs =
                    Rational((mu == 0 && nu == rho) ? 2 : 0) - alg.c(rho, nu, mu);
                if (lhs != rhs) return false;
            }
    return true;
}

LinearMap jacobian(const ComponentPolynomial& u, const std::vector<Rational>& x) {
    if (static_cast<int>(x.size()) != u.nvars)
        throw std::invalid_argument("point dimension does not match function");
    const int n = u.dim();
    LinearMap jac(static_cast<std::size_t>(n), RatRow(static_cast<std::size_t>(u.nvars), Rational(0)));
    for (int mu = 0; mu < n; ++mu)
        for (int sigma = 0; sigma < u.nvars; ++sigma)
            jac[static_cast<std::size_t>(mu)][static_cast<std::size_t>(sigma)] =
                u.comp[static_cast<std::size_t>(mu)].derivative(sigma).eval(x);
    return jac;
}

FirstOrderSystem FirstOrderSystem::zero(int n) {
    FirstOrderSystem s;
    s.n = n;
    s.coef.assign(static_cast<std::size_t>(n) * n * n, Rational(0));
    return s;
}

std::vector<Rational> FirstOrderSystem::apply(const LinearMap& jac) const {
    std::vector<Rational> out(static_cast<std::size_t>(n), Rational(0));
    for (int row = 0; row < n; ++row)
        for (int nu = 0; nu < n; ++nu)
            for (int rho = 0; rho < n; ++rho) {
                const Rational& c = at(row, nu, rho);
                if (c != 0)
                    out[static_cast<std::size_t>(row)] +=
                        c * jac[static_cast<std::size_t>(nu)][static_cast<std::size_t>(rho)];
            }
    return out;
}

ComponentPolynomial FirstOrderSystem::apply_sym(const ComponentPolynomial& u) const {
    if (u.dim() != n) throw std::invalid_argument("system and function dimension mismatch");
    ComponentPolynomial out = ComponentPolynomial::zero(n);
    for (int row = 0; row < n; ++row)
        for (int nu = 0; nu < n; ++nu)
            for (int rho = 0; rho < n; ++rho) {
                const Rational& c = at(row, nu, rho);
                if (c != 0)
                    out.comp[static_cast<std::size_t>(row)] +=
                        u.comp[static_cast<std::size_t>(nu)].derivative(rho) * c;
            }
    return out;
}

RatMatrix FirstOrderSystem::rows() const {
    RatMatrix m(static_cast<std::size_t>(n), RatRow(static_cast<std::size_t>(n) * n, Rational(0)));
    for (int row = 0; row < n; ++row)
        for (int nu = 0; nu < n; ++nu)
            for (int rho = 0; rho < n; ++rho)
                m[static_cast<std::size_t>(row)][static_cast<std::size_t>(nu * n + rho)] =
                    at(row, nu, rho);
    return m;
}

FirstOrderSystem dirac_system(int n, Variant variant) {
    const AlgebraSpec& alg = cr_algebra(n);
    const int s = variant_sign(variant);
    FirstOrderSystem sys = FirstOrderSystem::zero(n);
    for (int sigma = 0; sigma < n; ++sigma) {
        sys.at(sigma, sigma, 0) += 1;
        for (int i = 1; i < n; ++i)
            for (int nu = 0; nu < n; ++nu) {
                const Rational& c = alg.c(sigma, i, nu);
                if (c != 0) sys.at(sigma, nu, i) += Rational(s) * c;
            }
    }
    return sys;
}

FirstOrderSystem kappa_system(int n, const Rational& kappa) {
    const AlgebraSpec& alg = cr_algebra(n);
    FirstOrderSystem sys = FirstOrderSystem::zero(n);
    for (int mu = 0; mu < n; ++mu) {
        for (int nu = 0; nu < n; ++nu)
            for (int sigma = 0; sigma < n; ++sigma) {
                const Rational& c = alg.c(sigma, mu, nu);
                if (c != 0) sys.at(mu, nu, sigma) += c;
            }
        sys.at(mu, 0, mu) -= kappa;
    }
    return sys;
}

FirstOrderSystem jadczyk_system(const AlgebraSpec& alg) {
    const int n = alg.dim();
    FirstOrderSystem sys = FirstOrderSystem::zero(n);
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu) {
            for (int sigma = 0; sigma < n; ++sigma) {
                const Rational& c = alg.c(sigma, mu, nu);
                if (c != 0) sys.at(mu, nu, sigma) += c;
            }
            Rational contraction = 0;
            for (int sigma = 0; sigma < n; ++sigma) contraction += alg.c(sigma, nu, sigma);
            sys.at(mu, nu, mu) -= contraction;
        }
    return sys;
}

Element<Rational> residual_real(const ComponentPolynomial& u, const std::vector<Rational>& x,
                                Variant variant) {
    const int n = u.dim();
    const auto r = dirac_system(n, variant).apply(jacobian(u, x));
    return Element<Rational>(cr_algebra(n), r);
}

ComponentPolynomial residual_real_sym(const ComponentPolynomial& u, Variant variant) {
    return dirac_system(u.dim(), variant).apply_sym(u);
}

namespace {

// --- block decompositions -------------------------------------------------
//
// With U = a + bE (quaternion halves) the analytic residual splits as
//   r1 = sum_m h_m (d_m a) - sum_i (d_{4+i} conj(b)) h_i
//   r2 = sum_m (d_m b) h_m + sum_i h_i (d_{4+i} conj(a))
// which follows from expanding sum_mu e_mu d_mu U through the pair product.

using CPair = std::pair<Element<Rational>, Element<Rational>>;

CPair split_quaternion(const std::vector<Rational>& q) {
    const AlgebraSpec& c2 = AlgebraSpec::complexes();
    Element<Rational> a(c2), b(c2);
    a[0] = q[0];
    a[1] = q[1];
    b[0] = q[2];
    b[1] = q[3];
    return {a, b};
}

CPair pair_multiply(const CPair& u, const CPair& v) {
    return cd_multiply(u.first, u.second, v.first, v.second, Rational(-1));
}

CPair pair_conjugate(const CPair& u) { return cd_conjugate(u.first, u.second); }

CPair pair_add(const CPair& u, const CPair& v) {
    return {u.first + v.first, u.second + v.second};
}

CPair pair_negate(const CPair& u) { return {-u.first, -u.second}; }

std::vector<Rational> join_pair(const CPair& u) {
    return {u.first[0], u.first[1], u.second[0], u.second[1]};
}

std::vector<Rational> blocks_from_jacobian_quat(const LinearMap& jac) {
    const AlgebraSpec& hq = AlgebraSpec::quaternions();
    auto as_elem = [&](const std::vector<Rational>& q) { return Element<Rational>(hq, q); };
    Element<Rational> r1(hq), r2(hq);
    for (int m = 0; m < 4; ++m) {
        const auto hm = Element<Rational>::basis(hq, m);
        r1 += multiply(hm, as_elem(quaternion_coords(jac, 0, m)));
        r2 += multiply(as_elem(quaternion_coords(jac, 4, m)), hm);
    }
    for (int i = 0; i < 4; ++i) {
        const auto hi = Element<Rational>::basis(hq, i);
        r1 -= multiply(conjugate(as_elem(quaternion_coords(jac, 4, 4 + i))), hi);
        r2 += multiply(hi, conjugate(as_elem(quaternion_coords(jac, 0, 4 + i))));
    }
    std::vector<Rational> out(8);
    for (int i = 0; i < 4; ++i) {
        out[static_cast<std::size_t>(i)] = r1[i];
        out[static_cast<std::size_t>(i + 4)] = r2[i];
    }
    return out;
}

std::vector<Rational> blocks_from_jacobian_complex8(const LinearMap& jac) {
    // same shape as the quaternionic split, with every quaternion product
    // carried out on complex pairs
    const AlgebraSpec& c2 = AlgebraSpec::complexes();
    auto pair_basis = [&](int m) -> CPair {
        Element<Rational> a(c2), b(c2);
        if (m < 2)
            a[m] = 1;
        else
            b[m - 2] = 1;
        return {a, b};
    };
    CPair r1{Element<Rational>(c2), Element<Rational>(c2)};
    CPair r2 = r1;
    for (int m = 0; m < 4; ++m) {
        const CPair hm = pair_basis(m);
        r1 = pair_add(r1, pair_multiply(hm, split_quaternion(quaternion_coords(jac, 0, m))));
        r2 = pair_add(r2, pair_multiply(split_quaternion(quaternion_coords(jac, 4, m)), hm));
    }
    for (int i = 0; i < 4; ++i) {
        const CPair hi = pair_basis(i);
        r1 = pair_add(r1, pair_negate(pair_multiply(
                              pair_conjugate(split_quaternion(quaternion_coords(jac, 4, 4 + i))), hi)));
        r2 = pair_add(r2, pair_multiply(
                              hi, pair_conjugate(split_quaternion(quaternion_coords(jac, 0, 4 + i)))));
    }
    const auto v1 = join_pair(r1);
    const auto v2 = join_pair(r2);
    std::vector<Rational> out(8);
    for (int i = 0; i < 4; ++i) {
        out[static_cast<std::size_t>(i)] = v1[static_cast<std::size_t>(i)];
        out[static_cast<std::size_t>(i + 4)] = v2[static_cast<std::size_t>(i)];
    }
    return out;
}

std::vector<Rational> blocks_from_jacobian_complex4(const LinearMap& jac) {
    // single doubling level: U = (A, B) over the complexes
    CPair acc{Element<Rational>(AlgebraSpec::complexes()), Element<Rational>(AlgebraSpec::complexes())};
    const AlgebraSpec& c2 = AlgebraSpec::complexes();
    auto pair_basis = [&](int m) -> CPair {
        Element<Rational> a(c2), b(c2);
        if (m < 2)
            a[m] = 1;
        else
            b[m - 2] = 1;
        return {a, b};
    };
    for (int m = 0; m < 4; ++m) {
        Element<Rational> da(c2), db(c2);
        da[0] = jac[0][static_cast<std::size_t>(m)];
        da[1] = jac[1][static_cast<std::size_t>(m)];
        db[0] = jac[2][static_cast<std::size_t>(m)];
        db[1] = jac[3][static_cast<std::size_t>(m)];
        acc = pair_add(acc, pair_multiply(pair_basis(m), {da, db}));
    }
    return join_pair(acc);
}

std::vector<Rational> blocks_from_jacobian(const LinearMap& jac, int n, BlockForm form) {
    if (form == BlockForm::quaternionic) {
        if (n != 8) throw std::invalid_argument("quaternionic block form needs dimension 8");
        return blocks_from_jacobian_quat(jac);
    }
    if (n == 8) return blocks_from_jacobian_complex8(jac);
    if (n == 4) return blocks_from_jacobian_complex4(jac);
    throw std::invalid_argument("complex block form needs dimension 4 or 8");
}

}  // namespace

Element<Rational> residual_blocks(const ComponentPolynomial& u, const std::vector<Rational>& x,
                                  BlockForm form) {
    const int n = u.dim();
    const auto r = blocks_from_jacobian(jacobian(u, x), n, form);
    return Element<Rational>(cr_algebra(n), r);
}

FirstOrderSystem block_system(int n, BlockForm form) {
    FirstOrderSystem sys = FirstOrderSystem::zero(n);
    LinearMap jac(static_cast<std::size_t>(n), RatRow(static_cast<std::size_t>(n), Rational(0)));
    for (int nu = 0; nu < n; ++nu)
        for (int rho = 0; rho < n; ++rho) {
            jac[static_cast<std::size_t>(nu)][static_cast<std::size_t>(rho)] = 1;
            const auto r = blocks_from_jacobian(jac, n, form);
            for (int row = 0; row < n; ++row) sys.at(row, nu, rho) = r[static_cast<std::size_t>(row)];
            jac[static_cast<std::size_t>(nu)][static_cast<std::size_t>(rho)] = 0;
        }
    return sys;
}

RatMatrix block_reshuffle(int n, BlockForm form) {
    const auto real_rows = dirac_system(n, Variant::analytic).rows();
    const auto block_rows = block_system(n, form).rows();
    auto r = solve_left_factor(real_rows, block_rows);
    if (!r || rank(*r) != n)
        throw std::logic_error("block form is not a constant reshuffle of the real form");
    return *r;
}

std::vector<Rational> cross7(const std::vector<Rational>& u, const std::vector<Rational>& v) {
    if (u.size() != v.size() || (u.size() != 3 && u.size() != 7))
        throw std::invalid_argument("vector product needs two vectors of length 3 or 7");
    const int len = static_cast<int>(u.size());
    const AlgebraSpec& alg = AlgebraSpec::canonical(len + 1);
    std::vector<Rational> out(static_cast<std::size_t>(len), Rational(0));
    for (int j = 1; j <= len; ++j)
        for (int k = 1; k <= len; ++k)
            for (int i = 1; i <= len; ++i) {
                const Rational e = alg.epsilon(j, k, i);
                if (e != 0)
                    out[static_cast<std::size_t>(j - 1)] +=
                        e * u[static_cast<std::size_t>(k - 1)] * v[static_cast<std::size_t>(i - 1)];
            }
    return out;
}

FirstOrderSystem vector_form_system(int n) {
    if (n != 4 && n != 8) throw std::invalid_argument("vector form needs dimension 4 or 8");
    const AlgebraSpec& alg = AlgebraSpec::canonical(n);
    FirstOrderSystem sys = FirstOrderSystem::zero(n);
    sys.at(0, 0, 0) = 1;
    for (int i = 1; i < n; ++i) sys.at(0, i, i) = -1;
    for (int j = 1; j < n; ++j) {
        sys.at(j, j, 0) += 1;
        sys.at(j, 0, j) += 1;
        for (int k = 1; k < n; ++k)
            for (int i = 1; i < n; ++i) {
                const Rational e = alg.epsilon(j, k, i);
                if (e != 0) sys.at(j, i, k) += e;
            }
    }
    return sys;
}

std::pair<Rational, std::vector<Rational>> residual_vector_form(const ComponentPolynomial& u,
                                                                const std::vector<Rational>& x) {
    const int n = u.dim();
    const auto r = vector_form_system(n).apply(jacobian(u, x));
    return {r[0], std::vector<Rational>(r.begin() + 1, r.end())};
}

std::pair<Rational, std::vector<Rational>> circle_product(
    const std::pair<Rational, std::vector<Rational>>& a,
    const std::pair<Rational, std::vector<Rational>>& b) {
    if (a.second.size() != b.second.size())
        throw std::invalid_argument("circle product needs equal vector parts");
    Rational scalar = a.first * b.first;
    for (std::size_t i = 0; i < a.second.size(); ++i) scalar -= a.second[i] * b.second[i];
    std::vector<Rational> vec = cross7(a.second, b.second);
    for (std::size_t i = 0; i < vec.size(); ++i)
        vec[i] += a.first * b.second[i] + a.second[i] * b.first;
    return {scalar, vec};
}

std::vector<Rational> residual_kappa(const ComponentPolynomial& u, const std::vector<Rational>& x,
                                     const Rational& kappa) {
    return kappa_system(u.dim(), kappa).apply(jacobian(u, x));
}

ComponentPolynomial residual_kappa_sym(const ComponentPolynomial& u, const Rational& kappa) {
    return kappa_system(u.dim(), kappa).apply_sym(u);
}

std::vector<Rational> residual_jadczyk(const ComponentPolynomial& u,
                                       const std::vector<Rational>& x) {
    return jadczyk_system(cr_algebra(u.dim())).apply(jacobian(u, x));
}

TMapFactors t_map_factors(const Rational& kappa, const Rational& kappa_prime, int n) {
    TMapFactors f;
    f.derived = kappa_prime == 1 ? Rational(0) : Rational((kappa - 1) / (kappa_prime - 1));
    if (kappa * kappa_prime != 1)
        f.printed_lemma = (1 - kappa) / (1 - kappa * kappa_prime);
    f.printed_remark = Rational(n - 1, 2 * n - 1);
    return f;
}

ComponentPolynomial t_map(const ComponentPolynomial& u, const Rational& kappa,
                          const Rational& kappa_prime) {
    if (kappa_prime == 1)
        throw std::invalid_argument("no finite 0-component scaling reaches the kappa' = 1 class");
    if (kappa == 1) return u;
    ComponentPolynomial out = u;
    const Rational m = (kappa - 1) / (kappa_prime - 1);
    out.comp[0] = out.comp[0] * m;
    return out;
}

namespace {

void enum_monomials_rec(int nvars, int var, int remaining, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
    if (var == nvars - 1) {
        cur[static_cast<std::size_t>(var)] = remaining;
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        cur[static_cast<std::size_t>(var)] = e;
        enum_monomials_rec(nvars, var + 1, remaining - e, cur, out);
    }
}

std::vector<std::vector<int>> enum_monomials(int nvars, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(nvars), 0);
    enum_monomials_rec(nvars, 0, degree, cur, out);
    return out;
}

}  // namespace

std::vector<ComponentPolynomial> polynomial_kernel(const FirstOrderSystem& sys, int degree) {
    const int n = sys.n;
    std::vector<ComponentPolynomial> basis;
    for (int d = 0; d <= degree; ++d) {
        const auto monos = enum_monomials(n, d);
        const int ncols = n * static_cast<int>(monos.size());
        if (d == 0) {
            for (int nu = 0; nu < n; ++nu) {
                ComponentPolynomial f = ComponentPolynomial::zero(n);
                f.comp[static_cast<std::size_t>(nu)] = Polynomial::constant(n, 1);
                basis.push_back(std::move(f));
            }
            continue;
        }
        const auto eq_monos = enum_monomials(n, d - 1);
        std::map<std::vector<int>, int> eq_index;
        for (std::size_t i = 0; i < eq_monos.size(); ++i)
            eq_index[eq_monos[i]] = static_cast<int>(i);
        const int nrows = n * static_cast<int>(eq_monos.size());

        RatMatrix a(static_cast<std::size_t>(nrows), RatRow(static_cast<std::size_t>(ncols), Rational(0)));
        for (int nu = 0; nu < n; ++nu)
            for (std::size_t mi = 0; mi < monos.size(); ++mi) {
                const int col = nu * static_cast<int>(monos.size()) + static_cast<int>(mi);
                for (int rho = 0; rho < n; ++rho) {
                    const int exp = monos[mi][static_cast<std::size_t>(rho)];
                    if (exp == 0) continue;
                    std::vector<int> reduced = monos[mi];
                    --reduced[static_cast<std::size_t>(rho)];
                    const int ei = eq_index.at(reduced);
                    for (int row = 0; row < n; ++row) {
                        const Rational& c = sys.at(row, nu, rho);
                        if (c != 0)
                            a[static_cast<std::size_t>(row * static_cast<int>(eq_monos.size()) + ei)]
                             [static_cast<std::size_t>(col)] += c * exp;
                    }
                }
            }

        for (const auto& vec : nullspace_basis(a, ncols)) {
            ComponentPolynomial f = ComponentPolynomial::zero(n);
            for (int nu = 0; nu < n; ++nu) {
                Polynomial p = Polynomial::constant(n, 0);
                for (std::size_t mi = 0; mi < monos.size(); ++mi) {
                    const Rational& coef =
                        vec[static_cast<std::size_t>(nu * static_cast<int>(monos.size()) +
                                                     static_cast<int>(mi))];
                    if (coef == 0) continue;
                    Polynomial mono = Polynomial::constant(n, coef);
                    for (int v = 0; v < n; ++v)
                        for (int k = 0; k < monos[mi][static_cast<std::size_t>(v)]; ++k)
                            mono = mono * Polynomial::variable(n, v);
                    p += mono;
                }
                f.comp[static_cast<std::size_t>(nu)] = std::move(p);
            }
            basis.push_back(std::move(f));
        }
    }
    return basis;
}

std::vector<ComponentPolynomial> solve_kappa_polynomials(int n, const Rational& kappa, int degree) {
    cr_algebra(n);
    if (degree < 0 || degree > 4)
        throw std::invalid_argument("kappa solution search is desk scale: degree must be <= 4");
    return polynomial_kernel(kappa_system(n, kappa), degree);
}

Element<Rational> laplacian_residual(const ComponentPolynomial& u, const std::vector<Rational>& x) {
    const auto lap = laplacian_sym(u);
    std::vector<Rational> vals;
    vals.reserve(lap.comp.size());
    for (const auto& c : lap.comp) vals.push_back(c.eval(x));
    return Element<Rational>(AlgebraSpec::canonical(u.dim()), vals);
}

ComponentPolynomial laplacian_sym(const ComponentPolynomial& u) {
    ComponentPolynomial out = ComponentPolynomial::zero(u.nvars);
    for (int nu = 0; nu < u.dim(); ++nu)
        for (int mu = 0; mu < u.nvars; ++mu)
            out.comp[static_cast<std::size_t>(nu)] +=
                u.comp[static_cast<std::size_t>(nu)].derivative(mu).derivative(mu);
    return out;
}

namespace {

Polynomial widen_polynomial(const Polynomial& p, int new_nvars) {
    Polynomial out = Polynomial::constant(new_nvars, 0);
    for (const auto& [exps, coef] : p.terms()) {
        Polynomial mono = Polynomial::constant(new_nvars, coef);
        for (std::size_t v = 0; v < exps.size(); ++v)
            for (int k = 0; k < exps[v]; ++k)
                mono = mono * Polynomial::variable(new_nvars, static_cast<int>(v));
        out += mono;
    }
    return out;
}

/// Lifts a half-dimension function of the first-half coordinates into the
/// chosen component slot (0 = first half, 1 = second half).
ComponentPolynomial lift_half(const ComponentPolynomial& g, int slot, int n) {
    ComponentPolynomial out = ComponentPolynomial::zero(n);
    const int h = n / 2;
    for (int i = 0; i < h; ++i)
        out.comp[static_cast<std::size_t>(slot * h + i)] =
            widen_polynomial(g.comp[static_cast<std::size_t>(i)], n);
    return out;
}

ComponentPolynomial conj_function(const ComponentPolynomial& g) {
    ComponentPolynomial out = g;
    for (std::size_t i = 1; i < out.comp.size(); ++i) out.comp[i] = -out.comp[i];
    return out;
}

ComponentPolynomial add_functions(const ComponentPolynomial& a, const ComponentPolynomial& b) {
    ComponentPolynomial out = a;
    for (std::size_t i = 0; i < out.comp.size(); ++i) out.comp[i] += b.comp[i];
    return out;
}

ComponentPolynomial scale_function(const ComponentPolynomial& a, const Rational& s) {
    ComponentPolynomial out = a;
    for (auto& c : out.comp) c = c * s;
    return out;
}

}  // namespace

std::vector<PairingProbe> analytic_pairing_probe(int n) {
    if (n != 4 && n != 8) throw std::invalid_argument("family construction needs dimension 4 or 8");
    const int h = n / 2;
    const auto plus = polynomial_kernel(dirac_system(h, Variant::analytic), 2);
    const auto minus = polynomial_kernel(dirac_system(h, Variant::antianalytic), 2);
    std::vector<PairingProbe> probes;
    const auto try_all = [&](const std::string& desc, const std::vector<ComponentPolynomial>& gens,
                             bool conjugated, int slot) {
        bool works = true;
        for (const auto& g : gens) {
            const auto lifted = lift_half(conjugated ? conj_function(g) : g, slot, n);
            if (!residual_real_sym(lifted, Variant::analytic).is_zero()) {
                works = false;
                break;
            }
        }
        probes.push_back({desc, works});
    };
    try_all("first slot, analytic kernel, raw", plus, false, 0);
    try_all("first slot, analytic kernel, conjugated", plus, true, 0);
    try_all("first slot, antianalytic kernel, raw", minus, false, 0);
    try_all("first slot, antianalytic kernel, conjugated", minus, true, 0);
    try_all("second slot, analytic kernel, raw", plus, false, 1);
    try_all("second slot, analytic kernel, conjugated", plus, true, 1);
    try_all("second slot, antianalytic kernel, raw", minus, false, 1);
    try_all("second slot, antianalytic kernel, conjugated", minus, true, 1);
    return probes;
}

AnalyticFamily generate_analytic_family(int n, int count, std::uint64_t seed) {
    if (n != 4 && n != 8) throw std::invalid_argument("family construction needs dimension 4 or 8");
    if (count < 0) throw std::invalid_argument("count must be nonnegative");
    const int h = n / 2;
    const auto plus = polynomial_kernel(dirac_system(h, Variant::analytic), 3);
    const auto minus = polynomial_kernel(dirac_system(h, Variant::antianalytic), 3);

    AnalyticFamily family;
    Rng rng(seed);
    while (static_cast<int>(family.functions.size()) < count) {
        ComponentPolynomial cand = ComponentPolynomial::zero(n);
        for (int pick = 0; pick < 3; ++pick) {
            const auto& g = plus[static_cast<std::size_t>(
                rng.uniform_int(0, static_cast<std::int64_t>(plus.size()) - 1))];
            cand = add_functions(cand, scale_function(lift_half(g, 0, n), rng.small_rational()));
            const auto& k = minus[static_cast<std::size_t>(
                rng.uniform_int(0, static_cast<std::int64_t>(minus.size()) - 1))];
            cand = add_functions(cand,
                                 scale_function(lift_half(conj_function(k), 1, n), rng.small_rational()));
        }
        if (residual_real_sym(cand, Variant::analytic).is_zero())
            family.functions.push_back(std::move(cand));
        else
            ++family.discarded;
    }
    return family;
}

bool trace_commutation_check(const LinearMap& l, const AlgebraSpec& alg) {
    const int n = alg.dim();
    if (static_cast<int>(l.size()) != n)
        throw std::invalid_argument("map size does not match algebra dimension");
    for (const auto& row : l)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("map size does not match algebra dimension");

    auto apply_map = [&](const Element<Rational>& v) {
        Element<Rational> out(alg);
        for (int r = 0; r < n; ++r) {
            Rational acc = 0;
            for (int c = 0; c < n; ++c) acc += l[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * v[c];
            out[r] = acc;
        }
        return out;
    };

    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu) {
            const auto emu = Element<Rational>::basis(alg, mu);
            const auto enu = Element<Rational>::basis(alg, nu);
            const Rational lhs = trace(apply_map(multiply(emu, enu)));
            const Rational rhs = trace(multiply(apply_map(emu), enu));
            if (lhs != rhs) return false;
        }
    return true;
}

LinearMap left_multiplication_map(const Element<Rational>& a) {
    const int n = a.dim();
    LinearMap l(static_cast<std::size_t>(n), RatRow(static_cast<std::size_t>(n), Rational(0)));
    for (int nu = 0; nu < n; ++nu) {
        const auto col = multiply(a, Element<Rational>::basis(a.algebra(), nu));
        for (int sigma = 0; sigma < n; ++sigma)
            l[static_cast<std::size_t>(sigma)][static_cast<std::size_t>(nu)] = col[sigma];
    }
    return l;
}

}  // namespace compalg
