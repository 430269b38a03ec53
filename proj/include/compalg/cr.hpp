#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "compalg/algebra.hpp"
#include "compalg/linalg.hpp"
#include "compalg/polynomial.hpp"
#include "compalg/symbolic.hpp"

namespace compalg {

/// Which first-order operator: the one annihilating the analytic class
/// (d0 I + sum_i L(e_i) d_i, the d-bar analogue) or the antianalytic one
/// (d0 I - sum_i L(e_i) d_i). L(e_i) is left multiplication by e_i.
enum class Variant { analytic, antianalytic };

/// Linear map on elements, row-major n x n: (Lv)^r = sum_c L[r][c] v^c.
using LinearMap = RatMatrix;

/// The generalized Cauchy-Riemann operator as a symbolic matrix with
/// degree-one entries. n in {2, 4, 8}.
SymbolicOperator dirac_matrix(int n, Variant variant);

/// Symbolically composes the two variants in both orders; true iff both
/// products equal (sum_mu d_mu^2) * identity exactly.
bool factorization_check(int n);

/// Exact tensor identity c^nu_{rho mu} = 2 delta_{mu 0} delta_{nu rho}
/// - c^rho_{nu mu} for all (mu, nu, rho); the derivative-index rearrangement
/// behind the equivalence of the contraction forms.
bool lemma2_identity_check(int n);

/// J[mu][sigma] = partial_sigma U^mu at x, exact on rational points.
LinearMap jacobian(const ComponentPolynomial& u, const std::vector<Rational>& x);

/// A first-order constant-coefficient system: row mu of the residual is
/// sum_{nu,rho} coef[mu][nu][rho] * partial_rho U^nu. Every check form
/// below reduces to one of these, which makes the forms comparable as
/// matrices acting on jacobians.
struct FirstOrderSystem {
    int n = 0;
    std::vector<Rational> coef;  // [(row * n + nu) * n + rho]

    static FirstOrderSystem zero(int n);
    const Rational& at(int row, int nu, int rho) const {
        return coef[static_cast<std::size_t>((row * n + nu) * n + rho)];
    }
    Rational& at(int row, int nu, int rho) {
        return coef[static_cast<std::size_t>((row * n + nu) * n + rho)];
    }

    std::vector<Rational> apply(const LinearMap& jac) const;
    ComponentPolynomial apply_sym(const ComponentPolynomial& u) const;
    /// Rows as functionals on jacobian space (n rows of length n^2,
    /// flattened nu * n + rho).
    RatMatrix rows() const;
};

FirstOrderSystem dirac_system(int n, Variant variant);
FirstOrderSystem kappa_system(int n, const Rational& kappa);

/// Residual of the real (componentwise) form at a point.
Element<Rational> residual_real(const ComponentPolynomial& u, const std::vector<Rational>& x,
                                Variant variant);
/// Residual of the real form as a componentwise polynomial identity.
ComponentPolynomial residual_real_sym(const ComponentPolynomial& u, Variant variant);

/// Block decompositions of the analytic-variant residual. quaternionic:
/// U = a + b E with quaternion halves, all products in dimension n/2.
/// complex_pairs: the same shape pushed one level further, all products in
/// dimension 2 (n = 4 uses a single level). Equals residual_real with the
/// analytic variant up to the constant reshuffle fixed by
/// block_reshuffle(), which turns out to be the identity.
enum class BlockForm { quaternionic, complex_pairs };
Element<Rational> residual_blocks(const ComponentPolynomial& u, const std::vector<Rational>& x,
                                  BlockForm form);
FirstOrderSystem block_system(int n, BlockForm form);
/// The invertible constant matrix R with  block = R * real(analytic),
/// determined by exact symbolic comparison of the two systems.
RatMatrix block_reshuffle(int n, BlockForm form);

/// Antisymmetric bilinear vector product on imaginary parts, lengths 3 or
/// 7: (u x v)_j = sum_{k,i} eps_{jki} u_k v_i (indices 1-based in the
/// algebra, 0-based in the argument vectors).
std::vector<Rational> cross7(const std::vector<Rational>& u, const std::vector<Rational>& v);

/// Scalar/vector pair form of the analytic residual:
///   (d0 U0 - div U, d0 Uvec + grad U0 + nabla x Uvec).
std::pair<Rational, std::vector<Rational>> residual_vector_form(const ComponentPolynomial& u,
                                                                const std::vector<Rational>& x);
FirstOrderSystem vector_form_system(int n);

/// Pair product (a0, av) o (b0, bv) = (a0 b0 - av.bv, a0 bv + av b0 + av x bv);
/// matches the algebra product under the scalar/vector identification.
std::pair<Rational, std::vector<Rational>> circle_product(
    const std::pair<Rational, std::vector<Rational>>& a,
    const std::pair<Rational, std::vector<Rational>>& b);

/// kappa-family residual: C^sigma_{mu nu} partial_sigma U^nu - kappa
/// partial_mu U^0. kappa = n reproduces the trace form; kappa = 2 shares
/// its kernel with the analytic real form.
std::vector<Rational> residual_kappa(const ComponentPolynomial& u, const std::vector<Rational>& x,
                                     const Rational& kappa);
ComponentPolynomial residual_kappa_sym(const ComponentPolynomial& u, const Rational& kappa);

/// The structure-constant contraction form C^sigma_{mu nu} partial_sigma
/// U^nu = C^sigma_{nu sigma} partial_mu U^nu, stated for any unital
/// algebra; for the composition tables the contraction collapses to
/// kappa = n.
std::vector<Rational> residual_jadczyk(const ComponentPolynomial& u,
                                       const std::vector<Rational>& x);
FirstOrderSystem jadczyk_system(const AlgebraSpec& alg);

/// Scaling factors for the 0-component map between kappa classes. The
/// derived factor (kappa-1)/(kappa'-1) is the one that provably maps
/// solutions to solutions; the other two printed candidates are reported
/// for diagnostics only, never substituted.
struct TMapFactors {
    Rational derived;
    std::optional<Rational> printed_lemma;  // (1-kappa)/(1-kappa*kappa'), absent when singular
    Rational printed_remark;                // (n-1)/(2n-1)
};
TMapFactors t_map_factors(const Rational& kappa, const Rational& kappa_prime, int n);

/// Rescales the 0-component by the derived factor, carrying kappa-solutions
/// to kappa'-solutions. kappa' = 1 admits no finite scaling; kappa = 1
/// returns the input unchanged.
ComponentPolynomial t_map(const ComponentPolynomial& u, const Rational& kappa,
                          const Rational& kappa_prime);

/// Exact rational basis of the polynomial solutions of `sys` up to the
/// given total degree, block by homogeneous degree, deterministic order.
std::vector<ComponentPolynomial> polynomial_kernel(const FirstOrderSystem& sys, int degree);

/// Kernel of the kappa system on polynomials of total degree <= degree
/// (degree <= 4, n in {2, 4, 8}).
std::vector<ComponentPolynomial> solve_kappa_polynomials(int n, const Rational& kappa, int degree);

/// sum_mu partial_mu partial_mu U, as a value at x and symbolically.
Element<Rational> laplacian_residual(const ComponentPolynomial& u, const std::vector<Rational>& x);
ComponentPolynomial laplacian_sym(const ComponentPolynomial& u);

/// Functions built by pairing analytic/antianalytic solutions of the
/// half-dimension algebra through the doubling split; every emitted
/// function has symbolically zero analytic residual. Candidates failing
/// that gate are dropped and counted.
struct AnalyticFamily {
    std::vector<ComponentPolynomial> functions;
    int discarded = 0;
};
AnalyticFamily generate_analytic_family(int n, int count, std::uint64_t seed);

/// Slot recipes probed for the family construction; used to record which
/// pairing satisfies the analytic system.
struct PairingProbe {
    std::string description;
    bool works;
};
std::vector<PairingProbe> analytic_pairing_probe(int n);

/// Trace test Tr{L(e_mu e_nu)} = Tr{(L e_mu) e_nu} over all basis pairs
/// (bilinearity collapses the two-variable quantifier).
bool trace_commutation_check(const LinearMap& l, const AlgebraSpec& alg);

/// Left multiplication by a as a matrix: column nu is a * e_nu.
LinearMap left_multiplication_map(const Element<Rational>& a);

}  // namespace compalg
