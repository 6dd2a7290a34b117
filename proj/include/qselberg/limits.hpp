#pragma once

#include "qselberg/cmatrix.hpp"
#include "qselberg/params.hpp"

namespace qselberg {
namespace limits {

// Coefficient matrices of the alpha-shift system's asymptotics (q -> 0 data).
CMatrix C_plus_limit(const LimitParams& lp);    // lower triangular
CMatrix C_minus_limit(const LimitParams& lp);   // upper triangular

// diag[x1^{n-r} x2^r q^{[r(r-1)+(n-r)(n-r-1)]gamma/2}] and the eta-side diagonal.
CMatrix qD_A_plus(const LimitParams& lp, cplx x1, cplx x2);
CMatrix qD_A_minus(const LimitParams& lp, cplx x1, cplx x2);

// Connection-matrix factor limits. Shapes: zeta_xi upper, zeta_eta lower,
// delta_xi lower, delta_eta upper.
struct HLimits {
    CMatrix zeta_xi, zeta_eta, delta_xi, delta_eta;
};
HLimits H_limits(const LimitParams& lp);
CMatrix H_zeta_xi_limit(const LimitParams& lp);
CMatrix H_zeta_eta_limit(const LimitParams& lp);
CMatrix H_delta_xi_limit(const LimitParams& lp);
CMatrix H_delta_eta_limit(const LimitParams& lp);

// The tau-symmetry coefficient a_{r,n-r}(x): theta-product core at finite q,
// and its q->0 limit in Pochhammer form.
cplx a_coef(cplx x, int r, const ParamSet& p);
cplx a_coef_limit(cplx x, int r, const LimitParams& lp);
// anti-diagonal S'(x) with entries a_{r,n-r}(x q^{-beta2-(n-r-1)gamma}) at (r, n-r)
CMatrix S_prime_limit(cplx x, const LimitParams& lp);

// Reconstructions.
CMatrix assemble_A(const LimitParams& lp, cplx x1, cplx x2);
enum class Side { plus, minus };
CMatrix R_from_C(const LimitParams& lp, Side side);
cplx g_factor(const LimitParams& lp, int r, Side side);

// x->0 / x->infinity data of the q-KZ system at x1 = 1, x2 = x.
struct CKV {
    CMatrix C_K_plus;    // lower triangular
    CMatrix C_K_minus;   // upper triangular
    CMatrix V_plus;      // diag, x-dependent
    CMatrix V_minus;     // diag, x-dependent
};
CKV C_K_and_V_limits(const LimitParams& lp);   // lp.w plays the role of x
CMatrix qD_K_plus(const LimitParams& lp);
CMatrix qD_K_minus(const LimitParams& lp);
CMatrix assemble_K(const LimitParams& lp);     // equals K(1, x) with x = lp.w

// Non-resonance: q^{mu_i - mu_j} stays away from {q^{+-1},...,q^{+-depth}} and from 1.
void check_non_resonance(const LimitParams& lp, cplx x1, cplx x2, cplx q, int depth,
                         double eps = 1e-6);

} // namespace limits
} // namespace qselberg
