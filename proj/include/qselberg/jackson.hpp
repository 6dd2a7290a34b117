#pragma once

#include <functional>
#include <string>

#include "qselberg/cmatrix.hpp"
#include "qselberg/params.hpp"
#include "qselberg/weights.hpp"

namespace qselberg {
namespace jackson {

struct TruncationConfig {
    int N = 40;              // lattice radius: cone sum over [0, N]^n
    double tail_tol = 1e-9; // |S(N) - S(N-1)| <= tail_tol |S(N)| or flagged
};

struct SumResult {
    cplx value = 0.0;
    bool converged = false;
    double last_shell_rel = 0.0; // |last shell| / |value|
};

struct VerificationReport {
    std::string identity;
    std::string params_digest;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    int N = 0;
    int M = 0;
    uint64_t seed = 0;
    std::string to_json() const;
};

enum class BasisTag { phi, psi_reversed };

struct SolutionMatrix {
    CMatrix entries;
    BasisTag basis = BasisTag::phi;
    CycleKind cycle = CycleKind::xi;
    int N = 0;
    bool converged = false;
    double worst_shell_rel = 0.0;
};

// Truncated Jackson integral of Phi(t) phi_s(t) over the cone of the lattice
// <xi_{F_r^{n-r}}>, evaluated through the regularized integrand
// t^alpha Phi'(t) A{ phi_s_poly D_gamma }. base_power overrides
// alpha_power(p, xi) when branch-coherent continuation across parameter
// shifts is required.
SumResult jackson_xi(const ParamSet& p, int s, int r, const TruncationConfig& tc,
                     std::optional<cplx> base_power = std::nullopt);

// Same engine for an arbitrary polynomial part under A{ . * D_gamma }.
SumResult jackson_xi_poly(const ParamSet& p, int r,
                          const std::function<cplx(const Point&)>& poly,
                          const TruncationConfig& tc,
                          std::optional<cplx> base_power = std::nullopt);

// Solution matrices Y_xi (phi basis) and Y'_xi (reversed psi basis).
SolutionMatrix Y_xi(const ParamSet& p, const TruncationConfig& tc);
SolutionMatrix Y_xi_psi(const ParamSet& p, const TruncationConfig& tc);

// Direct asymptotic coefficient c^+_{A,rs} in the regularized form, as a
// function of characters only (the unit-limit exponential prefactors are
// dropped; ratios and the q->0 trend are unaffected).
cplx c_plus_direct(const ParamSet& p, int r, int s);

// ||Y(x1, q x2) - Y(x1, x2) K|| / ||Y|| over all xi-cycles.
VerificationReport verify_qkz(const ParamSet& p, const TruncationConfig& tc,
                              double tolerance);

// ||Y(q^{alpha~+1}) - Y(q^{alpha~}) A|| / ||Y||.
VerificationReport verify_alpha_shift(const ParamSet& p, const TruncationConfig& tc,
                                      double tolerance);

// Truncated sum of Phi * nabla_chi f over <xi_{F_0}>; residual is scaled by
// the absolute mass sum |Phi f|.
VerificationReport verify_exactness(const ParamSet& p, const std::vector<long>& chi,
                                    const PointFn& f, const TruncationConfig& tc,
                                    double tolerance);

std::string params_digest(const ParamSet& p);

} // namespace jackson
} // namespace qselberg
