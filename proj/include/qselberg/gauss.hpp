#pragma once

#include "qselberg/cmatrix.hpp"
#include "qselberg/params.hpp"

namespace qselberg {
namespace gauss {

// Both Gauss decompositions of the R-matrix R_{2,1}(x2/x1).
GaussFactors R21_UDL(const ParamSet& p);
GaussFactors R21_LDU(const ParamSet& p);
CMatrix R21(const ParamSet& p);               // assembled U_R D_R L_R

// R_{1,2}(x1/x2) = J tau R_{2,1} J.
CMatrix R12(const ParamSet& p);

// q-KZ coefficient matrices (m=2).
CMatrix D1(const ParamSet& p);                // diag[q^{(alpha~-(n-1)gamma)(n-s)}]
CMatrix D2(const ParamSet& p);                // J D1 J
CMatrix K_matrix(const ParamSet& p);          // R21(x2/x1) D2  (system for phi-basis under T2)
CMatrix K1(const ParamSet& p);                // R12(x1/x2) D1
CMatrix K2(const ParamSet& p);                // D2 R21(q x2/x1)

// Closed-form determinants.
cplx det_R21(const ParamSet& p);
cplx det_K(const ParamSet& p);
cplx det_A(const ParamSet& p);

// The alpha-shift matrix A(q^alpha~): unipotent UDL factors, and the
// x-separated normalization (A = Ubar Dbar Lbar diag[x1^{n-r} x2^r]).
GaussFactors A_factors(const ParamSet& p);
CMatrix A_matrix(const ParamSet& p);
struct ABarFactors {
    CMatrix Ubar, Dbar, Lbar, Xdiag;
    CMatrix assemble() const { return Ubar * Dbar * Lbar * Xdiag; }
};
ABarFactors A_bar_factors(const ParamSet& p);

} // namespace gauss
} // namespace qselberg
