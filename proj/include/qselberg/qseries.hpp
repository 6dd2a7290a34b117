#pragma once

#include <complex>

#include "qselberg/errors.hpp"

namespace qselberg {

using cplx = std::complex<double>;

// Evaluation context for q-series: nome q, cap on infinite-product factors,
// and the tail-stop threshold for adaptive truncation.
struct QContext {
    cplx q;
    int product_order = 256;    // hard cap M on factors of (x;q)_inf
    double series_tol = 1e-16;  // stop once |q^nu x| drops below this

    QContext(cplx q_, int order = 256, double tol = 1e-16);
};

// (x;c)_inf = prod_{nu>=0} (1 - c^nu x), truncated adaptively.
// A factor within 1e-15 of zero short-circuits to exact 0 (structural zeros).
cplx qpoch_inf(cplx x, cplx c, const QContext& ctx);

// (x;c)_nu for any integer nu:
//   nu >= 0: prod_{k=0}^{nu-1} (1 - c^k x)
//   nu <  0: prod_{k=1}^{-nu} (1 - x c^{-k})^{-1}
cplx qpoch_int(cplx x, cplx c, long nu);

// _r(x;c)_s = (x;c)_r / ((x;c)_{r-s} (x;c)_s), 0 <= s <= r.
cplx qpoch_symm(cplx x, cplx c, long r, long s);

// Jacobi theta: theta(x) = (x)_inf (q/x)_inf (q)_inf.
cplx theta(cplx x, const QContext& ctx);

// theta(x)_r = theta(x) theta(x*step) ... theta(x*step^{r-1});
// step is the character q^gamma.
cplx theta_prod(cplx x, long r, cplx step, const QContext& ctx);

// _r theta(x)_s = theta(x)_r / (theta(x)_{r-s} theta(x)_s).
cplx theta_symm(cplx x, long r, long s, cplx step, const QContext& ctx);

// Heine's series  2phi1(a,b;c;x) = sum_nu (a;q)_nu (b;q)_nu /((c;q)_nu (q;q)_nu) x^nu.
cplx heine_2phi1(cplx a, cplx b, cplx c, cplx x, const QContext& ctx);

} // namespace qselberg
