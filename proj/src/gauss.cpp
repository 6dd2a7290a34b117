#include "qselberg/gauss.hpp"

#include <cmath>

namespace qselberg {
namespace gauss {

namespace {

// integer power with negative support
cplx ipow(cplx z, long e) {
    cplx v = 1.0;
    for (long k = 0; k < std::labs(e); ++k) v = e > 0 ? v * z : v / z;
    return v;
}

// c^{e2/2}: every printed half-gamma exponent has even numerator, but the
// stored square-root character covers the general case.
cplx half_gamma_pow(const ParamSet& p, long e2) {
    if (e2 % 2 == 0) return ipow(p.c, e2 / 2);
    return ipow(p.c_half, e2);
}

cplx qbinom(cplx c, long top, long k1, long k2) {
    // (c;c)_top / ((c;c)_k1 (c;c)_k2)
    return qpoch_int(c, c, top) / (qpoch_int(c, c, k1) * qpoch_int(c, c, k2));
}

void require_nonzero(cplx v, const char* name) {
    if (std::abs(v) < 1e-13) throw singular_parameter_error(name);
}

} // namespace

GaussFactors R21_UDL(const ParamSet& p) {
    require_generic(p);
    const int n = p.n;
    const cplx c = p.c, w = p.w();
    CMatrix U(n + 1), D(n + 1), L(n + 1);
    for (int r = 0; r <= n; ++r) {
        for (int s = r; s <= n; ++s) {
            long k = s - r;
            cplx den = qpoch_int(w * p.b1 / p.b2 * ipow(c, n - 2 * s + 1), c, k);
            require_nonzero(den, "(w q^{beta1-beta2+(n-2s+1)gamma}; q^gamma)_{s-r}");
            U(r, s) = cplx(k % 2 ? -1.0 : 1.0) * ipow(w / p.b2, k) *
                      half_gamma_pow(p, -k * (s + r - 1)) * qbinom(c, s, k, r) *
                      qpoch_int(p.b1 * ipow(c, n - s), c, k) / den;
        }
    }
    for (int r = 0; r <= n; ++r) {
        cplx den1 = qpoch_int(w / p.b2 * ipow(c, -(r - 1)), c, r);
        cplx den2 = qpoch_int(w * p.b1 / p.b2 * ipow(c, -r), c, n - r);
        require_nonzero(den1, "(w q^{-beta2-(r-1)gamma}; q^gamma)_r");
        require_nonzero(den2, "(w q^{beta1-beta2-r gamma}; q^gamma)_{n-r}");
        D(r, r) = ipow(p.b2, -(n - r)) * ipow(c, -static_cast<long>(r) * (n - r)) *
                  qpoch_int(w * p.b1, c, n - r) / den1 *
                  qpoch_int(w * p.b1 / p.b2 * ipow(c, n - 2 * r + 1), c, r) / den2;
    }
    for (int r = 0; r <= n; ++r) {
        for (int s = 0; s <= r; ++s) {
            long k = r - s;
            cplx den = qpoch_int(w * p.b1 / p.b2 * ipow(c, n - 2 * r + 1), c, k);
            require_nonzero(den, "(w q^{beta1-beta2+(n-2r+1)gamma}; q^gamma)_{r-s}");
            L(r, s) = cplx(k % 2 ? -1.0 : 1.0) * ipow(p.b2, s - r) *
                      half_gamma_pow(p, -k * (r + s - 1)) * qbinom(c, n - s, k, n - r) *
                      qpoch_int(p.b2 * ipow(c, s), c, k) / den;
        }
    }
    U.set_shape(Shape::upper_unipotent);
    D.set_shape(Shape::diagonal);
    L.set_shape(Shape::lower_unipotent);
    return GaussFactors{U, D, L, GaussFactors::Order::UDL};
}

GaussFactors R21_LDU(const ParamSet& p) {
    require_generic(p);
    const int n = p.n;
    const cplx c = p.c, w = p.w();
    CMatrix Lp(n + 1), Dp(n + 1), Up(n + 1);
    for (int r = 0; r <= n; ++r) {
        for (int s = 0; s <= r; ++s) {
            long k = r - s;
            cplx den = qpoch_int(w * ipow(c, -(n - 2 * s - 1)), c, k);
            require_nonzero(den, "(w q^{-(n-2s-1)gamma}; q^gamma)_{r-s}");
            Lp(r, s) = cplx(k % 2 ? -1.0 : 1.0) *
                       half_gamma_pow(p, -k * (2 * n - r - s - 1)) *
                       qbinom(c, n - s, k, n - r) * qpoch_int(p.b2 * ipow(c, s), c, k) / den;
        }
    }
    for (int r = 0; r <= n; ++r) {
        cplx den1 = qpoch_int(w / p.b2 * ipow(c, -(n - r - 1)), c, n - r);
        cplx den2 = qpoch_int(w * ipow(c, -(n - r)), c, r);
        require_nonzero(den1, "(w q^{-beta2-(n-r-1)gamma}; q^gamma)_{n-r}");
        require_nonzero(den2, "(w q^{-(n-r)gamma}; q^gamma)_r");
        Dp(r, r) = ipow(p.b2 * ipow(c, r), -(n - r)) * qpoch_int(w * p.b1, c, r) / den1 *
                   qpoch_int(w * ipow(c, -(n - 2 * r - 1)), c, n - r) / den2;
    }
    for (int r = 0; r <= n; ++r) {
        for (int s = r; s <= n; ++s) {
            long k = s - r;
            cplx den = qpoch_int(ipow(c, n - r - s) / w, c, k);
            require_nonzero(den, "((x1/x2) q^{(n-r-s)gamma}; q^gamma)_{s-r}");
            Up(r, s) = ipow(c, -k * static_cast<long>(r)) * qbinom(c, s, k, r) *
                       qpoch_int(p.b1 * ipow(c, n - s), c, k) / den;
        }
    }
    Lp.set_shape(Shape::lower_unipotent);
    Dp.set_shape(Shape::diagonal);
    Up.set_shape(Shape::upper_unipotent);
    return GaussFactors{Lp, Dp, Up, GaussFactors::Order::LDU};
}

CMatrix R21(const ParamSet& p) { return R21_UDL(p).assemble(); }

CMatrix R12(const ParamSet& p) { return jconj(R21(p.tau())); }

CMatrix D1(const ParamSet& p) {
    const int n = p.n;
    cplx base = p.a * ipow(p.c, -(n - 1));  // q^{alpha~ - (n-1)gamma}
    std::vector<cplx> d(static_cast<size_t>(n + 1));
    for (int s = 0; s <= n; ++s) d[static_cast<size_t>(s)] = ipow(base, n - s);
    return CMatrix::diag(d);
}

CMatrix D2(const ParamSet& p) { return jconj(D1(p)); }

CMatrix K_matrix(const ParamSet& p) { return R21(p) * D2(p); }

CMatrix K1(const ParamSet& p) { return R12(p) * D1(p); }

CMatrix K2(const ParamSet& p) { return D2(p) * R21(p.shift_x2()); }

cplx det_R21(const ParamSet& p) {
    const int n = p.n;
    const cplx c = p.c, w = p.w();
    cplx v = 1.0;
    for (int r = 0; r <= n; ++r) {
        cplx den = qpoch_int(w / p.b2 * ipow(c, -(r - 1)), c, r);
        require_nonzero(den, "det R: (w q^{-beta2-(r-1)gamma}; q^gamma)_r");
        v *= ipow(p.b2, -(n - r)) * ipow(c, -static_cast<long>(r) * (n - r)) *
             qpoch_int(w * p.b1, c, r) / den;
    }
    return v;
}

cplx det_K(const ParamSet& p) {
    long e = static_cast<long>(p.n) * (p.n + 1) / 2;
    return ipow(p.a * ipow(p.c, -(p.n - 1)), e) * det_R21(p);
}

cplx det_A(const ParamSet& p) {
    const int n = p.n;
    const cplx c = p.c;
    cplx v = ipow(p.x1 * p.x2, static_cast<long>(n) * (n + 1) / 2) *
             ipow(c, static_cast<long>(n - 1) * n * (n + 1) / 3);
    for (int r = 0; r <= n; ++r) {
        cplx den = qpoch_int(p.a * p.b1 * p.b2 * ipow(c, -(r - 1)), c, r);
        require_nonzero(den, "det A: (q^{alpha~+beta1+beta2-(r-1)gamma}; q^gamma)_r");
        v *= qpoch_int(p.a * ipow(c, -2 * (n - 1)), c, r) / den;
    }
    return v;
}

GaussFactors A_factors(const ParamSet& p) {
    require_generic(p);
    const int n = p.n;
    const cplx c = p.c;
    const cplx y = p.a * ipow(c, -(n - 1));  // q^{alpha~ - (n-1)gamma}
    CMatrix U(n + 1), D(n + 1), L(n + 1);
    for (int r = 0; r <= n; ++r) {
        for (int s = r; s <= n; ++s) {
            long k = s - r;
            cplx den = qpoch_int(p.a * p.b1 * ipow(c, -2 * (s - 1)), c, k);
            require_nonzero(den, "(q^{alpha~+beta1-2(s-1)gamma}; q^gamma)_{s-r}");
            U(r, s) = cplx(k % 2 ? -1.0 : 1.0) * ipow(y, k) *
                      half_gamma_pow(p, -k * (s + r - 1)) * qbinom(c, s, k, r) *
                      qpoch_int(p.b1 * ipow(c, n - s), c, k) / den;
        }
    }
    for (int r = 0; r <= n; ++r) {
        long x2e = static_cast<long>(r) * (r - 1) + static_cast<long>(n - r) * (n - r - 1);
        cplx mu = ipow(p.x1, n - r) * ipow(p.x2, r) * half_gamma_pow(p, x2e);
        cplx den1 = qpoch_int(p.a * p.b1 * p.b2 * ipow(c, -(r - 1)), c, r);
        cplx den2 = qpoch_int(p.a * p.b1 * ipow(c, -(n - 1 + r)), c, n - r);
        require_nonzero(den1, "(q^{alpha~+beta1+beta2-(r-1)gamma}; q^gamma)_r");
        require_nonzero(den2, "(q^{alpha~+beta1-(n-1+r)gamma}; q^gamma)_{n-r}");
        D(r, r) = mu * qpoch_int(p.a * p.b1 * ipow(c, -2 * (r - 1)), c, r) *
                  qpoch_int(p.a * ipow(c, -2 * (n - 1)), c, n - r) / (den1 * den2);
    }
    for (int r = 0; r <= n; ++r) {
        for (int s = 0; s <= r; ++s) {
            long k = r - s;
            cplx den = qpoch_int(p.a * p.b1 * ipow(c, -2 * (r - 1)), c, k);
            require_nonzero(den, "(q^{alpha~+beta1-2(r-1)gamma}; q^gamma)_{r-s}");
            L(r, s) = cplx(k % 2 ? -1.0 : 1.0) * ipow(p.w(), -k) *
                      half_gamma_pow(p, -k * (r + s - 1)) * qbinom(c, n - s, k, n - r) *
                      qpoch_int(p.b2 * ipow(c, s), c, k) / den;
        }
    }
    U.set_shape(Shape::upper_unipotent);
    D.set_shape(Shape::diagonal);
    L.set_shape(Shape::lower_unipotent);
    return GaussFactors{U, D, L, GaussFactors::Order::UDL};
}

CMatrix A_matrix(const ParamSet& p) { return A_factors(p).assemble(); }

ABarFactors A_bar_factors(const ParamSet& p) {
    GaussFactors f = A_factors(p);
    const int n = p.n;
    // Dbar strips the x-part of the diagonal; Lbar strips the (x2/x1)^{s-r} of L.
    CMatrix Dbar(n + 1), Lbar = CMatrix::identity(n + 1), Xdiag(n + 1);
    for (int r = 0; r <= n; ++r) {
        cplx xr = ipow(p.x1, n - r) * ipow(p.x2, r);
        Xdiag(r, r) = xr;
        Dbar(r, r) = f.middle(r, r) / xr;
        for (int s = 0; s < r; ++s) Lbar(r, s) = f.right(r, s) * ipow(p.w(), r - s);
    }
    Dbar.set_shape(Shape::diagonal);
    Lbar.set_shape(Shape::lower_unipotent);
    Xdiag.set_shape(Shape::diagonal);
    return ABarFactors{f.left, Dbar, Lbar, Xdiag};
}

} // namespace gauss
} // namespace qselberg
