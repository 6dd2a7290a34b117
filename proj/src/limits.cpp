#include "qselberg/limits.hpp"

#include <cmath>

namespace qselberg {
namespace limits {

namespace {

cplx ipow(cplx z, long e) {
    cplx v = 1.0;
    for (long k = 0; k < std::labs(e); ++k) v = e > 0 ? v * z : v / z;
    return v;
}

cplx half_pow(const LimitParams& lp, long e2) {
    if (e2 % 2 == 0) return ipow(lp.c, e2 / 2);
    return ipow(lp.c_half, e2);
}

cplx qbinom(cplx c, long top, long k1, long k2) {
    return qpoch_int(c, c, top) / (qpoch_int(c, c, k1) * qpoch_int(c, c, k2));
}

} // namespace

CMatrix C_plus_limit(const LimitParams& lp) {
    require_generic(lp);
    const int n = lp.n;
    const cplx c = lp.c, w = lp.w;
    CMatrix M(n + 1);
    for (int r = 0; r <= n; ++r) {
        long x2e = static_cast<long>(r) * (r - 1) + static_cast<long>(n - r) * (n - r - 1);
        cplx diag = half_pow(lp, -x2e) *
                    qpoch_int(w * ipow(c, -(n - r)), c, r) *
                    qpoch_int(w * ipow(c, -(n - r - 1)), c, r) /
                    (qpoch_int(lp.b1, c, n - r) * qpoch_int(w * lp.b1, c, r) *
                     qpoch_int(lp.b2, c, r) * qpoch_int(w * c, c, r));
        for (int s = 0; s <= r; ++s) {
            long k = r - s;
            cplx ratio = ipow(c, -k * static_cast<long>(n - r)) * qbinom(c, n - s, k, n - r) *
                         qpoch_int(lp.b2 * ipow(c, s), c, k) /
                         qpoch_int(w * ipow(c, r + s - n), c, k);
            M(r, s) = diag * ratio;
        }
    }
    return M;
}

CMatrix C_minus_limit(const LimitParams& lp) {
    require_generic(lp);
    const int n = lp.n;
    const cplx c = lp.c, w = lp.w;
    CMatrix M(n + 1);
    for (int r = 0; r <= n; ++r) {
        long x2e = static_cast<long>(r) * (r - 1) + static_cast<long>(n - r) * (n - r - 1);
        cplx diag = cplx(n % 2 ? -1.0 : 1.0) * half_pow(lp, -x2e) *
                    qpoch_int(c, c, n - r) * qpoch_int(c, c, r);
        for (int k = 0; k < n; ++k) diag /= (1.0 - c);
        diag *= qpoch_int(w / lp.b2 * ipow(c, -(r - 1)), c, r) /
                qpoch_int(w * lp.b1 / lp.b2 * ipow(c, -(r - 1)), c, r);
        diag /= qpoch_symm(w * lp.b1 / lp.b2 * ipow(c, -(r - 1)), c, n, r) *
                qpoch_symm(w * lp.b1 / lp.b2 * ipow(c, -r), c, n, r);
        for (int s = r; s <= n; ++s) {
            long k = s - r;
            cplx ratio = ipow(w / lp.b2 * ipow(c, -r), k) *
                         qpoch_int(lp.b1 * ipow(c, n - s), c, k) /
                         qpoch_int(w * lp.b1 / lp.b2 * ipow(c, n - s - r), c, k) *
                         qbinom(c, s, k, r);
            M(r, s) = diag * ratio;
        }
    }
    return M;
}

CMatrix qD_A_plus(const LimitParams& lp, cplx x1, cplx x2) {
    const int n = lp.n;
    std::vector<cplx> d(static_cast<size_t>(n + 1));
    for (int r = 0; r <= n; ++r) {
        long x2e = static_cast<long>(r) * (r - 1) + static_cast<long>(n - r) * (n - r - 1);
        d[static_cast<size_t>(r)] = ipow(x1, n - r) * ipow(x2, r) * half_pow(lp, x2e);
    }
    return CMatrix::diag(d);
}

CMatrix qD_A_minus(const LimitParams& lp, cplx x1, cplx x2) {
    // diag[prod_j eta_j] = diag[x1^{n-r} x2^r b1^{-(n-r)} b2^{-r}
    //                            q^{-[r(r-1)+(n-r)(n-r-1)] gamma/2}]
    const int n = lp.n;
    std::vector<cplx> d(static_cast<size_t>(n + 1));
    for (int r = 0; r <= n; ++r) {
        long x2e = static_cast<long>(r) * (r - 1) + static_cast<long>(n - r) * (n - r - 1);
        d[static_cast<size_t>(r)] = ipow(x1, n - r) * ipow(x2, r) * ipow(lp.b1, -(n - r)) *
                                    ipow(lp.b2, -r) * half_pow(lp, -x2e);
    }
    return CMatrix::diag(d);
}

CMatrix H_zeta_xi_limit(const LimitParams& lp) {
    require_generic(lp);
    const int n = lp.n;
    const cplx c = lp.c, w = lp.w, v = 1.0 / lp.w, a = lp.a, b1 = lp.b1, b2 = lp.b2;
    CMatrix M(n + 1);
    for (int r = 0; r <= n; ++r) {
        const int k = n - r;
        cplx diag = cplx(k % 2 ? -1.0 : 1.0) * qpoch_int(c, c, k) * qpoch_int(b1, c, k) *
                    qpoch_int(v * b2, c, k) / qpoch_int(v, c, k);
        for (int i = 0; i < k; ++i) diag /= (1.0 - c);
        diag *= qpoch_int(v / b1 * ipow(c, -(k - 1)), c, k) *
                qpoch_int(a * b2 * ipow(c, -2 * (k - 1)), c, k) /
                (qpoch_int(v * b2 / b1 * ipow(c, -(k - 1)), c, k) *
                 qpoch_int(a * b2 * b1 * ipow(c, -(k - 1)), c, k));
        diag *= qpoch_symm(v * ipow(c, -(r - 1)), c, n, r) *
                qpoch_symm(v * ipow(c, -r), c, n, r) /
                (qpoch_symm(v * ipow(c, -(k - 1)), c, n, r) *
                 qpoch_symm(v * ipow(c, -k), c, n, r));
        for (int s = r; s <= n; ++s) {
            long m = s - r;
            cplx ratio = ipow(c, -static_cast<long>(r) * m);
            ratio *= qpoch_symm(v * ipow(c, -(n - r - 1)), c, n, r) *
                     qpoch_symm(v * ipow(c, -(n - r)), c, n, r) *
                     qpoch_symm(v * ipow(c, -(s - 1)), c, n, s) /
                     (qpoch_symm(v * ipow(c, -(n - s - 1)), c, n, s) *
                      qpoch_symm(v * ipow(c, -(n - s)), c, n, s) *
                      qpoch_symm(v * ipow(c, -(r - 1)), c, n, r));
            ratio *= qpoch_int(v * ipow(c, -r), c, n - r) / qpoch_int(v * ipow(c, -s), c, n - s);
            ratio *= qpoch_int(b2 * ipow(c, r), c, m) / qpoch_int(v * b2 * ipow(c, n - s), c, m);
            ratio *= qpoch_int(w / (a * b2) * ipow(c, n - 1), c, m) * qpoch_symm(c, c, s, r) /
                     (qpoch_int(ipow(c, 2 * n - r - s - 1) / (a * b2), c, m) *
                      qpoch_int(w * ipow(c, r + s - n), c, m));
            M(r, s) = diag * ratio;
        }
    }
    return M;
}

CMatrix H_delta_xi_limit(const LimitParams& lp) {
    // delta->xi connection block; lower triangular
    require_generic(lp);
    const int n = lp.n;
    const cplx c = lp.c, w = lp.w, a = lp.a, b1 = lp.b1, b2 = lp.b2;
    CMatrix M(n + 1);
    for (int r = 0; r <= n; ++r) {
        cplx diag = cplx(r % 2 ? -1.0 : 1.0) * qpoch_int(b2, c, r) * qpoch_int(w * b1, c, r) *
                    qpoch_int(w / b2 * ipow(c, -(r - 1)), c, r) * qpoch_int(c, c, r) /
                    (qpoch_int(w, c, r) * qpoch_int(w * b1 / b2 * ipow(c, -(r - 1)), c, r));
        for (int i = 0; i < r; ++i) diag /= (1.0 - c);
        diag *= qpoch_int(a * b1 * ipow(c, -2 * (r - 1)), c, r) /
                qpoch_int(a * b1 * b2 * ipow(c, -(r - 1)), c, r);
        diag *= qpoch_symm(w * ipow(c, -(n - r - 1)), c, n, r) *
                qpoch_symm(w * ipow(c, -(n - r)), c, n, r) /
                (qpoch_symm(w / b2 * ipow(c, -(n - 2)), c, n, r) *
                 qpoch_symm(w / b2 * ipow(c, -(n - 1)), c, n, r));
        for (int i = 0; i <= r; ++i) {
            long m = r - i;
            cplx ratio = ipow(c, -static_cast<long>(i) * m);
            ratio *= qpoch_int(w * c, c, i) * qpoch_int(w * ipow(c, -(n - r - 1)), c, r) /
                     (qpoch_int(w * c, c, r) * qpoch_int(w * ipow(c, -(n - i - 1)), c, i));
            ratio *= qpoch_int(w * ipow(c, -(n - r)), c, r) / qpoch_int(w * ipow(c, -(n - i)), c, i);
            ratio *= qpoch_int(w * b1, c, i) / qpoch_int(w * b1, c, r);
            ratio *= qpoch_int(b1, c, n - i) * qpoch_int(c, c, n - i) /
                     (qpoch_int(b1, c, n - r) * qpoch_int(c, c, n - r));
            ratio *= qpoch_int(ipow(c, n - 1) / (a * b1 * w), c, m) /
                     (qpoch_int(ipow(c, r + i - 1) / (a * b1), c, m) *
                      qpoch_int(ipow(c, n - r - i) / w, c, m) * qpoch_int(c, c, m));
            M(r, i) = diag * ratio;
        }
    }
    return M;
}

CMatrix H_delta_eta_limit(const LimitParams& lp) {
    // delta->eta connection block; upper triangular
    require_generic(lp);
    const int n = lp.n;
    const cplx c = lp.c, w = lp.w, a = lp.a, b1 = lp.b1, b2 = lp.b2;
    CMatrix M(n + 1);
    for (int r = 0; r <= n; ++r) {
        cplx diag = cplx((n - r) % 2 ? -1.0 : 1.0) *
                    qpoch_int(a * b1 * ipow(c, -(n + r - 1)), c, n - r) /
                    (qpoch_int(c, c, n - r) * qpoch_int(a * ipow(c, -2 * (n - 1)), c, n - r) *
                     qpoch_int(b1, c, n - r));
        for (int i = 0; i < n - r; ++i) diag *= (1.0 - c);
        diag *= qpoch_symm(w * b1 / b2 * ipow(c, -(r - 1)), c, n, r) *
                qpoch_symm(w * b1 / b2 * ipow(c, -r), c, n, r) /
                (qpoch_symm(w / b2 * ipow(c, -(n - 2)), c, n, r) *
                 qpoch_symm(w / b2 * ipow(c, -(n - 1)), c, n, r));
        for (int i = r; i <= n; ++i) {
            long m = i - r;
            cplx ratio = ipow(c, m * static_cast<long>(i + r - n));
            ratio *= qpoch_symm(w * b1 / b2 * ipow(c, -(i - 1)), c, n, i) *
                     qpoch_symm(w * b1 / b2 * ipow(c, -i), c, n, i) /
                     (qpoch_symm(w * b1 / b2 * ipow(c, -(r - 1)), c, n, r) *
                      qpoch_symm(w * b1 / b2 * ipow(c, -r), c, n, r));
            ratio *= ipow(a * ipow(c, -(n + r - 1)), m);
            ratio *= qpoch_int(w / (a * b2) * ipow(c, n + r - i), c, m) /
                     qpoch_int(w / b2 * ipow(c, -(i - 1)), c, m);
            ratio *= qpoch_int(w * b1 / b2 * ipow(c, -(i - 1)), c, m) /
                     qpoch_int(w * b1 / b2 * ipow(c, n - 2 * i + 1), c, m);
            ratio *= qpoch_int(b1 * ipow(c, n - i), c, m) /
                     qpoch_int(a * b1 * ipow(c, -(i + r - 1)), c, m);
            ratio *= qbinom(c, n - r, m, n - i);
            M(r, i) = diag * ratio;
        }
    }
    return M;
}

cplx a_coef_limit(cplx x, int r, const LimitParams& lp) {
    const int n = lp.n;
    return ipow(lp.c, -static_cast<long>(r) * (n - r)) *
           qpoch_symm(x * ipow(lp.c, -(r - 1)), lp.c, n, r) *
           qpoch_symm(x * ipow(lp.c, -r), lp.c, n, r);
}

cplx a_coef(cplx x, int r, const ParamSet& p) {
    // theta-product core of a_{r,n-r}(x); the exponential prefactors
    // x^{2r(n-r)gamma} q^{r(n-r)(n-2r)gamma^2} tend to 1 in the limit regime
    // and are omitted (general-q quasi-symmetry is out of numeric scope).
    const int n = p.n;
    const QContext ctx = p.ctx();
    cplx ipc = ipow(p.c, -static_cast<long>(r) * (n - r));
    cplx arg1 = x * ipow(p.c, -(r - 1));
    cplx arg2 = x * ipow(p.c, -r);
    return ipc * theta_symm(arg1, n, r, p.c, ctx) * theta_symm(arg2, n, r, p.c, ctx);
}

CMatrix S_prime_limit(cplx x, const LimitParams& lp) {
    const int n = lp.n;
    CMatrix M(n + 1);
    for (int r = 0; r <= n; ++r) {
        // argument x q^{-beta2-(s-1)gamma} at s = n-r
        cplx arg = x / lp.b2 * ipow(lp.c, -(n - r - 1));
        M(r, n - r) = a_coef_limit(arg, r, lp);
    }
    return M;
}

CMatrix H_zeta_eta_limit(const LimitParams& lp) {
    // zeta->eta block through the tau symmetry: h^{+-}_{rs} equals the
    // tau-swapped delta->eta entry times a quotient of a-coefficient limits.
    // Lower triangular.
    require_generic(lp);
    const int n = lp.n;
    LimitParams tp = lp.tau();
    CMatrix Hdh_t = H_delta_eta_limit(tp);
    CMatrix M(n + 1);
    for (int r = 0; r <= n; ++r) {
        for (int s = 0; s <= r; ++s) {
            cplx num = a_coef_limit((1.0 / lp.w) / lp.b1 * ipow(lp.c, -(n - r - 1)), r, lp);
            cplx den = a_coef_limit((1.0 / lp.w) * lp.b2 / lp.b1, n - s, lp);
            M(r, s) = Hdh_t(n - r, n - s) * num / den;
        }
    }
    return M;
}

HLimits H_limits(const LimitParams& lp) {
    return HLimits{H_zeta_xi_limit(lp), H_zeta_eta_limit(lp), H_delta_xi_limit(lp),
                   H_delta_eta_limit(lp)};
}

CMatrix assemble_A(const LimitParams& lp, cplx x1, cplx x2) {
    if (std::abs(x2 / x1 - lp.w) > 1e-12 * std::abs(lp.w))
        throw std::domain_error("assemble_A: x2/x1 must equal lp.w");
    CMatrix Cm = C_minus_limit(lp);
    CMatrix Hdh = H_delta_eta_limit(lp);
    CMatrix Hdx = H_delta_xi_limit(lp);
    CMatrix Cp = C_plus_limit(lp);
    return Cm.inverse() * Hdh.inverse() * Hdx * qD_A_plus(lp, x1, x2) * Cp;
}

cplx g_factor(const LimitParams& lp, int r, Side side) {
    const int n = lp.n;
    cplx base = side == Side::plus ? lp.w * ipow(lp.c, -(n - r - 1))
                                   : lp.w * lp.b1 / lp.b2 * ipow(lp.c, -(r - 1));
    cplx base2 = base / lp.c;
    return ipow(lp.c, -static_cast<long>(r) * (n - r)) *
           qpoch_symm(base, lp.c, n, r) * qpoch_symm(base2, lp.c, n, r);
}

CMatrix R_from_C(const LimitParams& lp, Side side) {
    const int n = lp.n;
    LimitParams tp = lp.tau();
    CMatrix C = side == Side::plus ? C_plus_limit(lp) : C_minus_limit(lp);
    CMatrix Ct = side == Side::plus ? C_plus_limit(tp) : C_minus_limit(tp);
    std::vector<cplx> g(static_cast<size_t>(n + 1));
    for (int i = 0; i <= n; ++i) g[static_cast<size_t>(i)] = g_factor(tp, n - i, side);
    return C.inverse() * CMatrix::diag(g) * jconj(Ct);
}

CMatrix qD_K_plus(const LimitParams& lp) {
    const int n = lp.n;
    std::vector<cplx> d(static_cast<size_t>(n + 1));
    for (int r = 0; r <= n; ++r)
        d[static_cast<size_t>(r)] = ipow(lp.a, r) * ipow(lp.b2, r - n) *
                                    ipow(lp.c, -static_cast<long>(r) * (2 * n - r - 1));
    return CMatrix::diag(d);
}

CMatrix qD_K_minus(const LimitParams& lp) {
    const int n = lp.n;
    std::vector<cplx> d(static_cast<size_t>(n + 1));
    for (int r = 0; r <= n; ++r)
        d[static_cast<size_t>(r)] = ipow(lp.a * lp.b1, r) *
                                    ipow(lp.c, -static_cast<long>(r) * (r - 1));
    return CMatrix::diag(d);
}

CKV C_K_and_V_limits(const LimitParams& lp) {
    require_generic(lp);
    const int n = lp.n;
    const cplx c = lp.c, x = lp.w, a = lp.a, b1 = lp.b1, b2 = lp.b2;
    CMatrix CKp(n + 1), CKm(n + 1);
    std::vector<cplx> vp(static_cast<size_t>(n + 1)), vm(static_cast<size_t>(n + 1));
    for (int r = 0; r <= n; ++r) {
        long x2e = static_cast<long>(r) * (r - 1) + static_cast<long>(n - r) * (n - r - 1);
        cplx diag = cplx((n - r) % 2 ? -1.0 : 1.0) * ipow(b2, n - r) * half_pow(lp, -x2e) *
                    qpoch_int(c, c, n - r) * qpoch_int(a * b2 * ipow(c, -(2 * n - r - 1)), c, r) /
                    (qpoch_int(b2, c, r) * qpoch_int(a * ipow(c, -2 * (n - 1)), c, r));
        for (int i = 0; i < n - r; ++i) diag /= (1.0 - c);
        for (int s = 0; s <= r; ++s) {
            long k = r - s;
            cplx ratio = ipow(c, static_cast<long>(n - r) * (s - r)) * qbinom(c, n - s, k, n - r) *
                         qpoch_int(b2 * ipow(c, s), c, k) /
                         qpoch_int(a * b2 * ipow(c, -(2 * n - r - s - 1)), c, k);
            CKp(r, s) = diag * ratio;
        }
    }
    for (int r = 0; r <= n; ++r) {
        cplx diag = cplx((r * (n - r + 1)) % 2 ? -1.0 : 1.0) *
                    half_pow(lp, -static_cast<long>(n) * (n - 1)) * qpoch_int(c, c, r) *
                    qpoch_int(a * b1 * ipow(c, -(n + r - 1)), c, n - r) /
                    (qpoch_int(b1, c, n - r) * qpoch_int(a * ipow(c, -2 * (n - 1)), c, n - r));
        for (int i = 0; i < r; ++i) diag /= (1.0 - c);
        for (int s = r; s <= n; ++s) {
            long k = s - r;
            cplx ratio = ipow(a * ipow(c, -(n - 1)), k) * ipow(c, static_cast<long>(r) * (r - s)) *
                         qbinom(c, s, k, r) * qpoch_int(b1 * ipow(c, n - s), c, k) /
                         qpoch_int(a * b1 * ipow(c, -(r + s - 1)), c, k);
            CKm(r, s) = diag * ratio;
        }
    }
    for (int r = 0; r <= n; ++r) {
        vp[static_cast<size_t>(r)] = ipow(b2, -(n - r)) * qpoch_int(x * b1, c, n - r) /
                                     qpoch_int(x * b1 / b2, c, n - r);
        // (v*_r)_0 with the beta1 restored in the denominator pair
        cplx v = cplx((r * (n - r)) % 2 ? -1.0 : 1.0) *
                 ipow(c, static_cast<long>(r) * (n - r)) *
                 qpoch_int(x / b2 * ipow(c, -(r - 1)), c, r) /
                 qpoch_int(x * b1 / b2 * ipow(c, -(r - 1)), c, r);
        v /= qpoch_symm(x / b2 * ipow(c, -(n - 2)), c, n, r) *
             qpoch_symm(x / b2 * ipow(c, -(n - 1)), c, n, r);
        vm[static_cast<size_t>(r)] = v;
    }
    return CKV{CKp, CKm, CMatrix::diag(vp), CMatrix::diag(vm)};
}

CMatrix assemble_K(const LimitParams& lp) {
    CKV ckv = C_K_and_V_limits(lp);
    CMatrix Hdh = H_delta_eta_limit(lp);
    CMatrix Hze = H_zeta_eta_limit(lp);
    return ckv.C_K_minus.inverse() * ckv.V_minus.inverse() * Hdh * Hze.inverse() *
           ckv.V_plus * qD_K_plus(lp) * ckv.C_K_plus;
}

void check_non_resonance(const LimitParams& lp, cplx x1, cplx x2, cplx q, int depth,
                         double eps) {
    CMatrix Dp = qD_A_plus(lp, x1, x2);
    CMatrix Dm = qD_A_minus(lp, x1, x2);
    for (const CMatrix* D : {&Dp, &Dm}) {
        for (int i = 0; i <= lp.n; ++i)
            for (int j = 0; j <= lp.n; ++j) {
                if (i == j) continue;
                cplx ratio = (*D)(i, i) / (*D)(j, j);
                cplx qm = 1.0;
                for (int m = 1; m <= depth; ++m) {
                    qm *= q;
                    if (std::abs(ratio - qm) < eps || std::abs(ratio - 1.0 / qm) < eps)
                        throw singular_parameter_error(
                            "non-resonance: q^{mu_i - mu_j} = q^{+-" + std::to_string(m) + "}");
                }
            }
    }
}

} // namespace limits
} // namespace qselberg
