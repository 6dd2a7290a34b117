#include "qselberg/qseries.hpp"

#include <cmath>

namespace qselberg {

namespace {
constexpr double kExactZero = 1e-15;
}

QContext::QContext(cplx q_, int order, double tol)
    : q(q_), product_order(order), series_tol(tol) {
    if (std::abs(q) >= 1.0)
        throw std::domain_error("QContext: |q| must be < 1");
    if (order < 1)
        throw std::domain_error("QContext: product_order must be >= 1");
}

cplx qpoch_inf(cplx x, cplx c, const QContext& ctx) {
    if (std::abs(c) >= 1.0)
        throw std::domain_error("qpoch_inf: |c| must be < 1");
    cplx p = 1.0;
    cplx v = x;
    for (int k = 0; k < ctx.product_order; ++k) {
        cplx f = 1.0 - v;
        if (std::abs(f) < kExactZero) return 0.0;
        p *= f;
        v *= c;
        if (std::abs(v) < ctx.series_tol) break;
    }
    return p;
}

cplx qpoch_int(cplx x, cplx c, long nu) {
    cplx p = 1.0;
    if (nu >= 0) {
        cplx v = x;
        for (long k = 0; k < nu; ++k) {
            p *= (1.0 - v);
            v *= c;
        }
    } else {
        cplx v = x;
        for (long k = 1; k <= -nu; ++k) {
            v /= c;
            cplx f = 1.0 - v;
            if (std::abs(f) < kExactZero)
                throw singular_parameter_error("(x;c)_{" + std::to_string(nu) +
                                               "} factor at k=" + std::to_string(k));
            p /= f;
        }
    }
    return p;
}

cplx qpoch_symm(cplx x, cplx c, long r, long s) {
    if (s < 0 || s > r)
        throw std::domain_error("qpoch_symm: need 0 <= s <= r");
    cplx den = qpoch_int(x, c, r - s) * qpoch_int(x, c, s);
    if (std::abs(den) < kExactZero)
        throw singular_parameter_error("_r(x;c)_s denominator");
    return qpoch_int(x, c, r) / den;
}

cplx theta(cplx x, const QContext& ctx) {
    if (std::abs(x) < kExactZero)
        throw std::domain_error("theta: x must be nonzero");
    return qpoch_inf(x, ctx.q, ctx) * qpoch_inf(ctx.q / x, ctx.q, ctx) *
           qpoch_inf(ctx.q, ctx.q, ctx);
}

cplx theta_prod(cplx x, long r, cplx step, const QContext& ctx) {
    if (r < 0) throw std::domain_error("theta_prod: r must be >= 0");
    cplx p = 1.0;
    cplx arg = x;
    for (long k = 0; k < r; ++k) {
        p *= theta(arg, ctx);
        arg *= step;
    }
    return p;
}

cplx theta_symm(cplx x, long r, long s, cplx step, const QContext& ctx) {
    if (s < 0 || s > r)
        throw std::domain_error("theta_symm: need 0 <= s <= r");
    cplx den = theta_prod(x, r - s, step, ctx) * theta_prod(x, s, step, ctx);
    if (std::abs(den) < kExactZero)
        throw singular_parameter_error("_r theta(x)_s denominator");
    return theta_prod(x, r, step, ctx) / den;
}

cplx heine_2phi1(cplx a, cplx b, cplx c, cplx x, const QContext& ctx) {
    if (std::abs(x) >= 1.0)
        throw std::domain_error("heine_2phi1: |x| must be < 1");
    const cplx q = ctx.q;
    cplx sum = 0.0;
    cplx term = 1.0;
    cplx qa = a, qb = b, qc = c, qk = q;
    for (long k = 0; k < 100000; ++k) {
        sum += term;
        cplx den = (1.0 - qc) * (1.0 - qk);
        if (std::abs(den) < kExactZero)
            throw singular_parameter_error("2phi1 denominator (c;q)_nu (q;q)_nu");
        term *= (1.0 - qa) * (1.0 - qb) / den * x;
        qa *= q; qb *= q; qc *= q; qk *= q;
        if (std::abs(term) < ctx.series_tol * std::max(1.0, std::abs(sum)))
            break;
    }
    return sum;
}

} // namespace qselberg
