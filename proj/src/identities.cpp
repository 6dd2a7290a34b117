#include "qselberg/identities.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace qselberg {
namespace identities {

namespace {

cplx ipow(cplx z, long e) {
    cplx v = 1.0;
    for (long k = 0; k < std::labs(e); ++k) v = e > 0 ? v * z : v / z;
    return v;
}

cplx cpow_half(cplx c, cplx c_half, long e2) {
    if (e2 % 2 == 0) return ipow(c, e2 / 2);
    return ipow(c_half, e2);
}

cplx qbinom(cplx c, long top, long k1, long k2) {
    return qpoch_int(c, c, top) / (qpoch_int(c, c, k1) * qpoch_int(c, c, k2));
}

double rel_residual(cplx computed, cplx expected) {
    return std::abs(computed - expected) / std::max(1.0, std::abs(expected));
}

} // namespace

std::string IdentityCheck::to_json() const {
    nlohmann::json j{{"identity", name},
                     {"computed", {computed.real(), computed.imag()}},
                     {"expected", {expected.real(), expected.imag()}},
                     {"residual", residual},
                     {"scale", scale},
                     {"seed", seed}};
    return j.dump();
}

cplx qbinom_unit_sum(cplx z, cplx y, cplx c, int k) {
    cplx sum = 0.0;
    for (int j = 0; j <= k; ++j) {
        long e = 3L * j * (j - 1) / 2;
        cplx t = cplx(j % 2 ? -1.0 : 1.0) * ipow(z, j) * ipow(c, e) * qbinom(c, k, k - j, j) *
                 qpoch_int(y * ipow(c, 1 - j), c, j) / qpoch_int(z * ipow(c, j - 1), c, j) *
                 qpoch_int(z * y * ipow(c, j), c, k - j) / qpoch_int(z * ipow(c, 2 * j), c, k - j);
        sum += t;
    }
    return sum;
}

ScaledSum qbinom_vanishing_sum_poly(cplx z, cplx c, int k) {
    if (k < 1) throw std::domain_error("qbinom_vanishing_sum: k must be >= 1");
    cplx sum = 0.0;
    double scale = 0.0;
    for (int j = 0; j <= k; ++j) {
        long e2 = -static_cast<long>(j) * (2 * k - j - 1);
        cplx t = cplx(j % 2 ? -1.0 : 1.0) * cpow_half(c, std::sqrt(c), e2) *
                 qpoch_int(z * ipow(c, -j + 2), c, j - 1) * (1.0 - z * ipow(c, -2 * j + 1)) *
                 qpoch_int(z * ipow(c, -2 * k + 2), c, k - j - 1) /
                 (qpoch_int(c, c, k - j) * qpoch_int(c, c, j));
        sum += t;
        scale += std::abs(t);
    }
    return ScaledSum{sum, scale};
}

ScaledSum qbinom_vanishing_sum_rational(cplx z, cplx c, int k) {
    if (k < 1) throw std::domain_error("qbinom_vanishing_sum: k must be >= 1");
    cplx sum = 0.0;
    double scale = 0.0;
    for (int j = 0; j <= k; ++j) {
        long e2 = -static_cast<long>(j) * (2 * k - j - 1);
        cplx den = qpoch_int(c, c, j) * qpoch_int(c, c, k - j) *
                   qpoch_int(z * ipow(c, -2 * (j - 1)), c, j) *
                   qpoch_int(z * ipow(c, -k - j + 1), c, k - j);
        if (std::abs(den) < 1e-13) throw singular_parameter_error("qbinom_vanishing_sum term j=" + std::to_string(j));
        cplx t = cplx(j % 2 ? -1.0 : 1.0) * cpow_half(c, std::sqrt(c), e2) / den;
        sum += t;
        scale += std::abs(t);
    }
    return ScaledSum{sum, scale};
}

IdentityCheck check_lower_entry_collapse(const LimitParams& lp, int r, int s) {
    if (s > r) throw std::domain_error("check_lower_entry_collapse: need r >= s");
    const cplx c = lp.c, w = lp.w, a = lp.a, b1 = lp.b1;
    cplx sum = 0.0;
    double scale = 0.0;
    for (int i = s; i <= r; ++i) {
        long e2 = -2L * (lp.n - i) * (i - s) + static_cast<long>(i + s - 1) * (i - s);
        cplx t = cplx((i - s) % 2 ? -1.0 : 1.0) * ipow(w, i - s) * cpow_half(c, lp.c_half, e2) *
                 qbinom(c, r - s, r - i, i - s) *
                 qpoch_int(a * b1 * ipow(c, -(r + i - 2)), c, i - s) /
                 qpoch_int(w * ipow(c, i + s - lp.n), c, i - s) *
                 qpoch_int(w * a * b1 * ipow(c, -(lp.n + r - i - 2)), c, r - i) /
                 qpoch_int(w * ipow(c, 2 * i - lp.n + 1), c, r - i);
        sum += t;
        scale += std::abs(t);
    }
    return IdentityCheck{"lower-entry-collapse", sum, 1.0, rel_residual(sum, 1.0), 0, scale};
}

IdentityCheck check_inverse_entry_collapse(const LimitParams& lp, int r, int s) {
    if (r > s) throw std::domain_error("check_inverse_entry_collapse: need s >= r");
    const cplx c = lp.c, w = lp.w, a = lp.a, b1 = lp.b1, b2 = lp.b2;
    cplx sum = 0.0;
    double scale = 0.0;
    for (int i = r; i <= s; ++i) {
        cplx t = ipow(w / (a * b2) * ipow(c, lp.n + r - i - 1), s - i) *
                 qpoch_int(a * b1 * ipow(c, -(r + s - 1)), c, s - i) /
                 qpoch_int(w * b1 / b2 * ipow(c, lp.n - s - i), c, s - i) *
                 qpoch_int(w / (a * b2) * ipow(c, lp.n + r - i), c, i - r) /
                 qpoch_int(w * b1 / b2 * ipow(c, lp.n - 2 * i + 1), c, i - r) *
                 qpoch_symm(c, c, s - r, s - i);
        sum += t;
        scale += std::abs(t);
    }
    return IdentityCheck{"inverse-entry-collapse", sum, 1.0, rel_residual(sum, 1.0), 0, scale};
}

IdentityCheck check_unipotent_inverse(const LimitParams& lp, int r, int s) {
    if (r > s) throw std::domain_error("check_unipotent_inverse: need s >= r");
    const cplx c = lp.c, a = lp.a, b1 = lp.b1;
    const int n = lp.n;
    const cplx y = a * ipow(c, -(n - 1));
    cplx sum = 0.0;
    double scale = 0.0;
    for (int j = r; j <= s; ++j) {
        long e2 = -static_cast<long>(j - r) * (j + r - 1);
        cplx u = cplx((j - r) % 2 ? -1.0 : 1.0) * ipow(y, j - r) * cpow_half(c, lp.c_half, e2) *
                 qbinom(c, j, j - r, r) * qpoch_int(b1 * ipow(c, n - j), c, j - r) /
                 qpoch_int(a * b1 * ipow(c, -2 * (j - 1)), c, j - r);
        cplx ustar = ipow(y, s - j) * ipow(c, static_cast<long>(j) * (j - s)) *
                     qbinom(c, s, s - j, j) * qpoch_int(b1 * ipow(c, n - s), c, s - j) /
                     qpoch_int(a * b1 * ipow(c, -(j + s - 1)), c, s - j);
        sum += u * ustar;
        scale += std::abs(u * ustar);
    }
    cplx expected = (r == s) ? 1.0 : 0.0;
    return IdentityCheck{"unipotent-inverse-closure", sum, expected, rel_residual(sum, expected), 0, scale};
}

IdentityCheck check_det_telescopes(const ParamSet& p) {
    const int n = p.n;
    const cplx c = p.c, w = p.w();
    cplx p1 = 1.0, p2 = 1.0, p3 = 1.0;
    for (int r = 0; r <= n; ++r) {
        p1 *= qpoch_int(w * ipow(c, -(n - 2 * r - 1)), c, n - r) /
              qpoch_int(w * ipow(c, -(n - r)), c, r);
        p2 *= qpoch_int(w * p.b1 / p.b2 * ipow(c, n - 2 * r + 1), c, r) /
              qpoch_int(w * p.b1 / p.b2 * ipow(c, -r), c, n - r);
        p3 *= qpoch_int(p.a * p.b1 * ipow(c, -2 * (r - 1)), c, r) /
              qpoch_int(p.a * p.b1 * ipow(c, -(n - 1 + r)), c, n - r);
    }
    double res = std::max({std::abs(p1 - 1.0), std::abs(p2 - 1.0), std::abs(p3 - 1.0)});
    return IdentityCheck{"det-telescopes", p1 * p2 * p3, 1.0, res};
}

} // namespace identities
} // namespace qselberg
