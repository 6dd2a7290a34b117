#include "qselberg/params.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace qselberg {

namespace {
cplx char_pow(cplx q, cplx e) { return std::exp(e * std::log(q)); }
}

ParamSet ParamSet::tau() const {
    ParamSet p(*this);
    std::swap(p.x1, p.x2);
    std::swap(p.b1, p.b2);
    if (p.exps) std::swap(p.exps->beta1, p.exps->beta2);
    return p;
}

ParamSet ParamSet::shift_x2() const {
    ParamSet p(*this);
    p.x2 *= q;
    return p;
}

ParamSet ParamSet::shift_alpha() const {
    ParamSet p(*this);
    p.a *= q;
    if (p.exps) p.exps->alpha += 1.0;
    return p;
}

cplx ParamSet::q_alpha_char(int j) const {
    // q^{alpha~ - n + j - 2(j-1) gamma} = a q^{j-n} c^{-2(j-1)}
    cplx v = a;
    for (int k = 0; k < n - j; ++k) v /= q;
    for (int k = 0; k < 2 * (j - 1); ++k) v /= c;
    return v;
}

cplx ParamSet::alpha_exp(int j) const {
    if (!exps)
        throw std::logic_error("ParamSet: raw exponents required for this operation");
    return exps->alpha - cplx(n - j) - 2.0 * cplx(j - 1) * exps->gamma;
}

ParamSet ParamSet::from_characters(int n, cplx q, cplx a, cplx b1, cplx b2, cplx c,
                                   cplx x1, cplx x2) {
    if (n < 1) throw std::domain_error("ParamSet: n must be >= 1");
    if (std::abs(q) >= 1.0) throw std::domain_error("ParamSet: |q| must be < 1");
    if (x1 == cplx(0.0) || x2 == cplx(0.0))
        throw std::domain_error("ParamSet: x1, x2 must be nonzero");
    ParamSet p;
    p.n = n; p.q = q; p.a = a; p.b1 = b1; p.b2 = b2; p.c = c;
    p.x1 = x1; p.x2 = x2;
    p.c_half = std::sqrt(c);
    return p;
}

ParamSet ParamSet::from_exponents(int n, cplx q, cplx alpha, cplx beta1, cplx beta2,
                                  cplx gamma, cplx x1, cplx x2) {
    ParamSet p = from_characters(n, q, char_pow(q, alpha), char_pow(q, beta1),
                                 char_pow(q, beta2), char_pow(q, gamma), x1, x2);
    p.c_half = char_pow(q, gamma / 2.0);
    p.exps = Exponents{alpha, beta1, beta2, gamma};
    return p;
}

LimitParams LimitParams::tau() const {
    LimitParams lp(*this);
    std::swap(lp.b1, lp.b2);
    lp.w = 1.0 / lp.w;
    return lp;
}

LimitParams LimitParams::from_params(const ParamSet& p) {
    LimitParams lp;
    lp.n = p.n; lp.a = p.a; lp.b1 = p.b1; lp.b2 = p.b2; lp.c = p.c;
    lp.w = p.w(); lp.c_half = p.c_half;
    return lp;
}

LimitParams LimitParams::make(int n, cplx a, cplx b1, cplx b2, cplx c, cplx w) {
    if (n < 1) throw std::domain_error("LimitParams: n must be >= 1");
    LimitParams lp;
    lp.n = n; lp.a = a; lp.b1 = b1; lp.b2 = b2; lp.c = c; lp.w = w;
    lp.c_half = std::sqrt(c);
    return lp;
}

namespace {

struct Family { const char* name; cplx base; };

std::optional<std::string> check_families(int n, cplx a, cplx b1, cplx b2, cplx c,
                                          cplx w, double eps) {
    const std::vector<Family> families = {
        {"c^k w", w},
        {"c^k a b1", a * b1},
        {"c^k a b1 b2", a * b1 * b2},
        {"c^k b1", b1},
        {"c^k b2", b2},
        {"c^k a", a},
        {"c^k a b2", a * b2},
        {"c^k w b1", w * b1},
        {"c^k w b2", w * b2},
        {"c^k w / b2", w / b2},
        {"c^k w b1 / b2", w * b1 / b2},
        {"c^k w a b1", w * a * b1},
        {"c^k w / (a b2)", w / (a * b2)},
        {"c^k w / (a b1)", w / (a * b1)},
        {"c^k b1 / b2", b1 / b2},
        {"c^k a b1 / b2", a * b1 / b2},
    };
    const int kmax = 2 * n + 2;
    for (const auto& f : families) {
        cplx v = f.base;
        for (int k = 0; k < kmax; ++k) v /= c;  // start at c^{-kmax}
        for (int k = -kmax; k <= kmax; ++k) {
            if (std::abs(v - 1.0) < eps)
                return std::string(f.name) + " = 1 at k=" + std::to_string(k);
            v *= c;
        }
    }
    // pure c^k != 1 for k != 0
    {
        cplx v = c;
        for (int k = 1; k <= kmax; ++k) {
            if (std::abs(v - 1.0) < eps)
                return "c^" + std::to_string(k) + " = 1";
            v *= c;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<std::string> genericity_violation(const LimitParams& lp, double eps) {
    return check_families(lp.n, lp.a, lp.b1, lp.b2, lp.c, lp.w, eps);
}

std::optional<std::string> genericity_violation(const ParamSet& p, double eps) {
    return check_families(p.n, p.a, p.b1, p.b2, p.c, p.w(), eps);
}

void require_generic(const LimitParams& lp, double eps) {
    if (auto v = genericity_violation(lp, eps))
        throw singular_parameter_error(*v);
}

void require_generic(const ParamSet& p, double eps) {
    if (auto v = genericity_violation(p, eps))
        throw singular_parameter_error(*v);
}

cplx ParamDraw::unit(double lo, double hi) {
    std::uniform_real_distribution<double> mag(lo, hi);
    std::uniform_real_distribution<double> ph(0.0, 2.0 * std::numbers::pi);
    double m = mag(rng_), p = ph(rng_);
    return cplx(m * std::cos(p), m * std::sin(p));
}

double ParamDraw::real_in(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(rng_);
}

long ParamDraw::integer_in(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng_);
}

LimitParams ParamDraw::limit_params(int n, double eps) {
    eps = std::max(eps, 2e-2);  // identity sweeps amplify near-1 denominators
    for (int tries = 0; tries < 1000; ++tries) {
        LimitParams lp = LimitParams::make(n, unit(), unit(), unit(), unit(0.2, 0.6),
                                           unit(0.6, 1.5));
        if (!genericity_violation(lp, eps)) return lp;
    }
    throw resource_limit_error("limit_params: could not draw generic parameters");
}

ParamSet ParamDraw::params(int n, cplx q, double eps) {
    eps = std::max(eps, 1e-2);
    for (int tries = 0; tries < 1000; ++tries) {
        cplx x1 = unit(0.6, 1.4), x2 = unit(0.6, 1.4);
        ParamSet p = ParamSet::from_characters(n, q, unit(), unit(), unit(),
                                               unit(0.2, 0.6), x1, x2);
        if (!genericity_violation(p, eps)) return p;
    }
    throw resource_limit_error("params: could not draw generic parameters");
}

ParamSet ParamDraw::real_params(int n, double q, double eps) {
    for (int tries = 0; tries < 1000; ++tries) {
        // alpha_1 = alpha - n + 1 controls the slowest lattice direction; keep
        // q^{alpha_1} (and q^{alpha_n} = q^{alpha} c^{-2(n-1)} q^0) well below 1.
        double alpha = real_in(n + 0.4, n + 1.2);
        double beta1 = real_in(0.3, 0.9);
        double beta2 = real_in(0.3, 0.9);
        double gamma = real_in(0.25, 0.6);
        double x1 = real_in(0.8, 1.4), x2 = real_in(0.5, 0.95);
        ParamSet p = ParamSet::from_exponents(n, q, alpha, beta1, beta2, gamma, x1, x2);
        if (!genericity_violation(p, eps)) return p;
    }
    throw resource_limit_error("real_params: could not draw generic parameters");
}

} // namespace qselberg
