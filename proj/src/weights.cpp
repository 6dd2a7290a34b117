#include "qselberg/weights.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace qselberg {

namespace {

constexpr double kPoleGuard = 1e-12;

void check_point(const ParamSet& p, const Point& t) {
    if (static_cast<int>(t.size()) != p.n)
        throw std::domain_error("point size does not match n");
    for (const auto& tj : t)
        if (tj == cplx(0.0)) throw std::domain_error("point coordinate is zero");
}

cplx guarded_inv(cplx denom, const char* what) {
    if (std::abs(denom) < kPoleGuard) throw singular_parameter_error(what);
    return 1.0 / denom;
}

// Kahan-style compensated accumulation for alternating sums.
struct Kahan {
    cplx s{0.0}, comp{0.0};
    void add(cplx v) {
        cplx y = v - comp;
        cplx t = s + y;
        comp = (t - s) - y;
        s = t;
    }
};

template <typename F>
void for_each_permutation(int n, F&& body) {
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        body(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

} // namespace

int perm_sign(const std::vector<int>& sigma) {
    int s = 1;
    const int n = static_cast<int>(sigma.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (sigma[static_cast<size_t>(i)] > sigma[static_cast<size_t>(j)]) s = -s;
    return s;
}

Point apply_perm(const std::vector<int>& sigma, const Point& t) {
    Point out(t.size());
    for (size_t i = 0; i < t.size(); ++i) out[i] = t[static_cast<size_t>(sigma[i])];
    return out;
}

cplx alpha_power(const ParamSet& p, const Point& t) {
    cplx v = 0.0;
    for (int j = 1; j <= p.n; ++j)
        v += p.alpha_exp(j) * std::log(t[static_cast<size_t>(j - 1)]);
    return std::exp(v);
}

cplx phi_weight_general(const ParamSet& p, std::span<const cplx> xs,
                        std::span<const cplx> bs, const Point& t) {
    check_point(p, t);
    if (xs.size() != bs.size() || xs.empty())
        throw std::domain_error("phi_weight_general: need matching xs/bs");
    const QContext ctx = p.ctx();
    cplx val = alpha_power(p, t);
    for (int j = 0; j < p.n; ++j) {
        cplx tj = t[static_cast<size_t>(j)];
        for (size_t k = 0; k < xs.size(); ++k) {
            cplx den = qpoch_inf(tj * bs[k] / xs[k], p.q, ctx);
            val *= qpoch_inf(tj / xs[k], p.q, ctx) *
                   guarded_inv(den, "phi pole (t_j q^beta_k / x_k lattice)");
        }
    }
    for (int i = 0; i < p.n; ++i)
        for (int j = i + 1; j < p.n; ++j) {
            cplx u = t[static_cast<size_t>(j)] / t[static_cast<size_t>(i)];
            cplx den = qpoch_inf(p.c * u, p.q, ctx);
            val *= qpoch_inf(p.q * u / p.c, p.q, ctx) *
                   guarded_inv(den, "phi pole (q^gamma t_j/t_i lattice)");
        }
    return val;
}

cplx phi_weight(const ParamSet& p, const Point& t) {
    std::array<cplx, 2> xs{p.x1, p.x2}, bs{p.b1, p.b2};
    return phi_weight_general(p, xs, bs, t);
}

cplx phi_prime(const ParamSet& p, const Point& t) {
    check_point(p, t);
    const QContext ctx = p.ctx();
    cplx val = 1.0;
    for (int j = 0; j < p.n; ++j) {
        cplx tj = t[static_cast<size_t>(j)];
        cplx d1 = qpoch_inf(tj * p.b1 / p.x1, p.q, ctx);
        cplx d2 = qpoch_inf(tj * p.b2 / p.x2, p.q, ctx);
        val *= qpoch_inf(p.q * tj / p.x1, p.q, ctx) * guarded_inv(d1, "phi' pole (b1 lattice)");
        val *= qpoch_inf(p.q * tj / p.x2, p.q, ctx) * guarded_inv(d2, "phi' pole (b2 lattice)");
    }
    for (int i = 0; i < p.n; ++i)
        for (int j = i + 1; j < p.n; ++j) {
            cplx u = t[static_cast<size_t>(j)] / t[static_cast<size_t>(i)];
            cplx den = qpoch_inf(p.c * u, p.q, ctx);
            val *= qpoch_inf(p.q * u / p.c, p.q, ctx) *
                   guarded_inv(den, "phi' pole (q^gamma t_j/t_i lattice)");
        }
    return val;
}

cplx alt_sum(const PointFn& f, const Point& t) {
    const int n = static_cast<int>(t.size());
    if (n > 8) throw resource_limit_error("alt_sum: n > 8");
    Kahan acc;
    for_each_permutation(n, [&](const std::vector<int>& perm) {
        acc.add(cplx(perm_sign(perm)) * f(apply_perm(perm, t)));
    });
    return acc.s;
}

cplx sym_sum(const PointFn& f, const Point& t) {
    const int n = static_cast<int>(t.size());
    if (n > 8) throw resource_limit_error("sym_sum: n > 8");
    Kahan acc;
    for_each_permutation(n, [&](const std::vector<int>& perm) {
        acc.add(f(apply_perm(perm, t)));
    });
    return acc.s;
}

cplx matsuo_psi(const ParamSet& p, int l1, int l2, const Point& t) {
    check_point(p, t);
    if (l1 < 0 || l2 < 0 || l1 + l2 != p.n)
        throw std::domain_error("matsuo_psi: need l1 + l2 = n");
    auto term = [&](const Point& tp) {
        cplx v = 1.0;
        for (int k = 0; k < p.n; ++k)
            v *= guarded_inv(1.0 - tp[static_cast<size_t>(k)] / p.x1, "psi pole t_k = x1");
        for (int k = 0; k < l2; ++k) {
            v *= (1.0 - p.b1 * tp[static_cast<size_t>(k)] / p.x1) *
                 guarded_inv(1.0 - tp[static_cast<size_t>(k)] / p.x2, "psi pole t_k = x2");
        }
        for (int i = 0; i < p.n; ++i)
            for (int j = i + 1; j < p.n; ++j)
                v *= tp[static_cast<size_t>(i)] - tp[static_cast<size_t>(j)] / p.c;
        return v;
    };
    return alt_sum(term, t);
}

cplx basis_phi_s(const ParamSet& p, int s, const Point& t) {
    if (s < 0 || s > p.n) throw std::domain_error("basis_phi_s: need 0 <= s <= n");
    // phi_s = tau psi_{(s, n-s)}
    return matsuo_psi(p.tau(), s, p.n - s, t);
}

cplx phi_s_poly(const ParamSet& p, int s, const Point& t) {
    cplx v = 1.0;
    for (int k = 0; k < p.n - s; ++k) v *= 1.0 - p.b2 * t[static_cast<size_t>(k)] / p.x2;
    for (int k = p.n - s; k < p.n; ++k) v *= 1.0 - t[static_cast<size_t>(k)] / p.x1;
    return v;
}

cplx psi_poly(const ParamSet& p, int l2, const Point& t) {
    cplx v = 1.0;
    for (int k = 0; k < l2; ++k) v *= 1.0 - p.b1 * t[static_cast<size_t>(k)] / p.x1;
    for (int k = l2; k < p.n; ++k) v *= 1.0 - t[static_cast<size_t>(k)] / p.x2;
    return v;
}

cplx d_gamma(const ParamSet& p, const Point& t) {
    cplx v = 1.0;
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j) v *= t[i] - t[j] / p.c;
    return v;
}

cplx alt_poly_dgamma(const ParamSet& p, const std::function<cplx(const Point&)>& poly,
                     const Point& t) {
    return alt_sum([&](const Point& tp) { return poly(tp) * d_gamma(p, tp); }, t);
}

namespace {
// exp(e (log t_j - log t_i)); the per-coordinate branch matches phi_weight's.
cplx pow_ratio(cplx tj, cplx ti, cplx e) {
    return std::exp(e * (std::log(tj) - std::log(ti)));
}
}

cplx cocycle_U(const ParamSet& p, const std::vector<int>& sigma, const Point& t) {
    check_point(p, t);
    if (!p.exps) throw std::logic_error("cocycle_U: raw exponents required");
    std::vector<int> inv(sigma.size());
    for (size_t i = 0; i < sigma.size(); ++i) inv[static_cast<size_t>(sigma[i])] = static_cast<int>(i);
    const QContext ctx = p.ctx();
    const cplx two_gamma_minus_1 = 2.0 * p.exps->gamma - 1.0;
    cplx val = 1.0;
    for (int i = 0; i < p.n; ++i)
        for (int j = i + 1; j < p.n; ++j) {
            if (inv[static_cast<size_t>(i)] <= inv[static_cast<size_t>(j)]) continue;
            cplx u = t[static_cast<size_t>(j)] / t[static_cast<size_t>(i)];
            cplx den = theta(p.q * u / p.c, ctx);
            val *= pow_ratio(t[static_cast<size_t>(j)], t[static_cast<size_t>(i)], two_gamma_minus_1) *
                   theta(p.c * u, ctx) * guarded_inv(den, "U_sigma theta zero");
        }
    return val;
}

cplx cocycle_U_sgn_form(const ParamSet& p, const std::vector<int>& sigma, const Point& t) {
    check_point(p, t);
    if (!p.exps) throw std::logic_error("cocycle_U: raw exponents required");
    std::vector<int> inv(sigma.size());
    for (size_t i = 0; i < sigma.size(); ++i) inv[static_cast<size_t>(sigma[i])] = static_cast<int>(i);
    const QContext ctx = p.ctx();
    const cplx two_gamma = 2.0 * p.exps->gamma;
    cplx val = perm_sign(sigma);
    for (int i = 0; i < p.n; ++i)
        for (int j = i + 1; j < p.n; ++j) {
            if (inv[static_cast<size_t>(i)] <= inv[static_cast<size_t>(j)]) continue;
            cplx u = t[static_cast<size_t>(j)] / t[static_cast<size_t>(i)];
            cplx den = theta(u / p.c, ctx);
            val *= pow_ratio(t[static_cast<size_t>(j)], t[static_cast<size_t>(i)], two_gamma) / p.c *
                   theta(p.c * u, ctx) * guarded_inv(den, "U_sigma theta zero");
        }
    return val;
}

Point lattice_shift(const ParamSet& p, const std::vector<long>& chi, const Point& t) {
    Point out(t);
    for (size_t j = 0; j < out.size(); ++j) {
        long nu = chi[j];
        for (long k = 0; k < std::labs(nu); ++k) out[j] = nu > 0 ? out[j] * p.q : out[j] / p.q;
    }
    return out;
}

cplx b_function(const ParamSet& p, const std::vector<long>& chi, const Point& t) {
    check_point(p, t);
    if (chi.size() != t.size()) throw std::domain_error("b_function: chi size mismatch");
    cplx val = 1.0;
    for (int j = 1; j <= p.n; ++j) {
        cplx qa = p.q_alpha_char(j);
        long nu = chi[static_cast<size_t>(j - 1)];
        for (long k = 0; k < std::labs(nu); ++k) val = nu > 0 ? val * qa : val / qa;
    }
    for (int j = 0; j < p.n; ++j) {
        cplx tj = t[static_cast<size_t>(j)];
        long nu = chi[static_cast<size_t>(j)];
        val *= qpoch_int(tj * p.b1 / p.x1, p.q, nu) * qpoch_int(tj * p.b2 / p.x2, p.q, nu);
        cplx den = qpoch_int(tj / p.x1, p.q, nu) * qpoch_int(tj / p.x2, p.q, nu);
        val *= guarded_inv(den, "b-function pole (t_j/x_k lattice)");
    }
    for (int i = 0; i < p.n; ++i)
        for (int j = i + 1; j < p.n; ++j) {
            long m = chi[static_cast<size_t>(j)] - chi[static_cast<size_t>(i)];
            cplx u = t[static_cast<size_t>(j)] / t[static_cast<size_t>(i)];
            // paired factors of (c u; q)_m / ((q/c) u; q)_m: a vanishing
            // numerator is a structural zero of T^chi Phi, not an error.
            if (m >= 0) {
                cplx nf = p.c * u, df = p.q * u / p.c;
                for (long k = 0; k < m; ++k) {
                    cplx den = 1.0 - df;
                    if (std::abs(den) < kPoleGuard)
                        throw singular_parameter_error("b-function pole (t_j/t_i lattice)");
                    val *= (1.0 - nf) / den;
                    nf *= p.q; df *= p.q;
                }
            } else {
                cplx nf = p.q * u / p.c, df = p.c * u;
                for (long l = 1; l <= -m; ++l) {
                    nf /= p.q; df /= p.q;
                    cplx den = 1.0 - df;
                    if (std::abs(den) < kPoleGuard)
                        throw singular_parameter_error("b-function pole (t_j/t_i lattice)");
                    val *= (1.0 - nf) / den;
                }
            }
        }
    return val;
}

cplx nabla(const ParamSet& p, const std::vector<long>& chi, const PointFn& f,
           const Point& t) {
    bool zero = std::all_of(chi.begin(), chi.end(), [](long v) { return v == 0; });
    if (zero) return 0.0;  // f - b_0 T^0 f with b_0 = 1
    return f(t) - b_function(p, chi, t) * f(lattice_shift(p, chi, t));
}

cplx kadell_rhs(const std::vector<int>& J, cplx Q, const Point& t) {
    const int n = static_cast<int>(t.size());
    const int jsz = static_cast<int>(J.size());
    long eJ = 0;
    std::vector<bool> in(static_cast<size_t>(n), false);
    for (int j : J) in[static_cast<size_t>(j)] = true;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!in[static_cast<size_t>(i)] && in[static_cast<size_t>(j)]) ++eJ;
    // elementary symmetric e_{|J|}(t)
    std::vector<cplx> e(static_cast<size_t>(n + 1), cplx(0.0));
    e[0] = 1.0;
    for (int i = 0; i < n; ++i)
        for (int k = std::min(i + 1, jsz); k >= 1; --k)
            e[static_cast<size_t>(k)] += e[static_cast<size_t>(k - 1)] * t[static_cast<size_t>(i)];
    cplx D = 1.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) D *= t[static_cast<size_t>(i)] - t[static_cast<size_t>(j)];
    cplx v = qpoch_int(Q, Q, jsz) * qpoch_int(Q, Q, n - jsz);
    for (int k = 0; k < n; ++k) v /= (1.0 - Q);
    cplx Qe = 1.0;
    for (long k = 0; k < eJ; ++k) Qe *= Q;
    return Qe * v * e[static_cast<size_t>(jsz)] * D;
}

cplx kadell_lhs(const std::vector<int>& J, cplx Q, const Point& t) {
    std::vector<bool> in(t.size(), false);
    for (int j : J) in[static_cast<size_t>(j)] = true;
    return alt_sum(
        [&](const Point& tp) {
            cplx v = 1.0;
            for (size_t j = 0; j < tp.size(); ++j)
                if (in[j]) v *= tp[j];
            for (size_t i = 0; i < tp.size(); ++i)
                for (size_t j = i + 1; j < tp.size(); ++j) v *= tp[i] - Q * tp[j];
            return v;
        },
        t);
}

Point characteristic_point(const ParamSet& p, CycleKind kind, int r) {
    if (r < 0 || r > p.n) throw std::domain_error("characteristic_point: need 0 <= r <= n");
    Point pt(static_cast<size_t>(p.n));
    auto fill = [&](int from, int count, cplx anchor, bool descending) {
        cplx v = anchor;
        for (int i = 0; i < count; ++i) {
            pt[static_cast<size_t>(from + i)] = v;
            v = descending ? v / p.c : v * p.c;
        }
    };
    const int nr = p.n - r;
    switch (kind) {
        case CycleKind::xi:
            fill(0, nr, p.x1, false);
            fill(nr, r, p.x2, false);
            break;
        case CycleKind::eta:
            fill(0, nr, p.x1 / p.b1, true);
            fill(nr, r, p.x2 / p.b2, true);
            break;
        case CycleKind::zeta:
            fill(0, nr, p.x1 / p.b1, true);
            fill(nr, r, p.x2, false);
            break;
        case CycleKind::delta:
            fill(0, nr, p.x1, false);
            fill(nr, r, p.x2 / p.b2, true);
            break;
    }
    return pt;
}

} // namespace qselberg
