#include "qselberg/jackson.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "qselberg/gauss.hpp"

namespace qselberg {
namespace jackson {

namespace {

constexpr double kZero = 1e-14;

// Phi'(q^nu xi) / Phi'(xi) as a product of elementary-factor quotients with
// matched lattice indices, so magnitudes stay O(1) and structural zeros
// short-circuit before overflow. Returns exact 0 off the summand's support.
cplx phi_prime_ratio(const ParamSet& p, const Point& xi, const std::vector<int>& nu) {
    const int n = p.n;
    cplx val = 1.0;
    // per-coordinate: (xi_j b_k/x_k; q)_nu / (q xi_j/x_k; q)_nu, k = 1,2
    for (int j = 0; j < n; ++j) {
        const cplx xj = xi[static_cast<size_t>(j)];
        cplx n1 = xj * p.b1 / p.x1, d1 = p.q * xj / p.x1;
        cplx n2 = xj * p.b2 / p.x2, d2 = p.q * xj / p.x2;
        for (int k = 0; k < nu[static_cast<size_t>(j)]; ++k) {
            cplx den = (1.0 - d1) * (1.0 - d2);
            if (std::abs(den) < kZero) throw singular_parameter_error("jackson lattice pole");
            cplx num = (1.0 - n1) * (1.0 - n2);
            if (std::abs(num) < kZero) return 0.0;
            val *= num / den;
            n1 *= p.q; d1 *= p.q; n2 *= p.q; d2 *= p.q;
        }
    }
    // pairs: (c u; q)_m / (q u / c; q)_m with u = xi_j/xi_i, m = nu_j - nu_i
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const cplx u = xi[static_cast<size_t>(j)] / xi[static_cast<size_t>(i)];
            long m = nu[static_cast<size_t>(j)] - nu[static_cast<size_t>(i)];
            if (m >= 0) {
                cplx nf = p.c * u, df = p.q * u / p.c;
                for (long k = 0; k < m; ++k) {
                    cplx den = 1.0 - df;
                    if (std::abs(den) < kZero) throw singular_parameter_error("jackson lattice pole");
                    cplx num = 1.0 - nf;
                    if (std::abs(num) < kZero) return 0.0;
                    val *= num / den;
                    nf *= p.q; df *= p.q;
                }
            } else {
                // (X;q)_{-k} = 1/prod (1 - X q^{-l}); quotient of the two sides
                cplx nf = p.q * u / p.c, df = p.c * u;
                for (long l = 1; l <= -m; ++l) {
                    nf /= p.q; df /= p.q;
                    cplx num = 1.0 - nf;      // zero here = off-support lattice point
                    if (std::abs(num) < kZero) return 0.0;
                    cplx den = 1.0 - df;
                    if (std::abs(den) < kZero) throw singular_parameter_error("jackson lattice pole");
                    val *= num / den;
                }
            }
        }
    return val;
}

struct Kahan {
    cplx s{0.0}, comp{0.0};
    void add(cplx v) {
        cplx y = v - comp;
        cplx t = s + y;
        comp = (t - s) - y;
        s = t;
    }
};

// iterate nu over the shell |nu|_1 = ell inside [0, N]^n
template <typename F>
void for_each_in_shell(int n, int N, int ell, F&& body) {
    std::vector<int> nu(static_cast<size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == n - 1) {
            if (rem <= N) {
                nu[static_cast<size_t>(pos)] = rem;
                body(nu);
            }
            return;
        }
        for (int v = 0; v <= std::min(rem, N); ++v) {
            nu[static_cast<size_t>(pos)] = v;
            rec(pos + 1, rem - v);
        }
    };
    rec(0, ell);
}

SumResult cone_sum(const ParamSet& p, const Point& xi, cplx prefactor,
                   const std::function<cplx(const Point&)>& apoly,
                   const TruncationConfig& tc) {
    const int n = p.n;
    std::vector<cplx> qa(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) qa[static_cast<size_t>(j - 1)] = p.q_alpha_char(j);
    // lattice decay rate: terms scale like prod_j |q^{alpha_j}|^{nu_j}
    double rate = 0.0;
    for (const auto& v : qa) rate = std::max(rate, std::abs(v));
    Kahan acc;
    double last_shell = 0.0;
    for (int ell = 0; ell <= n * tc.N; ++ell) {
        Kahan shell;
        double tmax = 0.0;
        for_each_in_shell(n, tc.N, ell, [&](const std::vector<int>& nu) {
            cplx A = 1.0;
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < nu[static_cast<size_t>(j)]; ++k) A *= qa[static_cast<size_t>(j)];
            cplx rat = phi_prime_ratio(p, xi, nu);
            if (rat == cplx(0.0)) return;
            Point t(xi);
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < nu[static_cast<size_t>(j)]; ++k) t[static_cast<size_t>(j)] *= p.q;
            cplx term = A * rat * apoly(t);
            tmax = std::max(tmax, std::abs(term));
            shell.add(term);
        });
        acc.add(shell.s);
        last_shell = std::max(std::abs(shell.s), tmax);
    }
    bool guard_ok = rate < 0.9;
    SumResult out;
    out.value = prefactor * acc.s;
    out.last_shell_rel = std::abs(acc.s) > 0 ? last_shell / std::abs(acc.s) : 0.0;
    out.converged = guard_ok && out.last_shell_rel <= tc.tail_tol;
    return out;
}

cplx one_minus_q_pow(const ParamSet& p) {
    cplx v = 1.0;
    for (int k = 0; k < p.n; ++k) v *= (1.0 - p.q);
    return v;
}

} // namespace

SumResult jackson_xi_poly(const ParamSet& p, int r,
                          const std::function<cplx(const Point&)>& poly,
                          const TruncationConfig& tc, std::optional<cplx> base_power) {
    require_generic(p);
    Point xi = characteristic_point(p, CycleKind::xi, r);
    cplx bp = base_power ? *base_power : alpha_power(p, xi);
    cplx pref = one_minus_q_pow(p) * bp * phi_prime(p, xi);
    auto apoly = [&](const Point& t) { return alt_poly_dgamma(p, poly, t); };
    return cone_sum(p, xi, pref, apoly, tc);
}

SumResult jackson_xi(const ParamSet& p, int s, int r, const TruncationConfig& tc,
                     std::optional<cplx> base_power) {
    return jackson_xi_poly(
        p, r, [&, s](const Point& t) { return phi_s_poly(p, s, t); }, tc, base_power);
}

namespace {

SolutionMatrix build_Y(const ParamSet& p, const TruncationConfig& tc, BasisTag basis,
                       const std::vector<std::optional<cplx>>& base_powers) {
    const int n = p.n;
    SolutionMatrix sm;
    sm.entries = CMatrix(n + 1);
    sm.basis = basis;
    sm.cycle = CycleKind::xi;
    sm.N = tc.N;
    sm.converged = true;
    for (int r = 0; r <= n; ++r) {
        for (int s = 0; s <= n; ++s) {
            SumResult sr;
            if (basis == BasisTag::phi) {
                sr = jackson_xi(p, s, r, tc, base_powers[static_cast<size_t>(r)]);
            } else {
                // column s holds psi~_{n-s}; psi_{(n-s, s)} has l2 = s
                sr = jackson_xi_poly(
                    p, r, [&, s](const Point& t) { return psi_poly(p, s, t); }, tc,
                    base_powers[static_cast<size_t>(r)]);
            }
            sm.entries(r, s) = sr.value;
            sm.converged = sm.converged && sr.converged;
            sm.worst_shell_rel = std::max(sm.worst_shell_rel, sr.last_shell_rel);
        }
    }
    return sm;
}

std::vector<std::optional<cplx>> default_powers(int n) {
    return std::vector<std::optional<cplx>>(static_cast<size_t>(n + 1), std::nullopt);
}

} // namespace

SolutionMatrix Y_xi(const ParamSet& p, const TruncationConfig& tc) {
    return build_Y(p, tc, BasisTag::phi, default_powers(p.n));
}

SolutionMatrix Y_xi_psi(const ParamSet& p, const TruncationConfig& tc) {
    return build_Y(p, tc, BasisTag::psi_reversed, default_powers(p.n));
}

cplx c_plus_direct(const ParamSet& p, int r, int s) {
    require_generic(p);
    const int n = p.n;
    Point xi = characteristic_point(p, CycleKind::xi, r);
    // (xi_1^{n-1} xi_2^{n-2} ... xi_{n-1})^{-1}
    cplx intpow = 1.0;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n - 1 - j; ++k) intpow /= xi[static_cast<size_t>(j)];
    cplx apoly = alt_poly_dgamma(
        p, [&](const Point& t) { return phi_s_poly(p, s, t); }, xi);
    return one_minus_q_pow(p) * intpow * phi_prime(p, xi) * apoly;
}

std::string params_digest(const ParamSet& p) {
    // FNV-1a over the parameter repr
    std::ostringstream os;
    os.precision(17);
    os << p.n << ";" << p.q << ";" << p.a << ";" << p.b1 << ";" << p.b2 << ";" << p.c
       << ";" << p.x1 << ";" << p.x2;
    uint64_t h = 1469598103934665603ull;
    for (char ch : os.str()) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ull;
    }
    std::ostringstream hex;
    hex << std::hex << h;
    return hex.str();
}

std::string VerificationReport::to_json() const {
    nlohmann::json j{{"identity", identity}, {"params_digest", params_digest},
                     {"residual", residual}, {"tolerance", tolerance},
                     {"pass", pass},         {"N", N},
                     {"M", M},               {"seed", seed}};
    return j.dump();
}

VerificationReport verify_qkz(const ParamSet& p, const TruncationConfig& tc,
                              double tolerance) {
    const int n = p.n;
    SolutionMatrix Y1 = Y_xi(p, tc);
    CMatrix K = gauss::K_matrix(p);
    // Y at (x1, q x2): same lattices; base powers continued multiplicatively so
    // the q-shift identity is exact (xi_j -> q xi_j on the x2 block).
    ParamSet p2 = p.shift_x2();
    std::vector<std::optional<cplx>> bps(static_cast<size_t>(n + 1));
    for (int r = 0; r <= n; ++r) {
        Point xi = characteristic_point(p, CycleKind::xi, r);
        cplx bp = alpha_power(p, xi);
        for (int j = n - r + 1; j <= n; ++j) bp *= p.q_alpha_char(j);
        bps[static_cast<size_t>(r)] = bp;
    }
    SolutionMatrix Y2 = build_Y(p2, tc, BasisTag::phi, bps);
    double resid = max_abs_diff(Y2.entries, Y1.entries * K) / Y1.entries.max_abs();
    VerificationReport rep;
    rep.identity = "qkz-T2";
    rep.params_digest = params_digest(p);
    rep.residual = resid;
    rep.tolerance = tolerance;
    rep.N = tc.N;
    rep.M = p.product_order;
    rep.pass = resid <= tolerance && Y1.converged && Y2.converged;
    if (!Y1.converged || !Y2.converged) rep.identity += " (truncation not converged)";
    return rep;
}

VerificationReport verify_alpha_shift(const ParamSet& p, const TruncationConfig& tc,
                                      double tolerance) {
    const int n = p.n;
    SolutionMatrix Y1 = Y_xi(p, tc);
    CMatrix A = gauss::A_matrix(p);
    ParamSet p2 = p.shift_alpha();
    std::vector<std::optional<cplx>> bps(static_cast<size_t>(n + 1));
    for (int r = 0; r <= n; ++r) {
        Point xi = characteristic_point(p, CycleKind::xi, r);
        cplx bp = alpha_power(p, xi);
        for (int j = 0; j < n; ++j) bp *= xi[static_cast<size_t>(j)];  // alpha_j -> alpha_j + 1
        bps[static_cast<size_t>(r)] = bp;
    }
    SolutionMatrix Y2 = build_Y(p2, tc, BasisTag::phi, bps);
    double resid = max_abs_diff(Y2.entries, Y1.entries * A) / Y1.entries.max_abs();
    VerificationReport rep;
    rep.identity = "alpha-shift";
    rep.params_digest = params_digest(p);
    rep.residual = resid;
    rep.tolerance = tolerance;
    rep.N = tc.N;
    rep.M = p.product_order;
    rep.pass = resid <= tolerance && Y1.converged && Y2.converged;
    return rep;
}

VerificationReport verify_exactness(const ParamSet& p, const std::vector<long>& chi,
                                    const PointFn& f, const TruncationConfig& tc,
                                    double tolerance) {
    require_generic(p);
    const int n = p.n;
    // over <xi_{F_0}> (all-x1 block); summand Phi * nabla_chi f evaluated via
    // the pole-free split of Phi.
    Point xi = characteristic_point(p, CycleKind::xi, 0);
    cplx bp = alpha_power(p, xi);
    std::vector<cplx> qa(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) qa[static_cast<size_t>(j - 1)] = p.q_alpha_char(j);
    cplx pp0 = phi_prime(p, xi);
    auto phi_f_at = [&](const std::vector<int>& nu) {
        cplx A = 1.0;
        Point t(xi);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < nu[static_cast<size_t>(j)]; ++k) {
                A *= qa[static_cast<size_t>(j)];
                t[static_cast<size_t>(j)] *= p.q;
            }
        cplx rat = phi_prime_ratio(p, xi, nu);
        if (rat == cplx(0.0)) return cplx(0.0);
        cplx lin = 1.0;
        for (int j = 0; j < n; ++j)
            lin *= (1.0 - t[static_cast<size_t>(j)] / p.x1) * (1.0 - t[static_cast<size_t>(j)] / p.x2);
        if (lin == cplx(0.0)) return cplx(0.0);
        return bp * A * pp0 * rat * lin * f(t);
    };
    // Phi * nabla_chi f at nu equals [Phi f](nu) - [Phi f](nu + chi) pointwise
    // (Phi b_chi = T^chi Phi); the product form stays finite where b_chi has a
    // pole against a zero of Phi.
    Kahan acc;
    double scale = 0.0;
    std::vector<int> shifted(static_cast<size_t>(n));
    for (int ell = 0; ell <= n * tc.N; ++ell) {
        for_each_in_shell(n, tc.N, ell, [&](const std::vector<int>& nu) {
            cplx fa = phi_f_at(nu);
            for (int j = 0; j < n; ++j)
                shifted[static_cast<size_t>(j)] = nu[static_cast<size_t>(j)] +
                                                  static_cast<int>(chi[static_cast<size_t>(j)]);
            bool in_cone = true;
            for (int j = 0; j < n; ++j) in_cone = in_cone && shifted[static_cast<size_t>(j)] >= 0;
            cplx fb = in_cone ? phi_f_at(shifted) : cplx(0.0);
            acc.add(fa - fb);
            scale += std::abs(fa);
        });
    }
    double resid = scale > 0 ? std::abs(acc.s) / scale : std::abs(acc.s);
    VerificationReport rep;
    rep.identity = "exactness-nabla";
    rep.params_digest = params_digest(p);
    rep.residual = resid;
    rep.tolerance = tolerance;
    rep.N = tc.N;
    rep.M = p.product_order;
    rep.pass = resid <= tolerance;
    return rep;
}

} // namespace jackson
} // namespace qselberg
