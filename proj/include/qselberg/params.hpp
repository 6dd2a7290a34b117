#pragma once

#include <complex>
#include <optional>
#include <random>
#include <string>

#include "qselberg/qseries.hpp"

namespace qselberg {

// Raw exponents behind the characters; kept when lattice shifts in the
// exponent directions are needed (Jackson sums, alpha-shift system).
struct Exponents {
    cplx alpha;   // alpha-tilde
    cplx beta1;
    cplx beta2;
    cplx gamma;
};

// Full parameter record for the weight at m=2: characters a = q^alpha~,
// b1 = q^beta1, b2 = q^beta2, c = q^gamma, plus the points x1, x2.
struct ParamSet {
    int n = 1;
    cplx q;
    cplx a, b1, b2, c;
    cplx x1, x2;
    cplx c_half;                    // fixed square root of c (branch chosen once)
    std::optional<Exponents> exps;  // present when built from exponents
    int product_order = 512;        // cap M on infinite-product factors

    cplx w() const { return x2 / x1; }
    ParamSet tau() const;           // swap (x1,b1) <-> (x2,b2)
    ParamSet shift_x2() const;      // x2 -> q x2
    ParamSet shift_alpha() const;   // a -> q a  (alpha~ -> alpha~ + 1)
    QContext ctx(double tol = 1e-16) const { return QContext(q, product_order, tol); }

    // q^{alpha_j} with alpha_j = alpha~ - n + j - 2(j-1) gamma, j in [1, n];
    // a pure character value.
    cplx q_alpha_char(int j) const;
    // alpha_j itself; requires exps.
    cplx alpha_exp(int j) const;

    static ParamSet from_characters(int n, cplx q, cplx a, cplx b1, cplx b2, cplx c,
                                    cplx x1, cplx x2);
    static ParamSet from_exponents(int n, cplx q, cplx alpha, cplx beta1, cplx beta2,
                                   cplx gamma, cplx x1, cplx x2);
};

// Limit-regime parameters: independent characters with q -> 0, w = x2/x1.
struct LimitParams {
    int n = 1;
    cplx a, b1, b2, c, w;
    cplx c_half;

    LimitParams tau() const;   // b1 <-> b2, w -> 1/w
    static LimitParams from_params(const ParamSet& p);
    static LimitParams make(int n, cplx a, cplx b1, cplx b2, cplx c, cplx w);
};

// Checks that no denominator character of the printed formulas lies within
// eps of 1 for shifts k in [-2n-2, 2n+2]. Returns the name of the first
// violated factor, or nullopt when generic.
std::optional<std::string> genericity_violation(const LimitParams& lp, double eps = 1e-4);
std::optional<std::string> genericity_violation(const ParamSet& p, double eps = 1e-4);
void require_generic(const LimitParams& lp, double eps = 1e-4);
void require_generic(const ParamSet& p, double eps = 1e-4);

// Seeded generic draws for verification sweeps. Characters are drawn on
// annuli and redrawn until the genericity guard passes.
class ParamDraw {
public:
    explicit ParamDraw(uint64_t seed) : rng_(seed) {}

    cplx unit(double lo = 0.15, double hi = 0.75);       // |z| in [lo,hi], random phase
    double real_in(double lo, double hi);
    long integer_in(long lo, long hi);                   // inclusive

    LimitParams limit_params(int n, double eps = 1e-3);
    // complex-character draw at a given nome (for finite-q matrix identities)
    ParamSet params(int n, cplx q, double eps = 1e-3);
    // positive-real draw inside the empirical convergence region (Jackson sums)
    ParamSet real_params(int n, double q, double eps = 1e-3);

private:
    std::mt19937_64 rng_;
};

} // namespace qselberg
