#pragma once

#include <string>

#include "qselberg/params.hpp"

namespace qselberg {
namespace identities {

struct IdentityCheck {
    std::string name;
    cplx computed;
    cplx expected;
    double residual;     // |computed - expected| / max(1, |expected|)
    uint64_t seed = 0;
    double scale = 1.0;  // sum of term magnitudes, for scale-relative bars

    double scaled_residual() const {
        return std::abs(computed - expected) / std::max(1.0, scale);
    }

    bool pass(double tol) const { return residual <= tol; }
    std::string to_json() const;
};

// q-binomial sums: qbinom_unit_sum equals 1 for every k >= 0; the vanishing
// forms equal 0 for k >= 1 (polynomial and rational evaluation routes).
// Residual bars are taken relative to the term-magnitude sum.
cplx qbinom_unit_sum(cplx z, cplx y, cplx c, int k);
struct ScaledSum { cplx sum; double scale; };
ScaledSum qbinom_vanishing_sum_poly(cplx z, cplx c, int k);
ScaledSum qbinom_vanishing_sum_rational(cplx z, cplx c, int k);

// Specialized summation identities inside the U_A / L_A evaluations.
IdentityCheck check_lower_entry_collapse(const LimitParams& lp, int r, int s);  // expected 1 (r >= s)
IdentityCheck check_inverse_entry_collapse(const LimitParams& lp, int r, int s);  // expected 1 (s >= r)
IdentityCheck check_unipotent_inverse(const LimitParams& lp, int r, int s);  // expected delta_{rs}

// Telescoping product identities behind the determinant closed forms.
IdentityCheck check_det_telescopes(const ParamSet& p);

} // namespace identities
} // namespace qselberg
