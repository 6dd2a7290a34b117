#pragma once

#include <functional>
#include <span>
#include <vector>

#include "qselberg/params.hpp"

namespace qselberg {

using Point = std::vector<cplx>;                 // n nonzero coordinates
using PointFn = std::function<cplx(const Point&)>;

// Characteristic-cycle base points of section 3.
enum class CycleKind { xi, eta, zeta, delta };

// The weight Phi_{n,2}(t). Powers t_j^{alpha_j} use the principal branch of
// log t_j, fixed per coordinate; requires raw exponents.
cplx phi_weight(const ParamSet& p, const Point& t);

// General-m weight of the same shape (points xs[k], characters bs[k] = q^{beta_k}).
// Only m=2 is exercised by the test suite.
cplx phi_weight_general(const ParamSet& p, std::span<const cplx> xs,
                        std::span<const cplx> bs, const Point& t);

// Pole-free part: Phi(t) = t^alpha Phi'(t) prod_j (1-t_j/x1)(1-t_j/x2).
// A function of characters only.
cplx phi_prime(const ParamSet& p, const Point& t);

// sum_{sigma} sgn(sigma) f(t_sigma)  /  sum_{sigma} f(t_sigma); n <= 8.
cplx alt_sum(const PointFn& f, const Point& t);
cplx sym_sum(const PointFn& f, const Point& t);

// Matsuo's rational basis psi_l (m=2, l = (l1,l2), l1+l2 = n) and the
// swapped basis phi_s of the main q-difference system.
cplx matsuo_psi(const ParamSet& p, int l1, int l2, const Point& t);
cplx basis_phi_s(const ParamSet& p, int s, const Point& t);

// Polynomial numerators of the regularized integrand:
//   phi_s_poly  = prod_{k<=n-s}(1 - b2 t_k/x2) prod_{k>n-s}(1 - t_k/x1)
//   psi_poly l2 = prod_{k<=l2} (1 - b1 t_k/x1) prod_{k>l2} (1 - t_k/x2)
// and D_gamma(t) = prod_{i<j}(t_i - t_j/c).
cplx phi_s_poly(const ParamSet& p, int s, const Point& t);
cplx psi_poly(const ParamSet& p, int l2, const Point& t);
cplx d_gamma(const ParamSet& p, const Point& t);

// A{ poly(t) D_gamma(t) } over S_n with compensated accumulation.
cplx alt_poly_dgamma(const ParamSet& p, const std::function<cplx(const Point&)>& poly,
                     const Point& t);

// Quasi-symmetry cocycle U_sigma(t): sigma given as the image vector
// (sigma[i] = sigma(i+1)-1, 0-based). Both printed forms are available.
cplx cocycle_U(const ParamSet& p, const std::vector<int>& sigma, const Point& t);
cplx cocycle_U_sgn_form(const ParamSet& p, const std::vector<int>& sigma, const Point& t);
// sigma-action sigma g(t) = g(t_{sigma(1)},...,t_{sigma(n)})
Point apply_perm(const std::vector<int>& sigma, const Point& t);
int perm_sign(const std::vector<int>& sigma);

// b-function b_chi(t) = T^chi Phi(t)/Phi(t) as a finite Pochhammer ratio,
// and the covariant difference nabla_chi f = f - b_chi * T^chi f.
cplx b_function(const ParamSet& p, const std::vector<long>& chi, const Point& t);
cplx nabla(const ParamSet& p, const std::vector<long>& chi, const PointFn& f,
           const Point& t);
Point lattice_shift(const ParamSet& p, const std::vector<long>& chi, const Point& t);

// Kadell's antisymmetrization identity: closed right side and brute-force left side.
cplx kadell_rhs(const std::vector<int>& J, cplx Q, const Point& t);
cplx kadell_lhs(const std::vector<int>& J, cplx Q, const Point& t);

// Characteristic-cycle base point of the given kind, 0 <= r <= n.
Point characteristic_point(const ParamSet& p, CycleKind kind, int r);

// prod_j exp(alpha_j log t_j) with principal logs (raw exponents required).
cplx alpha_power(const ParamSet& p, const Point& t);

} // namespace qselberg
