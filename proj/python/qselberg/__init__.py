"""Jackson integrals of symmetric Selberg type.

Closed-form R-matrices and q-difference connection matrices, their q->0
coefficient data, Riemann-Hilbert style reconstructions, and truncated
Jackson-sum verification of the q-KZ and parameter-shift systems.
"""

from ._qselberg import (  # noqa: F401
    CycleKind,
    LimitParams,
    ParamSet,
    QContext,
    SingularParameterError,
    TruncationConfig,
    a_coef_limit,
    a_matrix,
    assemble_A,
    assemble_K,
    b_function,
    basis_phi_s,
    c_minus_limit,
    c_plus_direct,
    c_plus_limit,
    characteristic_point,
    det_a,
    det_k,
    det_r21,
    h_limits,
    heine_2phi1,
    jackson_xi,
    k1,
    k2,
    k_matrix,
    kadell_lhs,
    kadell_rhs,
    qbinom_unit_sum,
    qbinom_vanishing_sum_poly,
    matsuo_psi,
    phi_prime,
    phi_weight,
    qpoch_inf,
    qpoch_int,
    qpoch_symm,
    r12,
    r21,
    r21_ldu,
    r21_udl,
    r_from_c_minus,
    r_from_c_plus,
    theta,
    theta_prod,
    theta_symm,
    verify_alpha_shift,
    verify_qkz,
    y_xi,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
