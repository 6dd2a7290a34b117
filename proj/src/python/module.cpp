// Python bindings for the main operations: q-series primitives, weight and
// basis evaluation, closed-form matrices, limit data, reconstructions, and
// the Jackson-sum verifications.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qselberg/gauss.hpp"
#include "qselberg/identities.hpp"
#include "qselberg/jackson.hpp"
#include "qselberg/limits.hpp"
#include "qselberg/weights.hpp"

namespace py = pybind11;
using namespace qselberg;

namespace {

std::vector<std::vector<cplx>> to_rows(const CMatrix& m) {
    std::vector<std::vector<cplx>> rows(static_cast<size_t>(m.dim()));
    for (int i = 0; i < m.dim(); ++i) {
        rows[static_cast<size_t>(i)].resize(static_cast<size_t>(m.dim()));
        for (int j = 0; j < m.dim(); ++j) rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = m(i, j);
    }
    return rows;
}

} // namespace

PYBIND11_MODULE(_qselberg, m) {
    m.doc() = "Jackson integrals of symmetric Selberg type: R-matrices, "
              "q-difference connection data, and identity verification";

    py::register_exception<singular_parameter_error>(m, "SingularParameterError");

    py::class_<QContext>(m, "QContext")
        .def(py::init<cplx, int, double>(), py::arg("q"), py::arg("product_order") = 256,
             py::arg("series_tol") = 1e-16)
        .def_readonly("q", &QContext::q);

    m.def("qpoch_inf", &qpoch_inf, py::arg("x"), py::arg("c"), py::arg("ctx"));
    m.def("qpoch_int", &qpoch_int, py::arg("x"), py::arg("c"), py::arg("nu"));
    m.def("qpoch_symm", &qpoch_symm, py::arg("x"), py::arg("c"), py::arg("r"), py::arg("s"));
    m.def("theta", &theta, py::arg("x"), py::arg("ctx"));
    m.def("theta_prod", &theta_prod, py::arg("x"), py::arg("r"), py::arg("step"), py::arg("ctx"));
    m.def("theta_symm", &theta_symm, py::arg("x"), py::arg("r"), py::arg("s"), py::arg("step"),
          py::arg("ctx"));
    m.def("heine_2phi1", &heine_2phi1, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x"),
          py::arg("ctx"));

    py::class_<ParamSet>(m, "ParamSet")
        .def_static("from_characters", &ParamSet::from_characters, py::arg("n"), py::arg("q"),
                    py::arg("a"), py::arg("b1"), py::arg("b2"), py::arg("c"), py::arg("x1"),
                    py::arg("x2"))
        .def_static("from_exponents", &ParamSet::from_exponents, py::arg("n"), py::arg("q"),
                    py::arg("alpha"), py::arg("beta1"), py::arg("beta2"), py::arg("gamma"),
                    py::arg("x1"), py::arg("x2"))
        .def("tau", &ParamSet::tau)
        .def_readonly("n", &ParamSet::n)
        .def_readonly("q", &ParamSet::q)
        .def_readonly("a", &ParamSet::a)
        .def_readonly("b1", &ParamSet::b1)
        .def_readonly("b2", &ParamSet::b2)
        .def_readonly("c", &ParamSet::c)
        .def_readonly("x1", &ParamSet::x1)
        .def_readonly("x2", &ParamSet::x2);

    py::class_<LimitParams>(m, "LimitParams")
        .def_static("make", &LimitParams::make, py::arg("n"), py::arg("a"), py::arg("b1"),
                    py::arg("b2"), py::arg("c"), py::arg("w"))
        .def_static("from_params", &LimitParams::from_params)
        .def("tau", &LimitParams::tau)
        .def_readonly("n", &LimitParams::n)
        .def_readonly("w", &LimitParams::w);

    py::enum_<CycleKind>(m, "CycleKind")
        .value("xi", CycleKind::xi)
        .value("eta", CycleKind::eta)
        .value("zeta", CycleKind::zeta)
        .value("delta", CycleKind::delta);

    m.def("phi_weight", &phi_weight, py::arg("p"), py::arg("t"));
    m.def("phi_prime", &phi_prime, py::arg("p"), py::arg("t"));
    m.def("matsuo_psi", &matsuo_psi, py::arg("p"), py::arg("l1"), py::arg("l2"), py::arg("t"));
    m.def("basis_phi_s", &basis_phi_s, py::arg("p"), py::arg("s"), py::arg("t"));
    m.def("characteristic_point", &characteristic_point, py::arg("p"), py::arg("kind"),
          py::arg("r"));
    m.def("b_function", &b_function, py::arg("p"), py::arg("chi"), py::arg("t"));
    m.def("kadell_lhs", &kadell_lhs, py::arg("J"), py::arg("Q"), py::arg("t"));
    m.def("kadell_rhs", &kadell_rhs, py::arg("J"), py::arg("Q"), py::arg("t"));

    auto mat = [](const CMatrix& mm) { return to_rows(mm); };
    m.def("r21", [mat](const ParamSet& p) { return mat(gauss::R21(p)); });
    m.def("r21_udl", [mat](const ParamSet& p) {
        auto f = gauss::R21_UDL(p);
        return py::make_tuple(mat(f.left), mat(f.middle), mat(f.right));
    });
    m.def("r21_ldu", [mat](const ParamSet& p) {
        auto f = gauss::R21_LDU(p);
        return py::make_tuple(mat(f.left), mat(f.middle), mat(f.right));
    });
    m.def("r12", [mat](const ParamSet& p) { return mat(gauss::R12(p)); });
    m.def("k_matrix", [mat](const ParamSet& p) { return mat(gauss::K_matrix(p)); });
    m.def("k1", [mat](const ParamSet& p) { return mat(gauss::K1(p)); });
    m.def("k2", [mat](const ParamSet& p) { return mat(gauss::K2(p)); });
    m.def("a_matrix", [mat](const ParamSet& p) { return mat(gauss::A_matrix(p)); });
    m.def("det_r21", &gauss::det_R21);
    m.def("det_k", &gauss::det_K);
    m.def("det_a", &gauss::det_A);

    m.def("c_plus_limit", [mat](const LimitParams& lp) { return mat(limits::C_plus_limit(lp)); });
    m.def("c_minus_limit", [mat](const LimitParams& lp) { return mat(limits::C_minus_limit(lp)); });
    m.def("h_limits", [mat](const LimitParams& lp) {
        auto h = limits::H_limits(lp);
        return py::make_tuple(mat(h.zeta_xi), mat(h.zeta_eta), mat(h.delta_xi), mat(h.delta_eta));
    });
    m.def("assemble_A", [mat](const LimitParams& lp, cplx x1, cplx x2) {
        return mat(limits::assemble_A(lp, x1, x2));
    });
    m.def("assemble_K", [mat](const LimitParams& lp) { return mat(limits::assemble_K(lp)); });
    m.def("r_from_c_plus",
          [mat](const LimitParams& lp) { return mat(limits::R_from_C(lp, limits::Side::plus)); });
    m.def("r_from_c_minus",
          [mat](const LimitParams& lp) { return mat(limits::R_from_C(lp, limits::Side::minus)); });
    m.def("a_coef_limit", &limits::a_coef_limit, py::arg("x"), py::arg("r"), py::arg("lp"));

    py::class_<jackson::TruncationConfig>(m, "TruncationConfig")
        .def(py::init([](int N, double tail_tol) {
                 jackson::TruncationConfig tc;
                 tc.N = N;
                 tc.tail_tol = tail_tol;
                 return tc;
             }),
             py::arg("N") = 40, py::arg("tail_tol") = 1e-9);

    m.def("jackson_xi", [](const ParamSet& p, int s, int r, const jackson::TruncationConfig& tc) {
        auto res = jackson::jackson_xi(p, s, r, tc);
        return py::make_tuple(res.value, res.converged);
    });
    m.def("y_xi", [mat](const ParamSet& p, const jackson::TruncationConfig& tc) {
        return mat(jackson::Y_xi(p, tc).entries);
    });
    m.def("c_plus_direct", &jackson::c_plus_direct, py::arg("p"), py::arg("r"), py::arg("s"));
    m.def("verify_qkz", [](const ParamSet& p, const jackson::TruncationConfig& tc, double tol) {
        auto r = jackson::verify_qkz(p, tc, tol);
        return py::make_tuple(r.pass, r.residual);
    });
    m.def("verify_alpha_shift",
          [](const ParamSet& p, const jackson::TruncationConfig& tc, double tol) {
              auto r = jackson::verify_alpha_shift(p, tc, tol);
              return py::make_tuple(r.pass, r.residual);
          });

    m.def("qbinom_unit_sum", &identities::qbinom_unit_sum, py::arg("z"), py::arg("y"), py::arg("c"),
          py::arg("k"));
    m.def("qbinom_vanishing_sum_poly", [](cplx z, cplx c, int k) {
        auto s = identities::qbinom_vanishing_sum_poly(z, c, k);
        return py::make_tuple(s.sum, s.scale);
    });
}
