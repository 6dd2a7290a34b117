#include <doctest.h>

#include "qselberg/gauss.hpp"
#include "qselberg/weights.hpp"
#include "support.hpp"

using namespace qselberg;
using qstest::rel;

namespace {
ParamSet generic(ParamDraw& draw, int n) { return draw.params(n, cplx(0.2, 0.03)); }
}

TEST_CASE("n=1 R21 against the basis-change solution") {
    ParamDraw draw(101);
    ParamSet p = generic(draw, 1);
    cplx w = p.w(), b1 = p.b1, b2 = p.b2;
    CMatrix R = gauss::R21(p);
    CHECK(rel(R(0, 0), (w - 1.0) / (w - b2)) <= 1e-13);
    CHECK(rel(R(0, 1), (1.0 - b1) * w / (w - b2)) <= 1e-13);
    CHECK(rel(R(1, 0), (1.0 - b2) / (w - b2)) <= 1e-13);
    CHECK(rel(R(1, 1), (w * b1 - b2) / (w - b2)) <= 1e-13);
    // column relations (phi_0, phi_1) R = (psi_1, psi_0) at a random point
    Point t{draw.unit(0.5, 1.4)};
    cplx phi0 = basis_phi_s(p, 0, t), phi1 = basis_phi_s(p, 1, t);
    cplx psi1 = matsuo_psi(p, 1, 0, t), psi0 = matsuo_psi(p, 0, 1, t);
    CHECK(rel(R(0, 0) * phi0 + R(1, 0) * phi1, psi1) <= 1e-12);
    CHECK(rel(R(0, 1) * phi0 + R(1, 1) * phi1, psi0) <= 1e-12);
}

TEST_CASE("factor diagonals are unit") {
    ParamDraw draw(103);
    ParamSet p = generic(draw, 3);
    GaussFactors f = gauss::R21_UDL(p);
    GaussFactors g = gauss::R21_LDU(p);
    for (int r = 0; r <= 3; ++r) {
        CHECK(rel(f.left(r, r), 1.0) <= 1e-14);
        CHECK(rel(f.right(r, r), 1.0) <= 1e-14);
        CHECK(rel(g.left(r, r), 1.0) <= 1e-14);
        CHECK(rel(g.right(r, r), 1.0) <= 1e-14);
    }
}

TEST_CASE("inverse pair and dual factorization") {
    ParamDraw draw(107);
    for (int n : {1, 2, 3, 4}) {
        for (int t = 0; t < 6; ++t) {
            ParamSet p = generic(draw, n);
            CMatrix R = gauss::R21(p);
            CHECK(max_abs_diff(gauss::R12(p) * R, CMatrix::identity(n + 1)) <= 1e-10);
            CHECK(max_abs_diff(gauss::R21_LDU(p).assemble(), R) / R.max_abs() <= 1e-10);
        }
    }
}

TEST_CASE("both expressions of R12") {
    ParamDraw draw(109);
    ParamSet p = generic(draw, 3);
    ParamSet tp = p.tau();
    GaussFactors u = gauss::R21_UDL(tp);
    GaussFactors l = gauss::R21_LDU(tp);
    CMatrix e1 = jconj(u.left) * jconj(u.middle) * jconj(u.right);
    CMatrix e2 = jconj(l.left) * jconj(l.middle) * jconj(l.right);
    CHECK(max_abs_diff(e1, e2) / e1.max_abs() <= 1e-12);
    CHECK(max_abs_diff(e1, gauss::R12(p)) / e1.max_abs() <= 1e-12);
}

TEST_CASE("inverse-transpose relations between the factor triples") {
    ParamDraw draw(113);
    ParamSet p = generic(draw, 3);
    ParamSet tp = p.tau();
    GaussFactors f = gauss::R21_UDL(p), ft = gauss::R21_UDL(tp);
    CHECK(max_abs_diff(f.right.inverse(), jconj(ft.left)) <= 1e-10);
    CHECK(max_abs_diff(f.middle.inverse(), jconj(ft.middle)) <= 1e-10);
    CHECK(max_abs_diff(f.left.inverse(), jconj(ft.right)) <= 1e-10);
    GaussFactors g = gauss::R21_LDU(p), gt = gauss::R21_LDU(tp);
    CHECK(max_abs_diff(g.right.inverse(), jconj(gt.left)) <= 1e-10);
    CHECK(max_abs_diff(g.middle.inverse(), jconj(gt.middle)) <= 1e-10);
    CHECK(max_abs_diff(g.left.inverse(), jconj(gt.right)) <= 1e-10);
}

TEST_CASE("K matrices") {
    ParamDraw draw(127);
    ParamSet p = generic(draw, 2);
    CMatrix K = gauss::K_matrix(p);
    // det K closed form
    CHECK(rel(K.det(), gauss::det_K(p)) <= 1e-11);
    // D2 = J D1 J
    CHECK(max_abs_diff(gauss::D2(p), jconj(gauss::D1(p))) <= 1e-14);
    // UDL and LDU routes agree
    CMatrix K2 = gauss::R21_LDU(p).assemble() * gauss::D2(p);
    CHECK(max_abs_diff(K, K2) / K.max_abs() <= 1e-11);
    // K1 = R12 D1 invertible sanity and K2 shape
    CHECK(std::abs(gauss::K1(p).det()) > 0);
    CHECK(std::abs(gauss::K2(p).det()) > 0);
}

TEST_CASE("determinant closed forms") {
    ParamDraw draw(131);
    for (int n : {1, 2, 3, 4}) {
        ParamSet p = generic(draw, n);
        CMatrix R = gauss::R21(p);
        CHECK(rel(R.det(), gauss::det_R21(p)) <= 1e-10);
        // det equals the product of either diagonal
        cplx d1 = 1.0, d2 = 1.0;
        GaussFactors f = gauss::R21_UDL(p), g = gauss::R21_LDU(p);
        for (int r = 0; r <= n; ++r) { d1 *= f.middle(r, r); d2 *= g.middle(r, r); }
        CHECK(rel(R.det(), d1) <= 1e-10);
        CHECK(rel(R.det(), d2) <= 1e-10);
        CMatrix A = gauss::A_matrix(p);
        CHECK(rel(A.det(), gauss::det_A(p)) <= 1e-10);
    }
    // n=1 det R reduction
    ParamSet p = generic(draw, 1);
    cplx want = (1.0 - p.w() * p.b1) / ((1.0 - p.w() / p.b2) * p.b2);
    CHECK(rel(gauss::det_R21(p), want) <= 1e-12);
}

TEST_CASE("A matrix n=1 closed form") {
    ParamDraw draw(137);
    ParamSet p = generic(draw, 1);
    GaussFactors f = gauss::A_factors(p);
    cplx a = p.a, b1 = p.b1, b2 = p.b2;
    CHECK(rel(f.left(0, 1), -a * (1.0 - b1) / (1.0 - a * b1)) <= 1e-12);
    CHECK(rel(f.middle(0, 0), (1.0 - a) * p.x1 / (1.0 - a * b1)) <= 1e-12);
    CHECK(rel(f.middle(1, 1), (1.0 - a * b1) * p.x2 / (1.0 - a * b1 * b2)) <= 1e-12);
    CHECK(rel(f.right(1, 0), -(1.0 - b2) * p.x1 / ((1.0 - a * b1) * p.x2)) <= 1e-12);
    CMatrix A = f.assemble();
    CHECK(rel(A(0, 0), (1.0 - a * b2) * p.x1 / (1.0 - a * b1 * b2)) <= 1e-12);
    CHECK(rel(A(0, 1), -a * (1.0 - b1) * p.x2 / (1.0 - a * b1 * b2)) <= 1e-12);
    CHECK(rel(A(1, 0), -(1.0 - b2) * p.x1 / (1.0 - a * b1 * b2)) <= 1e-12);
    CHECK(rel(A(1, 1), (1.0 - a * b1) * p.x2 / (1.0 - a * b1 * b2)) <= 1e-12);
}

TEST_CASE("A bar factorization assembles to A") {
    ParamDraw draw(139);
    for (int n : {1, 2, 3}) {
        ParamSet p = generic(draw, n);
        CMatrix A = gauss::A_matrix(p);
        CHECK(max_abs_diff(gauss::A_bar_factors(p).assemble(), A) / A.max_abs() <= 1e-11);
    }
}

TEST_CASE("generic udl/ldu") {
    ParamDraw draw(149);
    CMatrix I = CMatrix::identity(3);
    GaussFactors fi = udl(I);
    CHECK(max_abs_diff(fi.assemble(), I) <= 1e-14);
    for (int n : {2, 3}) {
        ParamSet p = generic(draw, n);
        CMatrix R = gauss::R21(p);
        GaussFactors closed = gauss::R21_UDL(p);
        GaussFactors num = udl(R);
        CHECK(max_abs_diff(num.left, closed.left) <= 1e-9);
        CHECK(max_abs_diff(num.middle, closed.middle) <= 1e-9);
        CHECK(max_abs_diff(num.right, closed.right) <= 1e-9);
        GaussFactors closed2 = gauss::R21_LDU(p);
        GaussFactors num2 = ldu(R);
        CHECK(max_abs_diff(num2.left, closed2.left) <= 1e-9);
        CHECK(max_abs_diff(num2.middle, closed2.middle) <= 1e-9);
        CHECK(max_abs_diff(num2.right, closed2.right) <= 1e-9);
        // the numeric Gauss diagonal of A equals the closed diagonal
        CMatrix A = gauss::A_matrix(p);
        GaussFactors fa = udl(A);
        GaussFactors fc = gauss::A_factors(p);
        CHECK(max_abs_diff(fa.middle, fc.middle) / fc.middle.max_abs() <= 1e-10);
    }
    // singular-minor error carries the index
    CMatrix sing(2);
    sing(0, 1) = 1.0; sing(1, 0) = 1.0;  // zero leading minor
    CHECK_THROWS_AS(ldu(sing), singular_parameter_error);
}

TEST_CASE("shape tags verified on construction") {
    ParamDraw draw(151);
    ParamSet p = generic(draw, 2);
    GaussFactors f = gauss::R21_UDL(p);
    CHECK(f.left.shape() == Shape::upper_unipotent);
    CHECK(f.middle.shape() == Shape::diagonal);
    CHECK(f.right.shape() == Shape::lower_unipotent);
    CMatrix bad(2);
    bad(0, 0) = 2.0;
    CHECK_THROWS_AS(bad.set_shape(Shape::upper_unipotent), std::logic_error);
}

TEST_CASE("degenerate parameters are rejected with the factor name") {
    ParamSet p = ParamSet::from_characters(1, 0.2, 0.3, 0.4, 1.0, 0.35, 1.2, 0.8);
    CHECK_THROWS_AS(gauss::R21(p), singular_parameter_error);
}
