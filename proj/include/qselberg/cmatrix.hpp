#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qselberg/errors.hpp"

namespace qselberg {

using cplx = std::complex<double>;

enum class Shape { general, upper_unipotent, lower_unipotent, diagonal };

// Dense square complex matrix of dimension n+1. The shape tag, when not
// `general`, is verified on construction (unit diagonal / zero opposite
// triangle to 1e-13).
class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(int dim, Shape shape = Shape::general);

    static CMatrix identity(int dim);
    static CMatrix diag(const std::vector<cplx>& d);
    // anti-diagonal permutation J = (delta_{i,n-j})
    static CMatrix antidiag_perm(int dim);

    int dim() const { return dim_; }
    cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
    cplx operator()(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }

    Shape shape() const { return shape_; }
    void set_shape(Shape s);        // verifies, throws std::logic_error on mismatch
    bool check_shape(Shape s, double tol = 1e-13) const;

    CMatrix operator*(const CMatrix& rhs) const;
    CMatrix operator-(const CMatrix& rhs) const;
    CMatrix inverse() const;        // Gauss-Jordan with partial pivoting
    cplx det() const;               // LU with partial pivoting
    CMatrix transpose() const;

    std::vector<cplx> diagonal() const;
    double max_abs() const;

    bool is_upper_triangular(double tol = 1e-10) const;
    bool is_lower_triangular(double tol = 1e-10) const;

private:
    int dim_ = 0;
    Shape shape_ = Shape::general;
    std::vector<cplx> a_;
};

// J M J (reverse rows and columns).
CMatrix jconj(const CMatrix& m);

// max |A - B| over entries
double max_abs_diff(const CMatrix& a, const CMatrix& b);

// Unipotent Gauss factorizations.
struct GaussFactors {
    CMatrix left, middle, right;
    enum class Order { UDL, LDU } order;
    CMatrix assemble() const { return left * middle * right; }
};

// M = L D U with L lower-unipotent, D diagonal, U upper-unipotent.
// Throws singular_parameter_error naming the vanishing leading minor.
GaussFactors ldu(const CMatrix& m, double minor_tol = 1e-12);

// M = U D L (unipotent outer factors); needs nonzero trailing minors.
GaussFactors udl(const CMatrix& m, double minor_tol = 1e-12);

std::string shape_name(Shape s);

} // namespace qselberg
