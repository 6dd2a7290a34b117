#include "qselberg/cmatrix.hpp"

#include <algorithm>
#include <cmath>

namespace qselberg {

CMatrix::CMatrix(int dim, Shape shape)
    : dim_(dim), shape_(Shape::general), a_(static_cast<size_t>(dim) * dim, cplx(0.0)) {
    if (dim < 1) throw std::domain_error("CMatrix: dim must be >= 1");
    if (shape != Shape::general) shape_ = shape;  // caller fills entries, then set_shape verifies
}

CMatrix CMatrix::identity(int dim) {
    CMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    m.shape_ = Shape::diagonal;
    return m;
}

CMatrix CMatrix::diag(const std::vector<cplx>& d) {
    CMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<size_t>(i)];
    m.shape_ = Shape::diagonal;
    return m;
}

CMatrix CMatrix::antidiag_perm(int dim) {
    CMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, dim - 1 - i) = 1.0;
    return m;
}

bool CMatrix::check_shape(Shape s, double tol) const {
    if (s == Shape::general) return true;
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            cplx v = (*this)(i, j);
            switch (s) {
                case Shape::diagonal:
                    if (i != j && std::abs(v) > tol) return false;
                    break;
                case Shape::upper_unipotent:
                    if (i == j && std::abs(v - 1.0) > tol) return false;
                    if (i > j && std::abs(v) > tol) return false;
                    break;
                case Shape::lower_unipotent:
                    if (i == j && std::abs(v - 1.0) > tol) return false;
                    if (i < j && std::abs(v) > tol) return false;
                    break;
                default: break;
            }
        }
    }
    return true;
}

void CMatrix::set_shape(Shape s) {
    if (!check_shape(s))
        throw std::logic_error("CMatrix::set_shape: entries do not match tag " + shape_name(s));
    shape_ = s;
}

CMatrix CMatrix::operator*(const CMatrix& rhs) const {
    CMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < dim_; ++k) {
            cplx v = (*this)(i, k);
            if (v == cplx(0.0)) continue;
            for (int j = 0; j < dim_; ++j) out(i, j) += v * rhs(k, j);
        }
    return out;
}

CMatrix CMatrix::operator-(const CMatrix& rhs) const {
    CMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out(i, j) = (*this)(i, j) - rhs(i, j);
    return out;
}

CMatrix CMatrix::transpose() const {
    CMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out(i, j) = (*this)(j, i);
    return out;
}

CMatrix CMatrix::inverse() const {
    const int n = dim_;
    CMatrix a(*this), inv = CMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        if (std::abs(a(piv, col)) < 1e-300)
            throw singular_parameter_error("matrix inverse: singular at column " + std::to_string(col));
        if (piv != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        }
        cplx d = a(col, col);
        for (int j = 0; j < n; ++j) { a(col, j) /= d; inv(col, j) /= d; }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            cplx f = a(r, col);
            if (f == cplx(0.0)) continue;
            for (int j = 0; j < n; ++j) { a(r, j) -= f * a(col, j); inv(r, j) -= f * inv(col, j); }
        }
    }
    return inv;
}

cplx CMatrix::det() const {
    const int n = dim_;
    CMatrix a(*this);
    cplx d = 1.0;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        if (std::abs(a(piv, col)) < 1e-300) return 0.0;
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            d = -d;
        }
        d *= a(col, col);
        for (int r = col + 1; r < n; ++r) {
            cplx f = a(r, col) / a(col, col);
            for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
        }
    }
    return d;
}

std::vector<cplx> CMatrix::diagonal() const {
    std::vector<cplx> d(static_cast<size_t>(dim_));
    for (int i = 0; i < dim_; ++i) d[static_cast<size_t>(i)] = (*this)(i, i);
    return d;
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

bool CMatrix::is_upper_triangular(double tol) const {
    double scale = std::max(1.0, max_abs());
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < i; ++j)
            if (std::abs((*this)(i, j)) > tol * scale) return false;
    return true;
}

bool CMatrix::is_lower_triangular(double tol) const {
    double scale = std::max(1.0, max_abs());
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            if (std::abs((*this)(i, j)) > tol * scale) return false;
    return true;
}

CMatrix jconj(const CMatrix& m) {
    const int n = m.dim();
    CMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = m(n - 1 - i, n - 1 - j);
    return out;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    return (a - b).max_abs();
}

GaussFactors ldu(const CMatrix& m, double minor_tol) {
    const int n = m.dim();
    CMatrix u(m);
    CMatrix l = CMatrix::identity(n);
    double scale = std::max(1.0, m.max_abs());
    for (int k = 0; k < n; ++k) {
        if (std::abs(u(k, k)) < minor_tol * scale)
            throw singular_parameter_error("ldu: leading principal minor " + std::to_string(k));
        for (int i = k + 1; i < n; ++i) {
            cplx f = u(i, k) / u(k, k);
            l(i, k) = f;
            for (int j = 0; j < n; ++j) u(i, j) -= f * u(k, j);
        }
    }
    CMatrix d = CMatrix::diag(u.diagonal());
    CMatrix uu = CMatrix::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) uu(i, j) = u(i, j) / u(i, i);
    l.set_shape(Shape::lower_unipotent);
    d.set_shape(Shape::diagonal);
    uu.set_shape(Shape::upper_unipotent);
    return GaussFactors{l, d, uu, GaussFactors::Order::LDU};
}

GaussFactors udl(const CMatrix& m, double minor_tol) {
    // UDL of M equals J (LDU of JMJ) J.
    GaussFactors f = ldu(jconj(m), minor_tol);
    CMatrix u = jconj(f.left), d = jconj(f.middle), l = jconj(f.right);
    u.set_shape(Shape::upper_unipotent);
    d.set_shape(Shape::diagonal);
    l.set_shape(Shape::lower_unipotent);
    return GaussFactors{u, d, l, GaussFactors::Order::UDL};
}

std::string shape_name(Shape s) {
    switch (s) {
        case Shape::general: return "general";
        case Shape::upper_unipotent: return "upper-unipotent";
        case Shape::lower_unipotent: return "lower-unipotent";
        case Shape::diagonal: return "diagonal";
    }
    return "general";
}

} // namespace qselberg
