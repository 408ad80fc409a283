#include "llens/tensor.hpp"

#include <cmath>

#include "llens/error.hpp"
#include "llens/kernels.hpp"
#include "kernel_detail.hpp"

namespace llens {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rws) {
    Matrix m(rws.size(), rws.size() ? rws.begin()->size() : 0);
    std::size_t i = 0;
    for (const auto& r : rws) {
        if (r.size() != m.cols) throw ShapeError("from_rows: ragged row lengths");
        std::size_t j = 0;
        for (double v : r) m(i, j++) = v;
        ++i;
    }
    return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) { return kernels::matmul_nn(a, b); }

Vector matvec(const Matrix& a, const Vector& x) { return kernels::matvec(a, x); }

Matrix transpose(const Matrix& a) { return kernels::transpose(a); }

double norm2(const Vector& x) { return std::sqrt(detail::dot8(x.data(), x.data(), x.size())); }

double dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw ShapeError("dot: length mismatch");
    return detail::dot8(a.data(), b.data(), a.size());
}

double frobenius_norm(const Matrix& a) {
    return std::sqrt(detail::dot8(a.data.data(), a.data.data(), a.data.size()));
}

double max_abs(const Matrix& a) {
    double m = 0.0;
    for (double v : a.data) m = std::max(m, std::fabs(v));
    return m;
}

Vector get_row(const Matrix& a, std::size_t i) {
    if (i >= a.rows) throw ShapeError("get_row: row index out of range");
    return Vector(a.row(i), a.row(i) + a.cols);
}

}  // namespace llens
