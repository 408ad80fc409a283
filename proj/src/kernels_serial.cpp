#include "llens/kernels.hpp"

#include "kernel_detail.hpp"

namespace llens::serial {

Matrix matmul_nn(const Matrix& a, const Matrix& b) {
    detail::check_nn(a, b);
    Matrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) detail::nn_row(a, b, c, i);
    return c;
}

Matrix matmul_nt(const Matrix& a, const Matrix& b) {
    detail::check_nt(a, b);
    Matrix c(a.rows, b.rows);
    for (std::size_t i = 0; i < a.rows; ++i) detail::nt_row(a, b, c, i);
    return c;
}

Matrix matmul_tn(const Matrix& a, const Matrix& b) {
    detail::check_tn(a, b);
    Matrix c(a.cols, b.cols);
    for (std::size_t i = 0; i < a.cols; ++i) detail::tn_row(a, b, c, i);
    return c;
}

Vector matvec(const Matrix& a, const Vector& x) {
    detail::check_mv(a, x);
    Vector y(a.rows, 0.0);
    for (std::size_t i = 0; i < a.rows; ++i) y[i] = detail::dot8(a.row(i), x.data(), a.cols);
    return y;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
    return t;
}

}  // namespace llens::serial
