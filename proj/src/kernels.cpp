#include "llens/kernels.hpp"

#include "kernel_detail.hpp"

// Parallel drivers. Each thread writes disjoint output rows; the arithmetic
// per row lives in kernel_detail.hpp and is shared with llens::serial.

namespace llens::kernels {

namespace {
// Skip the fork/join overhead for tiny operands.
constexpr long long kParallelCutoff = 1 << 14;

inline long long work(std::size_t m, std::size_t n, std::size_t k) {
    return static_cast<long long>(m) * static_cast<long long>(n) *
           static_cast<long long>(k);
}
}  // namespace

Matrix matmul_nn(const Matrix& a, const Matrix& b) {
    detail::check_nn(a, b);
    Matrix c(a.rows, b.cols);
    const long long m = static_cast<long long>(a.rows);
#pragma omp parallel for schedule(static) if (work(a.rows, b.cols, a.cols) > kParallelCutoff)
    for (long long i = 0; i < m; ++i) detail::nn_row(a, b, c, static_cast<std::size_t>(i));
    return c;
}

Matrix matmul_nt(const Matrix& a, const Matrix& b) {
    detail::check_nt(a, b);
    Matrix c(a.rows, b.rows);
    const long long m = static_cast<long long>(a.rows);
#pragma omp parallel for schedule(static) if (work(a.rows, b.rows, a.cols) > kParallelCutoff)
    for (long long i = 0; i < m; ++i) detail::nt_row(a, b, c, static_cast<std::size_t>(i));
    return c;
}

Matrix matmul_tn(const Matrix& a, const Matrix& b) {
    detail::check_tn(a, b);
    Matrix c(a.cols, b.cols);
    const long long m = static_cast<long long>(a.cols);
#pragma omp parallel for schedule(static) if (work(a.cols, b.cols, a.rows) > kParallelCutoff)
    for (long long i = 0; i < m; ++i) detail::tn_row(a, b, c, static_cast<std::size_t>(i));
    return c;
}

Vector matvec(const Matrix& a, const Vector& x) {
    detail::check_mv(a, x);
    Vector y(a.rows, 0.0);
    const long long m = static_cast<long long>(a.rows);
#pragma omp parallel for schedule(static) if (work(a.rows, 1, a.cols) > kParallelCutoff)
    for (long long i = 0; i < m; ++i)
        y[static_cast<std::size_t>(i)] = detail::dot8(a.row(static_cast<std::size_t>(i)), x.data(), a.cols);
    return y;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols, a.rows);
    const long long m = static_cast<long long>(a.rows);
#pragma omp parallel for schedule(static) if (work(a.rows, a.cols, 1) > kParallelCutoff)
    for (long long i = 0; i < m; ++i)
        for (std::size_t j = 0; j < a.cols; ++j)
            t(j, static_cast<std::size_t>(i)) = a(static_cast<std::size_t>(i), j);
    return t;
}

}  // namespace llens::kernels
