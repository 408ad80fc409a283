#pragma once

#include <cstddef>
#include <string>

#include "llens/error.hpp"
#include "llens/tensor.hpp"

// Inner loops shared by the parallel and serial kernel drivers. Keeping a
// single definition guarantees both flavours run identical arithmetic in
// identical order.

namespace llens::detail {

// Eight independent accumulator lanes; lane k sums elements k, k+8, ...
// The lane structure is part of the numeric contract (it pins the
// floating-point summation order) and also lets the compiler vectorize.
inline double dot8(const double* a, const double* b, std::size_t n) {
    double c0 = 0, c1 = 0, c2 = 0, c3 = 0, c4 = 0, c5 = 0, c6 = 0, c7 = 0;
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        c0 += a[i] * b[i];
        c1 += a[i + 1] * b[i + 1];
        c2 += a[i + 2] * b[i + 2];
        c3 += a[i + 3] * b[i + 3];
        c4 += a[i + 4] * b[i + 4];
        c5 += a[i + 5] * b[i + 5];
        c6 += a[i + 6] * b[i + 6];
        c7 += a[i + 7] * b[i + 7];
    }
    double tail = 0;
    for (; i < n; ++i) tail += a[i] * b[i];
    return ((c0 + c4) + (c1 + c5)) + ((c2 + c6) + (c3 + c7)) + tail;
}

inline void axpy(double* y, double alpha, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

// One output row of each matmul flavour; drivers parallelize over rows.
inline void nn_row(const Matrix& a, const Matrix& b, Matrix& c, std::size_t i) {
    double* crow = c.row(i);
    const double* arow = a.row(i);
    for (std::size_t k = 0; k < a.cols; ++k) axpy(crow, arow[k], b.row(k), b.cols);
}

inline void nt_row(const Matrix& a, const Matrix& b, Matrix& c, std::size_t i) {
    double* crow = c.row(i);
    const double* arow = a.row(i);
    for (std::size_t j = 0; j < b.rows; ++j) crow[j] = dot8(arow, b.row(j), a.cols);
}

inline void tn_row(const Matrix& a, const Matrix& b, Matrix& c, std::size_t i) {
    double* crow = c.row(i);
    for (std::size_t k = 0; k < a.rows; ++k) axpy(crow, a(k, i), b.row(k), b.cols);
}

inline void check_nn(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows)
        throw ShapeError("matmul: inner dimensions differ: " + std::to_string(a.cols) +
                         " vs " + std::to_string(b.rows));
}

inline void check_nt(const Matrix& a, const Matrix& b) {
    if (a.cols != b.cols)
        throw ShapeError("matmul_nt: inner dimensions differ: " + std::to_string(a.cols) +
                         " vs " + std::to_string(b.cols));
}

inline void check_tn(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows)
        throw ShapeError("matmul_tn: inner dimensions differ: " + std::to_string(a.rows) +
                         " vs " + std::to_string(b.rows));
}

inline void check_mv(const Matrix& a, const Vector& x) {
    if (a.cols != x.size())
        throw ShapeError("matvec: matrix has " + std::to_string(a.cols) +
                         " cols, vector has " + std::to_string(x.size()));
}

}  // namespace llens::detail
