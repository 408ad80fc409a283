#pragma once

#include "llens/tensor.hpp"

// Dense kernels in two flavours. llens::kernels is OpenMP-parallel over
// independent output elements; llens::serial is the plain reference kept
// for testing and benchmarking. Both compute every output element with the
// same fixed-order accumulation, so for a given build they agree bitwise
// and results do not depend on the thread count.

namespace llens::kernels {

Matrix matmul_nn(const Matrix& a, const Matrix& b);  // a(m×k) · b(k×n)
Matrix matmul_nt(const Matrix& a, const Matrix& b);  // a(m×k) · b(n×k)ᵀ
Matrix matmul_tn(const Matrix& a, const Matrix& b);  // a(k×m)ᵀ · b(k×n)
Vector matvec(const Matrix& a, const Vector& x);
Matrix transpose(const Matrix& a);

}  // namespace llens::kernels

namespace llens::serial {

Matrix matmul_nn(const Matrix& a, const Matrix& b);
Matrix matmul_nt(const Matrix& a, const Matrix& b);
Matrix matmul_tn(const Matrix& a, const Matrix& b);
Vector matvec(const Matrix& a, const Vector& x);
Matrix transpose(const Matrix& a);

}  // namespace llens::serial
