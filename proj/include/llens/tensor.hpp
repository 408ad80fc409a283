#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace llens {

using Vector = std::vector<double>;

// Dense row-major matrix of 64-bit reals. Values are immutable by
// convention once handed to another module; operations return copies.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;  // length rows*cols

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    double* row(std::size_t i) { return data.data() + i * cols; }
    const double* row(std::size_t i) const { return data.data() + i * cols; }

    bool operator==(const Matrix&) const = default;

    static Matrix identity(std::size_t n);
    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rws);
};

Matrix matmul(const Matrix& a, const Matrix& b);
Vector matvec(const Matrix& a, const Vector& x);
Matrix transpose(const Matrix& a);
double norm2(const Vector& x);

double dot(const Vector& a, const Vector& b);
double frobenius_norm(const Matrix& a);
double max_abs(const Matrix& a);
Vector get_row(const Matrix& a, std::size_t i);

}  // namespace llens
