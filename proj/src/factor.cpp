#include "llens/factor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "llens/error.hpp"
#include "kernel_detail.hpp"

namespace llens {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kConvergeTol = 1e-14;  // |b_p·b_q| / (|b_p||b_q|) considered zero

struct CoreResult {
    Matrix u;      // m×m
    Vector sigma;  // n values (m >= n), descending
    Matrix v;      // n×n, columns are right singular vectors
};

double col_dot(const Matrix& m, std::size_t p, std::size_t q) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows; ++i) s += m(i, p) * m(i, q);
    return s;
}

void rotate_cols(Matrix& m, std::size_t p, std::size_t q, double c, double s) {
    for (std::size_t i = 0; i < m.rows; ++i) {
        const double mp = m(i, p), mq = m(i, q);
        m(i, p) = c * mp - s * mq;
        m(i, q) = s * mp + c * mq;
    }
}

// Orthogonalizes the columns of B by plane rotations accumulated into V.
// Requires m >= n.
CoreResult one_sided_jacobi(const Matrix& a) {
    const std::size_t m = a.rows, n = a.cols;
    Matrix b = a;
    Matrix v = Matrix::identity(n);

    bool converged = (n <= 1);
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        converged = true;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double alpha = col_dot(b, p, p);
                const double beta = col_dot(b, q, q);
                const double gamma = col_dot(b, p, q);
                if (alpha == 0.0 || beta == 0.0) continue;
                if (std::fabs(gamma) <= kConvergeTol * std::sqrt(alpha * beta)) continue;
                converged = false;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                rotate_cols(b, p, q, c, s);
                rotate_cols(v, p, q, c, s);
            }
        }
    }
    if (!converged)
        throw NumericalError("svd: Jacobi sweeps did not converge within " +
                             std::to_string(kMaxSweeps) + " sweeps");

    // Column norms are the singular values; stable sort keeps ties deterministic.
    Vector sigma(n);
    for (std::size_t j = 0; j < n; ++j) sigma[j] = std::sqrt(col_dot(b, j, j));
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

    Vector sorted_sigma(n);
    Matrix bs(m, n), vs(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        sorted_sigma[j] = sigma[order[j]];
        for (std::size_t i = 0; i < m; ++i) bs(i, j) = b(i, order[j]);
        for (std::size_t i = 0; i < n; ++i) vs(i, j) = v(i, order[j]);
    }

    // Left vectors: normalized columns where the scale is trustworthy,
    // pivoted Gram-Schmidt over the standard basis for the rest.
    const double s0 = sorted_sigma[0];
    Matrix u(m, m);
    std::size_t filled = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (sorted_sigma[j] > 0.0 && sorted_sigma[j] > s0 * 1e-15) {
            for (std::size_t i = 0; i < m; ++i) u(i, filled) = bs(i, j) / sorted_sigma[j];
            ++filled;
        } else {
            sorted_sigma[j] = 0.0;
        }
    }
    if (filled < m) {
        // Candidates start as the identity; strip the span of the existing
        // columns, then repeatedly take the largest remaining candidate.
        Matrix cand = Matrix::identity(m);
        for (std::size_t j = 0; j < filled; ++j) {
            for (std::size_t k = 0; k < m; ++k) {
                double proj = 0.0;
                for (std::size_t i = 0; i < m; ++i) proj += u(i, j) * cand(i, k);
                for (std::size_t i = 0; i < m; ++i) cand(i, k) -= proj * u(i, j);
            }
        }
        while (filled < m) {
            std::size_t best = 0;
            double best_norm = -1.0;
            for (std::size_t k = 0; k < m; ++k) {
                const double nk = col_dot(cand, k, k);
                if (nk > best_norm) {
                    best_norm = nk;
                    best = k;
                }
            }
            // One re-orthogonalization pass against everything accepted so far.
            for (std::size_t j = 0; j < filled; ++j) {
                double proj = 0.0;
                for (std::size_t i = 0; i < m; ++i) proj += u(i, j) * cand(i, best);
                for (std::size_t i = 0; i < m; ++i) cand(i, best) -= proj * u(i, j);
            }
            const double nrm = std::sqrt(col_dot(cand, best, best));
            for (std::size_t i = 0; i < m; ++i) u(i, filled) = cand(i, best) / nrm;
            for (std::size_t k = 0; k < m; ++k) {
                double proj = 0.0;
                for (std::size_t i = 0; i < m; ++i) proj += u(i, filled) * cand(i, k);
                for (std::size_t i = 0; i < m; ++i) cand(i, k) -= proj * u(i, filled);
            }
            ++filled;
        }
    }
    return {std::move(u), std::move(sorted_sigma), std::move(vs)};
}

}  // namespace

SvdFactors svd(const Matrix& w, double rank_tol) {
    if (w.rows == 0 || w.cols == 0) throw InputError("svd: empty matrix");
    if (rank_tol <= 0.0) throw InputError("svd: rank_tol must be positive");
    for (double x : w.data)
        if (!std::isfinite(x)) throw InputError("svd: non-finite entry");

    SvdFactors f;
    f.rank_tol = rank_tol;
    if (w.rows >= w.cols) {
        CoreResult r = one_sided_jacobi(w);
        f.u = std::move(r.u);
        f.sigma = std::move(r.sigma);
        f.vt = kernels::transpose(r.v);
    } else {
        // Factor Wᵀ = Uₜ Σ Vₜᵀ, so W = Vₜ Σᵀ Uₜᵀ.
        CoreResult r = one_sided_jacobi(kernels::transpose(w));
        f.u = std::move(r.v);
        f.sigma = std::move(r.sigma);
        f.vt = kernels::transpose(r.u);
    }

    // Largest-magnitude entry of each right singular vector made nonnegative;
    // the paired left vector flips with it.
    const std::size_t n = w.cols, kmin = std::min(w.rows, w.cols);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t arg = 0;
        double best = -1.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double a = std::fabs(f.vt(i, j));
            if (a > best) {
                best = a;
                arg = j;
            }
        }
        if (f.vt(i, arg) < 0.0) {
            for (std::size_t j = 0; j < n; ++j) f.vt(i, j) = -f.vt(i, j);
            if (i < kmin)
                for (std::size_t j = 0; j < w.rows; ++j) f.u(j, i) = -f.u(j, i);
        }
    }

    f.rank = numerical_rank(f.sigma, rank_tol);
    return f;
}

double condition_number(const SvdFactors& f) {
    if (f.rank == 0)
        throw NumericalError("condition_number: undefined for a rank-0 matrix");
    return f.sigma[0] / f.sigma[f.rank - 1];
}

Matrix pseudoinverse(const SvdFactors& f) {
    const std::size_t m = f.u.rows, n = f.vt.cols;
    Matrix p(n, m);
    for (std::size_t i = 0; i < f.rank; ++i) {
        const double inv_sigma = 1.0 / f.sigma[i];
        for (std::size_t j = 0; j < n; ++j) {
            const double coef = f.vt(i, j) * inv_sigma;
            double* prow = p.row(j);
            for (std::size_t k = 0; k < m; ++k) prow[k] += coef * f.u(k, i);
        }
    }
    return p;
}

Matrix pseudoinverse(const Matrix& w) { return pseudoinverse(svd(w)); }

std::size_t numerical_rank(const Vector& sigma, double rank_tol) {
    if (rank_tol <= 0.0) throw InputError("numerical_rank: rank_tol must be positive");
    if (sigma.empty()) return 0;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (sigma[i] < 0.0) throw InputError("numerical_rank: negative singular value");
        if (i > 0 && sigma[i] > sigma[i - 1])
            throw InputError("numerical_rank: sigma not sorted descending");
    }
    if (sigma[0] == 0.0) return 0;
    std::size_t r = 0;
    while (r < sigma.size() && sigma[r] > rank_tol * sigma[0]) ++r;
    return r;
}

}  // namespace llens
