#pragma once

#include <optional>
#include <span>
#include <vector>

namespace zeigen {

/// Small dense row-major matrix. Empty (0x0) matrices are legal; they show up
/// as the reduced Newton system on the 1-dimensional sphere.
struct DenseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;

    DenseMatrix() = default;
    DenseMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

    static DenseMatrix identity(int n);

    double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    bool operator==(const DenseMatrix&) const = default;
};

DenseMatrix matmul(const DenseMatrix& A, const DenseMatrix& B);
std::vector<double> matvec(const DenseMatrix& A, std::span<const double> x);
/// A^T x.
std::vector<double> matvec_transpose(const DenseMatrix& A, std::span<const double> x);
DenseMatrix transpose(const DenseMatrix& A);

/// Solve A z = b by row-pivoted Gaussian elimination.
///
/// Returns nullopt (no solution signal) when a pivot falls below
/// 1e-14 * max|A_ij|, i.e. the matrix is singular to working precision.
/// A 0x0 system yields the empty vector.
std::optional<std::vector<double>> solve_linear(DenseMatrix A, std::vector<double> b);

/// True iff the symmetric part (A+A^T)/2 factors with every pivot above
/// 1e-12 * (trace/k). The empty matrix is positive definite.
bool is_positive_definite(DenseMatrix A);

} // namespace zeigen
