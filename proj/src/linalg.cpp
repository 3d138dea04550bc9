#include "zeigen/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace zeigen {

DenseMatrix DenseMatrix::identity(int n) {
    DenseMatrix I(n, n);
    for (int i = 0; i < n; ++i) I(i, i) = 1.0;
    return I;
}

DenseMatrix matmul(const DenseMatrix& A, const DenseMatrix& B) {
    if (A.cols != B.rows) throw std::invalid_argument("matmul: inner dimensions differ");
    DenseMatrix C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i) {
        for (int k = 0; k < A.cols; ++k) {
            const double aik = A(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < B.cols; ++j) C(i, j) += aik * B(k, j);
        }
    }
    return C;
}

std::vector<double> matvec(const DenseMatrix& A, std::span<const double> x) {
    if (static_cast<int>(x.size()) != A.cols) throw std::invalid_argument("matvec: size mismatch");
    std::vector<double> y(A.rows, 0.0);
    for (int i = 0; i < A.rows; ++i) {
        double s = 0.0;
        for (int j = 0; j < A.cols; ++j) s += A(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

std::vector<double> matvec_transpose(const DenseMatrix& A, std::span<const double> x) {
    if (static_cast<int>(x.size()) != A.rows)
        throw std::invalid_argument("matvec_transpose: size mismatch");
    std::vector<double> y(A.cols, 0.0);
    for (int i = 0; i < A.rows; ++i) {
        const double xi = x[i];
        for (int j = 0; j < A.cols; ++j) y[j] += A(i, j) * xi;
    }
    return y;
}

DenseMatrix transpose(const DenseMatrix& A) {
    DenseMatrix T(A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) T(j, i) = A(i, j);
    return T;
}

std::optional<std::vector<double>> solve_linear(DenseMatrix A, std::vector<double> b) {
    if (A.rows != A.cols) throw std::invalid_argument("solve_linear: matrix not square");
    const int n = A.rows;
    if (static_cast<int>(b.size()) != n)
        throw std::invalid_argument("solve_linear: right-hand side size mismatch");
    if (n == 0) return std::vector<double>{};

    double amax = 0.0;
    for (double v : A.a) amax = std::max(amax, std::abs(v));
    if (amax == 0.0 || !std::isfinite(amax)) return std::nullopt;
    const double pivot_floor = 1e-14 * amax;

    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(A(i, k)) > std::abs(A(piv, k))) piv = i;
        if (std::abs(A(piv, k)) < pivot_floor) return std::nullopt;
        if (piv != k) {
            for (int j = k; j < n; ++j) std::swap(A(k, j), A(piv, j));
            std::swap(b[k], b[piv]);
        }
        const double inv = 1.0 / A(k, k);
        for (int i = k + 1; i < n; ++i) {
            const double f = A(i, k) * inv;
            if (f == 0.0) continue;
            A(i, k) = 0.0;
            for (int j = k + 1; j < n; ++j) A(i, j) -= f * A(k, j);
            b[i] -= f * b[k];
        }
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = b[i];
        for (int j = i + 1; j < n; ++j) s -= A(i, j) * b[j];
        b[i] = s / A(i, i);
    }
    return b;
}

bool is_positive_definite(DenseMatrix A) {
    if (A.rows != A.cols) throw std::invalid_argument("is_positive_definite: matrix not square");
    const int n = A.rows;
    if (n == 0) return true;

    // Work on the symmetric part; floating-point assembly of nominally
    // symmetric matrices is not exactly symmetric.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double s = 0.5 * (A(i, j) + A(j, i));
            A(i, j) = s;
            A(j, i) = s;
        }

    double trace = 0.0;
    for (int i = 0; i < n; ++i) trace += A(i, i);
    if (!(trace > 0.0) || !std::isfinite(trace)) return false;
    const double pivot_floor = 1e-12 * (trace / n);

    // Unpivoted symmetric elimination; all pivots must clear the floor.
    for (int k = 0; k < n; ++k) {
        const double d = A(k, k);
        if (!(d > pivot_floor)) return false;
        for (int i = k + 1; i < n; ++i) {
            const double f = A(i, k) / d;
            for (int j = k + 1; j < n; ++j) A(i, j) -= f * A(k, j);
        }
    }
    return true;
}

} // namespace zeigen
