#pragma once

#include <cstddef>

// Dense contraction kernels for order-m, dimension-n coefficient arrays
// (n^m doubles, row-major multi-index layout, 0-based indices).
//
// kernels::serial holds the plain reference implementations: one flat walk
// over every index tuple with the product recomputed per tuple. They exist
// to be obviously correct and are what the parallel kernels are tested and
// benchmarked against.
//
// kernels::parallel holds the OpenMP kernels used by SymmetricTensor. Work
// is split by leading index slab with per-slab partial sums combined in a
// fixed order, so results are bitwise independent of the thread count.

namespace zeigen::kernels {

/// n^e as size_t; the caller guarantees the product fits.
std::size_t ipow(int n, int e);

namespace serial {

/// Full contraction: sum of a[i1..im] * x[i1] * ... * x[im].
double axm(const double* a, int order, int dim, const double* x);

/// Vector contraction: out[i] = sum over (i2..im) of a[i,i2..im] * x[i2]...x[im].
void axm1(const double* a, int order, int dim, const double* x, double* out);

/// Matrix contraction: out[i*dim+j] = sum over (i3..im) of a[i,j,i3..im] * x[i3]...x[im].
void axm2(const double* a, int order, int dim, const double* x, double* out);

} // namespace serial

namespace parallel {

double axm(const double* a, int order, int dim, const double* x);
void axm1(const double* a, int order, int dim, const double* x, double* out);
void axm2(const double* a, int order, int dim, const double* x, double* out);

} // namespace parallel

} // namespace zeigen::kernels
