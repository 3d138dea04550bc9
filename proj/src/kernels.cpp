#include "zeigen/kernels.hpp"

#include <vector>

namespace zeigen::kernels {

std::size_t ipow(int n, int e) {
    std::size_t p = 1;
    for (int i = 0; i < e; ++i) p *= static_cast<std::size_t>(n);
    return p;
}

namespace {

// Sum of prefix * a[t] * x[t1]*...*x[t_levels] over the dense block of
// n^levels entries at `a`. The prefix product is threaded down the recursion
// so every term carries the full m-fold product; the innermost loop runs over
// contiguous memory.
double block_contract(const double* a, int levels, int n, const double* x, double prefix) {
    if (levels == 0) return prefix * a[0];
    if (levels == 1) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) acc += prefix * a[i] * x[i];
        return acc;
    }
    const std::size_t stride = ipow(n, levels - 1);
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
        acc += block_contract(a + static_cast<std::size_t>(i) * stride, levels - 1, n, x,
                              prefix * x[i]);
    return acc;
}

// Below this many coefficient reads a parallel region costs more than it saves.
constexpr std::size_t kParallelCutoff = std::size_t{1} << 15;

} // namespace

namespace serial {

double axm(const double* a, int order, int dim, const double* x) {
    const std::size_t total = ipow(dim, order);
    std::vector<int> idx(order, 0);
    double acc = 0.0;
    for (std::size_t t = 0; t < total; ++t) {
        double p = a[t];
        for (int k = 0; k < order; ++k) p *= x[idx[k]];
        acc += p;
        for (int k = order - 1; k >= 0; --k) {
            if (++idx[k] < dim) break;
            idx[k] = 0;
        }
    }
    return acc;
}

void axm1(const double* a, int order, int dim, const double* x, double* out) {
    const std::size_t total = ipow(dim, order);
    std::vector<int> idx(order, 0);
    for (int i = 0; i < dim; ++i) out[i] = 0.0;
    for (std::size_t t = 0; t < total; ++t) {
        double p = a[t];
        for (int k = 1; k < order; ++k) p *= x[idx[k]];
        out[idx[0]] += p;
        for (int k = order - 1; k >= 0; --k) {
            if (++idx[k] < dim) break;
            idx[k] = 0;
        }
    }
}

void axm2(const double* a, int order, int dim, const double* x, double* out) {
    const std::size_t total = ipow(dim, order);
    std::vector<int> idx(order, 0);
    const std::size_t cells = static_cast<std::size_t>(dim) * dim;
    for (std::size_t c = 0; c < cells; ++c) out[c] = 0.0;
    for (std::size_t t = 0; t < total; ++t) {
        double p = a[t];
        for (int k = 2; k < order; ++k) p *= x[idx[k]];
        out[static_cast<std::size_t>(idx[0]) * dim + idx[1]] += p;
        for (int k = order - 1; k >= 0; --k) {
            if (++idx[k] < dim) break;
            idx[k] = 0;
        }
    }
}

} // namespace serial

namespace parallel {

double axm(const double* a, int order, int dim, const double* x) {
    const std::size_t total = ipow(dim, order);
    const std::size_t stride = total / static_cast<std::size_t>(dim);
    std::vector<double> partial(dim);
#pragma omp parallel for schedule(static) if (total >= kParallelCutoff)
    for (int i = 0; i < dim; ++i)
        partial[i] = block_contract(a + static_cast<std::size_t>(i) * stride, order - 1, dim, x,
                                    x[i]);
    double acc = 0.0;
    for (int i = 0; i < dim; ++i) acc += partial[i];
    return acc;
}

void axm1(const double* a, int order, int dim, const double* x, double* out) {
    const std::size_t total = ipow(dim, order);
    const std::size_t stride = total / static_cast<std::size_t>(dim);
#pragma omp parallel for schedule(static) if (total >= kParallelCutoff)
    for (int i = 0; i < dim; ++i)
        out[i] = block_contract(a + static_cast<std::size_t>(i) * stride, order - 1, dim, x, 1.0);
}

void axm2(const double* a, int order, int dim, const double* x, double* out) {
    const std::size_t total = ipow(dim, order);
    const long long cells = static_cast<long long>(dim) * dim;
    const std::size_t stride = total / static_cast<std::size_t>(cells);
#pragma omp parallel for schedule(static) if (total >= kParallelCutoff)
    for (long long c = 0; c < cells; ++c)
        out[c] = block_contract(a + static_cast<std::size_t>(c) * stride, order - 2, dim, x, 1.0);
}

} // namespace parallel

} // namespace zeigen::kernels
