#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "zeigen/linalg.hpp"

namespace zeigen {

/// Dense full storage is capped at this many coefficients unless the caller
/// raises the limit explicitly.
inline constexpr std::size_t kDefaultMaxEntries = 100'000'000;

/// Validates order >= 2, dim >= 1 and that dim^order fits under max_entries;
/// returns dim^order.
std::size_t tensor_entry_count(int order, int dim, std::size_t max_entries = kDefaultMaxEntries);

/// Dense order-m, dimension-n symmetric tensor: coefficients invariant under
/// every permutation of their indices. Immutable after construction and safe
/// to share across threads.
///
/// Storage is the full n^m array in row-major multi-index order, 0-based
/// internally; every user-facing index (file format, generators, error
/// messages) is 1-based.
class SymmetricTensor {
public:
    /// Builds a symmetric tensor by averaging `raw` over every permutation
    /// orbit. Orbits whose entries are already identical are left untouched
    /// bitwise. Rejects non-finite entries, naming the offending index.
    static SymmetricTensor symmetrized(int order, int dim, std::vector<double> raw,
                                       std::size_t max_entries = kDefaultMaxEntries);

    /// Wraps coefficients the caller guarantees to be fully symmetric
    /// (generators, the file loader). Only finiteness is checked.
    static SymmetricTensor from_symmetric_unchecked(int order, int dim,
                                                    std::vector<double> coeffs,
                                                    std::size_t max_entries = kDefaultMaxEntries);

    int order() const { return order_; }
    int dim() const { return dim_; }
    const std::vector<double>& coeffs() const { return coeffs_; }

    /// Coefficient at a 0-based multi-index.
    double at(std::span<const int> index) const;

    /// The homogeneous form A x^m.
    double axm(std::span<const double> x) const;
    /// The vector A x^{m-1}; satisfies dot(x, axm1(x)) == axm(x).
    std::vector<double> axm1(std::span<const double> x) const;
    /// The matrix A x^{m-2}; symmetric, and axm2(x) * x == axm1(x).
    DenseMatrix axm2(std::span<const double> x) const;

    SymmetricTensor negated() const;

    bool operator==(const SymmetricTensor&) const = default;

private:
    SymmetricTensor(int order, int dim, std::vector<double> coeffs);

    int order_ = 0;
    int dim_ = 0;
    std::vector<double> coeffs_;
};

/// Exhaustive symmetry check: every permutation orbit is constant. Meant for
/// tests and small tensors; cost is on the order of m! per orbit.
bool is_fully_symmetric(const SymmetricTensor& t);

namespace detail {

/// Linear offset of a 0-based multi-index tuple.
std::size_t linear_index(std::span<const int> index, int dim);

/// Advances a 0-based odometer over all dim^order tuples; false when exhausted.
bool next_tuple(std::span<int> index, int dim);

/// Advances a 0-based non-decreasing (canonical) tuple; false when exhausted.
bool next_canonical_tuple(std::span<int> index, int dim);

} // namespace detail

} // namespace zeigen
