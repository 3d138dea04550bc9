#include "zeigen/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "zeigen/kernels.hpp"

namespace zeigen {

namespace detail {

std::size_t linear_index(std::span<const int> index, int dim) {
    std::size_t t = 0;
    for (int v : index) t = t * static_cast<std::size_t>(dim) + static_cast<std::size_t>(v);
    return t;
}

bool next_tuple(std::span<int> index, int dim) {
    for (int k = static_cast<int>(index.size()) - 1; k >= 0; --k) {
        if (++index[k] < dim) return true;
        index[k] = 0;
    }
    return false;
}

bool next_canonical_tuple(std::span<int> index, int dim) {
    const int m = static_cast<int>(index.size());
    for (int k = m - 1; k >= 0; --k) {
        if (index[k] < dim - 1) {
            const int v = index[k] + 1;
            for (int j = k; j < m; ++j) index[j] = v;
            return true;
        }
    }
    return false;
}

} // namespace detail

namespace {

std::string format_tuple_1based(std::span<const int> idx) {
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k) os << ',';
        os << idx[k] + 1;
    }
    os << ')';
    return os.str();
}

void check_finite(const std::vector<double>& coeffs, int order, int dim) {
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
        if (std::isfinite(coeffs[t])) continue;
        std::vector<int> idx(order);
        std::size_t rem = t;
        for (int k = order - 1; k >= 0; --k) {
            idx[k] = static_cast<int>(rem % dim);
            rem /= dim;
        }
        throw std::invalid_argument("tensor entry " + format_tuple_1based(idx) +
                                    " is not finite");
    }
}

void check_length(std::span<const double> x, int dim, const char* op) {
    if (static_cast<int>(x.size()) != dim)
        throw std::invalid_argument(std::string(op) + ": vector length " +
                                    std::to_string(x.size()) + " does not match dimension " +
                                    std::to_string(dim));
}

} // namespace

std::size_t tensor_entry_count(int order, int dim, std::size_t max_entries) {
    if (order < 2) throw std::invalid_argument("tensor order must be at least 2");
    if (dim < 1) throw std::invalid_argument("tensor dimension must be at least 1");
    std::size_t total = 1;
    for (int i = 0; i < order; ++i) {
        if (total > max_entries / static_cast<std::size_t>(dim))
            throw std::invalid_argument(
                "dense tensor of order " + std::to_string(order) + ", dimension " +
                std::to_string(dim) + " exceeds the entry cap of " + std::to_string(max_entries));
        total *= static_cast<std::size_t>(dim);
    }
    return total;
}

SymmetricTensor::SymmetricTensor(int order, int dim, std::vector<double> coeffs)
    : order_(order), dim_(dim), coeffs_(std::move(coeffs)) {}

SymmetricTensor SymmetricTensor::from_symmetric_unchecked(int order, int dim,
                                                          std::vector<double> coeffs,
                                                          std::size_t max_entries) {
    const std::size_t total = tensor_entry_count(order, dim, max_entries);
    if (coeffs.size() != total)
        throw std::invalid_argument("coefficient array has " + std::to_string(coeffs.size()) +
                                    " entries, expected " + std::to_string(total));
    check_finite(coeffs, order, dim);
    return SymmetricTensor(order, dim, std::move(coeffs));
}

SymmetricTensor SymmetricTensor::symmetrized(int order, int dim, std::vector<double> raw,
                                             std::size_t max_entries) {
    const std::size_t total = tensor_entry_count(order, dim, max_entries);
    if (raw.size() != total)
        throw std::invalid_argument("coefficient array has " + std::to_string(raw.size()) +
                                    " entries, expected " + std::to_string(total));
    check_finite(raw, order, dim);

    std::vector<int> canon(order, 0);
    std::vector<int> perm(order);
    do {
        perm.assign(canon.begin(), canon.end());
        const double first = raw[detail::linear_index(perm, dim)];
        double sum = 0.0;
        int count = 0;
        bool uniform = true;
        do {
            const double v = raw[detail::linear_index(perm, dim)];
            sum += v;
            ++count;
            if (v != first) uniform = false;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!uniform) {
            const double mean = sum / count;
            perm.assign(canon.begin(), canon.end());
            do {
                raw[detail::linear_index(perm, dim)] = mean;
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    } while (detail::next_canonical_tuple(canon, dim));

    return SymmetricTensor(order, dim, std::move(raw));
}

double SymmetricTensor::at(std::span<const int> index) const {
    if (static_cast<int>(index.size()) != order_)
        throw std::invalid_argument("at: index arity does not match tensor order");
    for (int v : index)
        if (v < 0 || v >= dim_) throw std::out_of_range("at: index out of range");
    return coeffs_[detail::linear_index(index, dim_)];
}

double SymmetricTensor::axm(std::span<const double> x) const {
    check_length(x, dim_, "axm");
    return kernels::parallel::axm(coeffs_.data(), order_, dim_, x.data());
}

std::vector<double> SymmetricTensor::axm1(std::span<const double> x) const {
    check_length(x, dim_, "axm1");
    std::vector<double> out(dim_);
    kernels::parallel::axm1(coeffs_.data(), order_, dim_, x.data(), out.data());
    return out;
}

DenseMatrix SymmetricTensor::axm2(std::span<const double> x) const {
    check_length(x, dim_, "axm2");
    DenseMatrix out(dim_, dim_);
    kernels::parallel::axm2(coeffs_.data(), order_, dim_, x.data(), out.a.data());
    return out;
}

SymmetricTensor SymmetricTensor::negated() const {
    std::vector<double> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
    return SymmetricTensor(order_, dim_, std::move(c));
}

bool is_fully_symmetric(const SymmetricTensor& t) {
    const int m = t.order();
    const int n = t.dim();
    std::vector<int> canon(m, 0);
    std::vector<int> perm(m);
    do {
        perm.assign(canon.begin(), canon.end());
        const double first = t.coeffs()[detail::linear_index(perm, n)];
        do {
            if (t.coeffs()[detail::linear_index(perm, n)] != first) return false;
        } while (std::next_permutation(perm.begin(), perm.end()));
    } while (detail::next_canonical_tuple(canon, n));
    return true;
}

} // namespace zeigen
