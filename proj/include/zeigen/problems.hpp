#pragma once

#include <string>

#include "zeigen/tensor.hpp"

namespace zeigen {

/// The five benchmark tensors plus file- and matrix-backed problems.
/// P1 (order 4, n = 2) and P2 (order 4, n = 3) have fixed sizes; P3, P4, P5
/// (orders 3, 4, 5) take the dimension as a parameter.
enum class ProblemId { P1, P2, P3, P4, P5, File, Matrix };

struct ProblemSpec {
    ProblemId id = ProblemId::P1;
    int dim = 0;        // ignored for File/Matrix
    std::string path;   // File only
    DenseMatrix matrix; // Matrix only; square, used as an order-2 tensor

    static ProblemSpec p1();
    static ProblemSpec p2();
    static ProblemSpec p3(int n);
    static ProblemSpec p4(int n);
    static ProblemSpec p5(int n);
    static ProblemSpec file(std::string path);
    static ProblemSpec from_matrix(DenseMatrix m);
};

/// "P1".."P5", "file:<path>", "matrix".
std::string problem_label(const ProblemSpec& spec);

/// Builds the tensor for a spec. P1/P2 reject a dimension override; P3-P5
/// require dim >= 1. Matrix coefficients are symmetrized on entry.
SymmetricTensor make_problem(const ProblemSpec& spec,
                             std::size_t max_entries = kDefaultMaxEntries);

} // namespace zeigen
