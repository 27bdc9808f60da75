#pragma once

// Test-only reference machinery, kept independent of the block construction it
// checks: shift operators as dense truncated matrices, tensor products applied
// mode by mode, and explicit symmetrizer/antisymmetrizer projections.

#include <vector>

#include "tensorshift/weights.hpp"

namespace oracle {

struct Dense {
    int m = 0;
    std::vector<double> a;  // row-major m x m

    Dense() = default;
    explicit Dense(int size) : m(size), a(static_cast<size_t>(size) * size, 0.0) {}
    double& at(int r, int c) { return a[static_cast<size_t>(r) * m + c]; }
    double at(int r, int c) const { return a[static_cast<size_t>(r) * m + c]; }
};

Dense shift_matrix(const tensorshift::WeightSequence& w, int m);
Dense matmul(const Dense& x, const Dense& y);
Dense transpose(const Dense& x);
/// S^l for l >= 0, (S^T)^{|l|} for l < 0, on the first m basis vectors.
Dense shift_power(const tensorshift::WeightSequence& w, int l, int m);

/// Applies op along one tensor mode of a dense vector over {0..m-1}^n.
void mode_multiply(std::vector<double>& v, const Dense& op, int mode, int n, int m);

/// (1/n!) sum over permutations of the tensor products of the factors.
std::vector<double> apply_sym_operator(const std::vector<Dense>& factors,
                                       const std::vector<double>& vec, int n, int m);

/// Sum over permutations of (sign ^ anti) e_{tuple permuted}; not normalized.
std::vector<double> symmetrized_elementary(const std::vector<int>& tuple, int n, int m,
                                           bool anti);

/// Orthogonal projection onto the (anti)symmetric subspace.
std::vector<double> project_subspace(const std::vector<double>& vec, int n, int m, bool anti);

struct CompressedBlock {
    std::vector<std::vector<int>> source_basis;
    std::vector<std::vector<int>> target_basis;
    std::vector<double> entries;  // row-major rows x cols
    double residual = 0.0;        // worst unexplained image mass across sources

    int rows() const { return static_cast<int>(target_basis.size()); }
    int cols() const { return static_cast<int>(source_basis.size()); }
};

/// Compression of the symmetrized tensor-product operator to the degree-k
/// (anti)symmetric subspace, computed entirely in the truncated full tensor
/// space.
CompressedBlock compressed_block(const tensorshift::WeightSequence& w,
                                 const std::vector<int>& l, int k, bool anti);

std::vector<std::vector<int>> weakly_increasing_tuples(int k, int n);
std::vector<std::vector<int>> strictly_increasing_tuples(int k, int n, int d);
long long count_weakly_increasing(int k, int n);
long long count_ordered(int k, int n);

/// Largest singular value of a dense rows x cols matrix by long power
/// iteration on the Gram matrix; deterministic.
double dense_sigma_max(const std::vector<double>& a, int rows, int cols);

/// Norm of x_1 (.) ... (.) x_n evaluated in the full tensor space.
double full_space_sym_tensor_norm(const std::vector<std::vector<double>>& xs);

}  // namespace oracle
