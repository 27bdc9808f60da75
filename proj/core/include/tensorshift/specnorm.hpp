#pragma once

#include <string>
#include <vector>

#include "tensorshift/tensorblocks.hpp"
#include "tensorshift/weights.hpp"

namespace tensorshift {

struct SvOptions {
    double tol = 1e-10;
    int max_iter = 10000;
    /// Blocks with max dimension at or below this are decomposed densely
    /// (cyclic Jacobi on the Gram matrix); larger blocks use deterministic
    /// power iteration started from the normalized all-ones vector.
    int dense_threshold = 512;
};

struct SvResult {
    double value = 0.0;
    int iterations = 0;  // 0 for the dense path and for empty blocks
};

/// Largest singular value of a block. Deterministic: identical inputs give
/// bit-identical results on one platform. Empty blocks give 0; non-finite
/// entries are rejected.
SvResult largest_singular_value(const GradedBlock& block, const SvOptions& opt = {});
SvResult largest_singular_value(const GradedBlock& block, double tol, int max_iter);

struct NormProfileRow {
    int k = 0;
    int dim_src = 0;
    int dim_tgt = 0;
    double norm = 0.0;
    int iterations = 0;
};

/// Per-degree block norms for k = 0..k_max. The operator is the direct sum of
/// its degree blocks, so the supremum of block norms estimates the operator
/// norm from below; product_of_power_norms bounds it from above.
struct NormProfile {
    Symmetry symmetry = Symmetry::Symmetric;
    std::vector<int> exponents;
    std::string weight_desc;
    std::vector<NormProfileRow> rows;
    double max_norm = 0.0;
    int argmax_k = 0;
    double product_of_power_norms = 0.0;
    double limit_prediction = 0.0;  // limit(w)^abs_sum(l)
    double tol = 0.0;
};

NormProfile norm_profile(const WeightSequence& w, const ExponentTuple& l,
                         Symmetry symmetry, int k_max, const SvOptions& opt = {});

/// Norm of the full tensor product: the product of the factor norms.
double full_tensor_norm(const WeightSequence& w, const ExponentTuple& l);

}  // namespace tensorshift
