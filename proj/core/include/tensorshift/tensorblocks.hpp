#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tensorshift/indexcomb.hpp"
#include "tensorshift/weights.hpp"

namespace tensorshift {

enum class Symmetry { Symmetric, Antisymmetric };

/// Norm of the symmetric basis tensor of a class: sqrt(prod mult! / n!).
double sym_basis_norm(const MultiIndexClass& cls);
double sym_basis_norm(const std::vector<int>& sorted_rep);

/// Norm of a wedge basis tensor of n distinct indices: 1/sqrt(n!).
double wedge_basis_norm(int n);

/// One degree block of a symmetric or antisymmetric product of shift powers,
/// in orthonormal coordinates (entries are taken against unit basis vectors,
/// so the largest singular value is the operator norm on the degree subspace).
///
/// Basis tuples are listed in lexicographic order: weakly increasing class
/// representatives for Symmetric, strictly increasing tuples for
/// Antisymmetric. A target degree below reach yields an empty target basis and
/// all-zero columns rather than an error.
struct GradedBlock {
    Symmetry symmetry = Symmetry::Symmetric;
    int source_degree = 0;
    int target_degree = 0;
    std::vector<std::vector<int>> source_basis;
    std::vector<std::vector<int>> target_basis;
    /// Per source ordinal: (target ordinal, value), sorted by target ordinal.
    std::vector<std::vector<std::pair<int, double>>> columns;

    int rows() const { return static_cast<int>(target_basis.size()); }
    int cols() const { return static_cast<int>(source_basis.size()); }
    /// Row-major rows() x cols() dense copy.
    std::vector<double> dense() const;
};

/// Degree-k block of the symmetric product of the shift powers given by l.
GradedBlock build_sym_block(const WeightSequence& w, const ExponentTuple& l, int k);

/// Degree-k block of the antisymmetric product. Shifted tuples with a repeated
/// entry vanish; surviving tuples are sorted and the coefficient picks up the
/// sign of the sorting permutation.
GradedBlock build_wedge_block(const WeightSequence& w, const ExponentTuple& l, int k);

/// Symmetric tensor of finitely supported vectors, stored as one coefficient
/// per class: coeff(<j>) = sum over ordered tuples in the class of
/// prod_r xs[r][j_r].
class SymmetricVectorTensor {
public:
    explicit SymmetricVectorTensor(std::map<std::vector<int>, double> coeffs)
        : coeffs_(std::move(coeffs)) {}

    const std::map<std::vector<int>, double>& coefficients() const { return coeffs_; }
    double coefficient(const std::vector<int>& sorted_rep) const;
    double norm() const;

private:
    std::map<std::vector<int>, double> coeffs_;
};

/// xs[r] is the coefficient vector of the r-th factor (index -> coefficient).
/// At most kMaxTupleLength factors.
SymmetricVectorTensor sym_tensor_vectors(const std::vector<std::vector<double>>& xs);

}  // namespace tensorshift
