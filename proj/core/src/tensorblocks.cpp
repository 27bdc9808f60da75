#include "tensorshift/tensorblocks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace tensorshift {

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/// Sorts v in place and returns the sign of the sorting permutation; 0 when a
/// repeated entry makes the wedge vanish.
int sort_with_sign(std::vector<int>& v) {
    int sign = 1;
    for (size_t a = 0; a + 1 < v.size(); ++a) {
        size_t best = a;
        for (size_t b = a + 1; b < v.size(); ++b) {
            if (v[b] < v[best]) best = b;
        }
        if (best != a) {
            std::swap(v[a], v[best]);
            sign = -sign;
        }
    }
    for (size_t a = 1; a < v.size(); ++a) {
        if (v[a] == v[a - 1]) return 0;
    }
    return sign;
}

}  // namespace

double sym_basis_norm(const std::vector<int>& sorted_rep) {
    const int n = static_cast<int>(sorted_rep.size());
    double mult_fact = 1.0;
    int run = 1;
    for (size_t i = 1; i < sorted_rep.size(); ++i) {
        if (sorted_rep[i] == sorted_rep[i - 1]) {
            ++run;
            mult_fact *= run;
        } else {
            run = 1;
        }
    }
    return std::sqrt(mult_fact / factorial(n));
}

double sym_basis_norm(const MultiIndexClass& cls) { return sym_basis_norm(cls.rep()); }

double wedge_basis_norm(int n) {
    if (n < 1) throw std::invalid_argument("wedge_basis_norm needs n >= 1");
    return 1.0 / std::sqrt(factorial(n));
}

std::vector<double> GradedBlock::dense() const {
    std::vector<double> out(static_cast<size_t>(rows()) * static_cast<size_t>(cols()), 0.0);
    for (int c = 0; c < cols(); ++c) {
        for (const auto& [r, v] : columns[static_cast<size_t>(c)]) {
            out[static_cast<size_t>(r) * static_cast<size_t>(cols()) + static_cast<size_t>(c)] = v;
        }
    }
    return out;
}

GradedBlock build_sym_block(const WeightSequence& w, const ExponentTuple& l, int k) {
    if (k < 0) throw std::invalid_argument("block source degree must be nonnegative");
    const int n = l.size();

    GradedBlock block;
    block.symmetry = Symmetry::Symmetric;
    block.source_degree = k;
    block.target_degree = k + l.signed_sum();

    for (const auto& cls : enumerate_classes(k, n)) block.source_basis.push_back(cls.rep());
    std::map<std::vector<int>, int> target_ordinal;
    if (block.target_degree >= 0) {
        for (const auto& cls : enumerate_classes(block.target_degree, n)) {
            target_ordinal.emplace(cls.rep(), static_cast<int>(block.target_basis.size()));
            block.target_basis.push_back(cls.rep());
        }
    }

    const auto arrangements = l.distinct_arrangements();
    // Each arrangement stands for n!/M permutations, so its weight under the
    // 1/n! average is 1/M.
    const double arr_weight = 1.0 / static_cast<double>(l.arrangement_count());
    BudgetMeter meter;

    block.columns.resize(block.source_basis.size());
    for (size_t c = 0; c < block.source_basis.size(); ++c) {
        const auto& src = block.source_basis[c];
        std::map<int, double> accum;
        for (const auto& arr : arrangements) {
            meter.charge();
            std::vector<int> v(src);
            bool valid = true;
            double beta = 1.0;
            for (int r = 0; r < n; ++r) {
                const int step = arr[static_cast<size_t>(r)];
                beta *= window_product(w, src[static_cast<size_t>(r)], step);
                v[static_cast<size_t>(r)] += step;
                if (v[static_cast<size_t>(r)] < 0) {
                    valid = false;
                    break;
                }
            }
            if (!valid) continue;
            std::sort(v.begin(), v.end());
            accum[target_ordinal.at(v)] += arr_weight * beta;
        }
        const double src_norm = sym_basis_norm(src);
        auto& col = block.columns[c];
        for (const auto& [ord, raw] : accum) {
            const double value =
                raw * sym_basis_norm(block.target_basis[static_cast<size_t>(ord)]) / src_norm;
            if (value != 0.0) col.emplace_back(ord, value);
        }
    }
    return block;
}

GradedBlock build_wedge_block(const WeightSequence& w, const ExponentTuple& l, int k) {
    if (k < 0) throw std::invalid_argument("block source degree must be nonnegative");
    const int n = l.size();

    GradedBlock block;
    block.symmetry = Symmetry::Antisymmetric;
    block.source_degree = k;
    block.target_degree = k + l.signed_sum();

    for (const auto& t : enumerate_strict_tuples(k, n, 0)) block.source_basis.push_back(t.entries);
    std::map<std::vector<int>, int> target_ordinal;
    if (block.target_degree >= 0) {
        for (const auto& t : enumerate_strict_tuples(block.target_degree, n, 0)) {
            target_ordinal.emplace(t.entries, static_cast<int>(block.target_basis.size()));
            block.target_basis.push_back(t.entries);
        }
    }

    const auto arrangements = l.distinct_arrangements();
    const double arr_weight = 1.0 / static_cast<double>(l.arrangement_count());
    BudgetMeter meter;

    block.columns.resize(block.source_basis.size());
    for (size_t c = 0; c < block.source_basis.size(); ++c) {
        const auto& src = block.source_basis[c];
        std::map<int, double> accum;
        for (const auto& arr : arrangements) {
            meter.charge();
            std::vector<int> v(src);
            bool valid = true;
            double beta = 1.0;
            for (int r = 0; r < n; ++r) {
                const int step = arr[static_cast<size_t>(r)];
                beta *= window_product(w, src[static_cast<size_t>(r)], step);
                v[static_cast<size_t>(r)] += step;
                if (v[static_cast<size_t>(r)] < 0) {
                    valid = false;
                    break;
                }
            }
            if (!valid) continue;
            const int sign = sort_with_sign(v);
            if (sign == 0) continue;  // repeated entry annihilates
            accum[target_ordinal.at(v)] += arr_weight * beta * sign;
        }
        // All wedge basis norms agree, so the orthonormal conversion is a no-op.
        auto& col = block.columns[c];
        for (const auto& [ord, raw] : accum) {
            if (raw != 0.0) col.emplace_back(ord, raw);
        }
    }
    return block;
}

double SymmetricVectorTensor::coefficient(const std::vector<int>& sorted_rep) const {
    const auto it = coeffs_.find(sorted_rep);
    return it == coeffs_.end() ? 0.0 : it->second;
}

double SymmetricVectorTensor::norm() const {
    double s = 0.0;
    for (const auto& [rep, c] : coeffs_) {
        const double bn = sym_basis_norm(rep);
        s += c * c * bn * bn;
    }
    return std::sqrt(s);
}

SymmetricVectorTensor sym_tensor_vectors(const std::vector<std::vector<double>>& xs) {
    const int n = static_cast<int>(xs.size());
    if (n < 1 || n > kMaxTupleLength) {
        throw std::invalid_argument("sym_tensor_vectors supports 1.." +
                                    std::to_string(kMaxTupleLength) + " factors");
    }
    std::map<std::vector<int>, double> coeffs;
    std::vector<int> tuple(static_cast<size_t>(n), 0);
    // Walk every ordered tuple over the supports.
    const std::function<void(int, double)> walk = [&](int r, double prod) {
        if (prod == 0.0) return;
        if (r == n) {
            std::vector<int> rep(tuple);
            std::sort(rep.begin(), rep.end());
            coeffs[rep] += prod;
            return;
        }
        for (size_t j = 0; j < xs[static_cast<size_t>(r)].size(); ++j) {
            tuple[static_cast<size_t>(r)] = static_cast<int>(j);
            walk(r + 1, prod * xs[static_cast<size_t>(r)][j]);
        }
    };
    walk(0, 1.0);
    // Exact zeros (including cancellations) are dropped.
    for (auto it = coeffs.begin(); it != coeffs.end();) {
        it = it->second == 0.0 ? coeffs.erase(it) : std::next(it);
    }
    return SymmetricVectorTensor(std::move(coeffs));
}

}  // namespace tensorshift
