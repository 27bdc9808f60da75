#include "tensorshift/specnorm.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace tensorshift {

namespace {

/// Largest eigenvalue of a symmetric matrix by cyclic Jacobi sweeps.
/// Deterministic sweep order; converges when the off-diagonal mass is
/// negligible against the diagonal scale.
double jacobi_max_eigenvalue(std::vector<double> a, int m) {
    if (m == 0) return 0.0;
    auto at = [&](int r, int c) -> double& { return a[static_cast<size_t>(r) * m + c]; };
    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0, diag = 0.0;
        for (int r = 0; r < m; ++r) {
            diag += std::abs(at(r, r));
            for (int c = r + 1; c < m; ++c) off += 2.0 * at(r, c) * at(r, c);
        }
        if (off <= 1e-30 * std::max(diag * diag, 1e-300)) break;
        for (int p = 0; p < m - 1; ++p) {
            for (int q = p + 1; q < m; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double app = at(p, p);
                const double aqq = at(q, q);
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int r = 0; r < m; ++r) {
                    const double arp = at(r, p);
                    const double arq = at(r, q);
                    at(r, p) = c * arp - s * arq;
                    at(r, q) = s * arp + c * arq;
                }
                for (int r = 0; r < m; ++r) {
                    const double apr = at(p, r);
                    const double aqr = at(q, r);
                    at(p, r) = c * apr - s * aqr;
                    at(q, r) = s * apr + c * aqr;
                }
            }
        }
    }
    double best = at(0, 0);
    for (int r = 1; r < m; ++r) best = std::max(best, at(r, r));
    return best;
}

/// Gram matrix on the smaller side of the block.
std::vector<double> gram_matrix(const GradedBlock& b, bool on_columns) {
    const int rows = b.rows();
    const int cols = b.cols();
    if (on_columns) {
        std::vector<double> g(static_cast<size_t>(cols) * cols, 0.0);
        // Dense intermediate of the columns keeps the pairing O(nnz * cols).
        std::vector<double> col(static_cast<size_t>(rows), 0.0);
        for (int c = 0; c < cols; ++c) {
            for (const auto& [r, v] : b.columns[static_cast<size_t>(c)]) {
                col[static_cast<size_t>(r)] = v;
            }
            for (int c2 = c; c2 < cols; ++c2) {
                double dot = 0.0;
                for (const auto& [r, v] : b.columns[static_cast<size_t>(c2)]) {
                    dot += col[static_cast<size_t>(r)] * v;
                }
                g[static_cast<size_t>(c) * cols + c2] = dot;
                g[static_cast<size_t>(c2) * cols + c] = dot;
            }
            for (const auto& [r, v] : b.columns[static_cast<size_t>(c)]) {
                col[static_cast<size_t>(r)] = 0.0;
            }
        }
        return g;
    }
    std::vector<double> g(static_cast<size_t>(rows) * rows, 0.0);
    for (int c = 0; c < cols; ++c) {
        const auto& column = b.columns[static_cast<size_t>(c)];
        for (const auto& [r1, v1] : column) {
            for (const auto& [r2, v2] : column) {
                g[static_cast<size_t>(r1) * rows + r2] += v1 * v2;
            }
        }
    }
    return g;
}

/// y = (B^T B) v using the sparse columns.
void apply_gram(const GradedBlock& b, const std::vector<double>& v, std::vector<double>& mid,
                std::vector<double>& y) {
    std::fill(mid.begin(), mid.end(), 0.0);
    for (int c = 0; c < b.cols(); ++c) {
        const double vc = v[static_cast<size_t>(c)];
        if (vc == 0.0) continue;
        for (const auto& [r, val] : b.columns[static_cast<size_t>(c)]) {
            mid[static_cast<size_t>(r)] += val * vc;
        }
    }
    for (int c = 0; c < b.cols(); ++c) {
        double s = 0.0;
        for (const auto& [r, val] : b.columns[static_cast<size_t>(c)]) {
            s += val * mid[static_cast<size_t>(r)];
        }
        y[static_cast<size_t>(c)] = s;
    }
}

}  // namespace

SvResult largest_singular_value(const GradedBlock& block, const SvOptions& opt) {
    const int rows = block.rows();
    const int cols = block.cols();
    if (rows == 0 || cols == 0) return {0.0, 0};
    for (const auto& col : block.columns) {
        for (const auto& [r, v] : col) {
            if (!std::isfinite(v)) throw std::domain_error("block entry is not finite");
        }
    }
    if (std::max(rows, cols) <= opt.dense_threshold) {
        const bool on_columns = cols <= rows;
        const int m = on_columns ? cols : rows;
        const double lam = jacobi_max_eigenvalue(gram_matrix(block, on_columns), m);
        return {std::sqrt(std::max(lam, 0.0)), 0};
    }

    std::vector<double> v(static_cast<size_t>(cols), 1.0 / std::sqrt(static_cast<double>(cols)));
    std::vector<double> mid(static_cast<size_t>(rows), 0.0);
    std::vector<double> y(static_cast<size_t>(cols), 0.0);

    auto rayleigh = [&](const std::vector<double>& x) {
        apply_gram(block, x, mid, y);
        double r = 0.0;
        for (size_t i = 0; i < y.size(); ++i) r += x[i] * y[i];
        return r;
    };

    double rho = rayleigh(v);
    int iterations = 1;
    if (rho == 0.0) {
        // All-ones start lies in the kernel; fall back to a seeded vector.
        std::mt19937_64 rng(0x7461696Cull);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        double norm2 = 0.0;
        for (auto& x : v) {
            x = dist(rng);
            norm2 += x * x;
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (auto& x : v) x *= inv;
        rho = rayleigh(v);
        ++iterations;
        if (rho == 0.0) return {0.0, iterations};
    }

    for (; iterations < opt.max_iter; ++iterations) {
        double norm2 = 0.0;
        for (double x : y) norm2 += x * x;
        if (norm2 == 0.0) break;
        const double inv = 1.0 / std::sqrt(norm2);
        for (size_t i = 0; i < v.size(); ++i) v[i] = y[i] * inv;
        const double next = rayleigh(v);
        const double prev = rho;
        rho = next;
        if (std::abs(next - prev) < opt.tol) {
            ++iterations;
            break;
        }
    }
    return {std::sqrt(std::max(rho, 0.0)), iterations};
}

SvResult largest_singular_value(const GradedBlock& block, double tol, int max_iter) {
    SvOptions opt;
    opt.tol = tol;
    opt.max_iter = max_iter;
    return largest_singular_value(block, opt);
}

NormProfile norm_profile(const WeightSequence& w, const ExponentTuple& l, Symmetry symmetry,
                         int k_max, const SvOptions& opt) {
    if (k_max < 0) throw std::invalid_argument("k_max must be nonnegative");
    NormProfile profile;
    profile.symmetry = symmetry;
    profile.exponents = l.entries();
    profile.weight_desc = w.description();
    profile.tol = opt.tol;
    profile.product_of_power_norms = full_tensor_norm(w, l);
    profile.limit_prediction = std::pow(w.limit(), l.abs_sum());

    for (int k = 0; k <= k_max; ++k) {
        const GradedBlock block = symmetry == Symmetry::Symmetric
                                      ? build_sym_block(w, l, k)
                                      : build_wedge_block(w, l, k);
        const SvResult sv = largest_singular_value(block, opt);
        profile.rows.push_back({k, block.cols(), block.rows(), sv.value, sv.iterations});
        if (sv.value > profile.max_norm) {
            profile.max_norm = sv.value;
            profile.argmax_k = k;
        }
    }
    return profile;
}

double full_tensor_norm(const WeightSequence& w, const ExponentTuple& l) {
    double p = 1.0;
    for (int e : l.entries()) p *= power_norm(w, e);
    return p;
}

}  // namespace tensorshift
