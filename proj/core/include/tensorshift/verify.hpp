#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tensorshift/specnorm.hpp"

namespace tensorshift {

enum class Verdict { Pass, Fail, NotApplicable };

struct Assertion {
    std::string name;
    Verdict verdict = Verdict::Pass;
    double lhs = 0.0;
    double rhs = 0.0;
    std::string detail;
};

/// Outcome of a verification scenario. Inputs embed every tolerance and seed,
/// so each verdict is recomputable from the serialized report alone.
struct VerificationReport {
    std::string scenario;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<std::pair<std::string, double>> quantities;
    std::vector<Assertion> assertions;

    void add_input(std::string name, std::string value);
    void add_quantity(std::string name, double value);
    void add_assertion(std::string name, bool passed, double lhs, double rhs,
                       std::string detail = {});
    void add_not_applicable(std::string name, std::string detail);
    bool all_passed() const;
};

struct TestVectorBound {
    double image_norm = 0.0;      // norm of the block image of the uniform unit vector
    double analytic_floor = 0.0;  // sqrt(a_tilde / P(k,n)) * (1-eps)^abs_sum(l)
    long long a_tilde = 0;
    long long partition_count = 0;
};

/// Applies the degree-k symmetric block to the uniform unit vector over the
/// degree-k classes and reports the image norm next to the counting floor it
/// is expected to dominate.
TestVectorBound testvector_lower_bound(const WeightSequence& w, const ExponentTuple& l,
                                       int k, double epsilon);

struct VerifyOptions {
    double tol = 1e-10;
    int max_iter = 10000;
    double upper_slack = 1e-9;  // tolerance on the product upper bound
    double lower_slack = 0.05;  // fraction of the predicted value the profile max must reach
};

/// Forward/converse experiment for the product-norm identity: regularity
/// decision, profile max vs the product of power norms (unconditional upper
/// bound) and vs the limit prediction (one-sided trend check when regular).
VerificationReport verify_norm_identity(const WeightSequence& w, const ExponentTuple& l,
                                        Symmetry symmetry, int k_max,
                                        const VerifyOptions& opt = {});

/// For a non-regular weight, searches the candidate exponent tuples for one
/// whose profile max falls short of the product of power norms by at least
/// margin (relative). Throws std::invalid_argument when w is regular or the
/// candidate list is empty.
VerificationReport find_gap(const WeightSequence& w,
                            const std::vector<ExponentTuple>& candidates,
                            Symmetry symmetry, int k_max, double margin,
                            const VerifyOptions& opt = {});

/// Checks norm(x_1 (.) ... (.) x_n) >= prod norm(x_i) / sqrt(n!) for the given
/// instances plus `trials` seeded random instances (n alternating 2 and 3).
VerificationReport lower_bound_vectors(
    const std::vector<std::vector<std::vector<double>>>& instances, int trials,
    std::uint64_t seed, double tol = 1e-9);

/// Checks the operator form of the same bound with shift-power factors:
/// prod norm(S_{l_i} x) / sqrt(n!) <= profile max, for basis probes e_d at the
/// given degrees plus seeded random finitely supported unit probes.
VerificationReport lower_bound_operators(const WeightSequence& w, const ExponentTuple& l,
                                         const std::vector<int>& probe_degrees,
                                         std::uint64_t seed, int random_probes = 10,
                                         double tol = 1e-9);

/// Runs the counting checks behind the norm identity: growth bounds for the
/// deficient families, the partition-ratio limit, density of the flat classes,
/// the basis-norm/matching-count inequality, window-factor bounds, and the
/// wedge orthogonality of spread tuples.
VerificationReport run_lemma_suite(int n_max, int k_max,
                                   const std::vector<ExponentTuple>& l_list,
                                   const std::vector<WeightSequence>& w_list,
                                   const std::vector<double>& eps_list);

}  // namespace tensorshift
