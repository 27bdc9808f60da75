#include "tensorshift/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tensorshift/indexcomb.hpp"

namespace tensorshift {

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::string exponents_text(const std::vector<int>& e) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(e[i]);
    }
    return s;
}

std::string symmetry_text(Symmetry s) {
    return s == Symmetry::Symmetric ? "sym" : "antisym";
}

/// norm of S_{alpha,t} applied to a finitely supported coefficient vector.
double shifted_vector_norm(const WeightSequence& w, int t, const std::vector<double>& x) {
    double s = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        const double c = x[i] * window_product(w, static_cast<long>(i), t);
        s += c * c;
    }
    return std::sqrt(s);
}

double vector_norm(const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

bool regular_with_unit_limit(const WeightSequence& w) {
    return is_regular(w).regular && w.limit() == 1.0;
}

/// Non-decreasing separately along even and odd indices of vals[k_from..k_to].
bool parity_nondecreasing(const std::vector<double>& vals, int k_from, int k_to) {
    for (int parity = 0; parity < 2; ++parity) {
        double prev = -1.0;
        for (int k = k_from; k <= k_to; ++k) {
            if ((k & 1) != parity) continue;
            if (vals[static_cast<size_t>(k)] < prev - 1e-12) return false;
            prev = vals[static_cast<size_t>(k)];
        }
    }
    return true;
}

/// Ratio-doubling growth check: the max of counts[k]/k^(n-2) over k <= K must
/// not exceed 4x its value over k <= K/2.
struct GrowthCheck {
    bool pass = false;
    double ratio_half = 0.0;
    double ratio_full = 0.0;
};

GrowthCheck growth_check(const std::vector<long long>& counts, int n) {
    GrowthCheck out;
    const int k_hi = static_cast<int>(counts.size()) - 1;
    const int k_half = k_hi / 2;
    auto scaled_max = [&](int up_to) {
        double best = 0.0;
        for (int k = 1; k <= up_to; ++k) {
            best = std::max(best, static_cast<double>(counts[static_cast<size_t>(k)]) /
                                      std::pow(static_cast<double>(k), n - 2));
        }
        return best;
    };
    out.ratio_half = scaled_max(k_half);
    out.ratio_full = scaled_max(k_hi);
    if (out.ratio_full == 0.0) {
        out.pass = true;
    } else if (out.ratio_half == 0.0) {
        out.pass = false;
    } else {
        out.pass = out.ratio_full < 4.0 * out.ratio_half;
    }
    return out;
}

}  // namespace

void VerificationReport::add_input(std::string name, std::string value) {
    inputs.emplace_back(std::move(name), std::move(value));
}

void VerificationReport::add_quantity(std::string name, double value) {
    quantities.emplace_back(std::move(name), value);
}

void VerificationReport::add_assertion(std::string name, bool passed, double lhs, double rhs,
                                       std::string detail) {
    assertions.push_back({std::move(name), passed ? Verdict::Pass : Verdict::Fail, lhs, rhs,
                          std::move(detail)});
}

void VerificationReport::add_not_applicable(std::string name, std::string detail) {
    assertions.push_back({std::move(name), Verdict::NotApplicable, 0.0, 0.0, std::move(detail)});
}

bool VerificationReport::all_passed() const {
    return std::all_of(assertions.begin(), assertions.end(),
                       [](const Assertion& a) { return a.verdict != Verdict::Fail; });
}

TestVectorBound testvector_lower_bound(const WeightSequence& w, const ExponentTuple& l, int k,
                                       double epsilon) {
    const int n = l.size();
    const GradedBlock block = build_sym_block(w, l, k);
    TestVectorBound out;
    out.partition_count = partition_count(k, n);
    const double a = 1.0 / std::sqrt(static_cast<double>(out.partition_count));

    // Uniform unit vector in orthonormal coordinates.
    std::vector<double> image(static_cast<size_t>(block.rows()), 0.0);
    for (int c = 0; c < block.cols(); ++c) {
        for (const auto& [r, v] : block.columns[static_cast<size_t>(c)]) {
            image[static_cast<size_t>(r)] += v * a;
        }
    }
    out.image_norm = vector_norm(image);

    const CensusReport cr = census(n, l, k, k, epsilon, w);
    out.a_tilde = cr.rows.front().a_tilde;
    out.analytic_floor = std::sqrt(static_cast<double>(out.a_tilde) /
                                   static_cast<double>(out.partition_count)) *
                         std::pow(1.0 - epsilon, l.abs_sum());
    return out;
}

VerificationReport verify_norm_identity(const WeightSequence& w, const ExponentTuple& l,
                                        Symmetry symmetry, int k_max, const VerifyOptions& opt) {
    VerificationReport report;
    report.scenario = "verify_norm_identity";
    report.add_input("weights", w.description());
    report.add_input("exponents", exponents_text(l.entries()));
    report.add_input("symmetry", symmetry_text(symmetry));
    report.add_input("k_max", std::to_string(k_max));
    report.add_input("tol", std::to_string(opt.tol));
    report.add_input("upper_slack", std::to_string(opt.upper_slack));
    report.add_input("lower_slack", std::to_string(opt.lower_slack));

    const RegularityDecision reg = is_regular(w);
    SvOptions sv;
    sv.tol = opt.tol;
    sv.max_iter = opt.max_iter;
    const NormProfile profile = norm_profile(w, l, symmetry, k_max, sv);

    report.add_quantity("regular", reg.regular ? 1.0 : 0.0);
    if (reg.witness) report.add_quantity("witness_index", static_cast<double>(*reg.witness));
    report.add_quantity("profile_max", profile.max_norm);
    report.add_quantity("argmax_k", profile.argmax_k);
    report.add_quantity("product_of_power_norms", profile.product_of_power_norms);
    report.add_quantity("limit_prediction", profile.limit_prediction);

    report.add_assertion("upper_bound",
                         profile.max_norm <= profile.product_of_power_norms + opt.upper_slack,
                         profile.max_norm, profile.product_of_power_norms + opt.upper_slack,
                         "profile max must not exceed the product of power norms");
    if (reg.regular) {
        const double floor = (1.0 - opt.lower_slack) * profile.limit_prediction;
        report.add_assertion("lower_trend", profile.max_norm >= floor, profile.max_norm, floor,
                             "regular weights: profile max should approach the limit prediction");
    } else {
        report.add_not_applicable("lower_trend", "weight is not regular");
    }
    return report;
}

VerificationReport find_gap(const WeightSequence& w, const std::vector<ExponentTuple>& candidates,
                            Symmetry symmetry, int k_max, double margin,
                            const VerifyOptions& opt) {
    if (is_regular(w).regular) {
        throw std::invalid_argument("find_gap requires a non-regular weight sequence");
    }
    if (candidates.empty()) throw std::invalid_argument("find_gap needs at least one candidate");

    VerificationReport report;
    report.scenario = "find_gap";
    report.add_input("weights", w.description());
    report.add_input("symmetry", symmetry_text(symmetry));
    report.add_input("k_max", std::to_string(k_max));
    report.add_input("margin", std::to_string(margin));
    report.add_input("tol", std::to_string(opt.tol));

    SvOptions sv;
    sv.tol = opt.tol;
    sv.max_iter = opt.max_iter;

    double best_rel = -1.0;
    std::string best_name;
    for (const auto& l : candidates) {
        const NormProfile profile = norm_profile(w, l, symmetry, k_max, sv);
        const double product = profile.product_of_power_norms;
        const double gap = product - profile.max_norm;
        const double rel = product > 0.0 ? gap / product : 0.0;
        const std::string name = exponents_text(l.entries());
        report.add_quantity("profile_max[" + name + "]", profile.max_norm);
        report.add_quantity("product[" + name + "]", product);
        report.add_quantity("relative_gap[" + name + "]", rel);
        if (rel > best_rel) {
            best_rel = rel;
            best_name = name;
        }
    }
    report.add_input("best_candidate", best_name);
    report.add_quantity("best_relative_gap", best_rel);
    report.add_assertion("witness_gap", best_rel >= margin, best_rel, margin,
                         "best candidate " + best_name +
                             " must fall short of the product by the margin");
    return report;
}

VerificationReport lower_bound_vectors(
    const std::vector<std::vector<std::vector<double>>>& instances, int trials,
    std::uint64_t seed, double tol) {
    VerificationReport report;
    report.scenario = "lower_bound_vectors";
    report.add_input("trials", std::to_string(trials));
    report.add_input("seed", std::to_string(seed));
    report.add_input("tol", std::to_string(tol));

    double min_slack = std::numeric_limits<double>::infinity();
    long long evaluated = 0;

    auto check_instance = [&](const std::vector<std::vector<double>>& xs) {
        const int n = static_cast<int>(xs.size());
        double product = 1.0 / std::sqrt(factorial(n));
        for (const auto& x : xs) product *= vector_norm(x);
        const double lhs = sym_tensor_vectors(xs).norm();
        min_slack = std::min(min_slack, lhs - product);
        ++evaluated;
    };

    for (const auto& xs : instances) check_instance(xs);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    for (int t = 0; t < trials; ++t) {
        const int n = 2 + (t & 1);
        std::uniform_int_distribution<int> support(1, 6);
        std::vector<std::vector<double>> xs;
        for (int r = 0; r < n; ++r) {
            std::vector<double> x(static_cast<size_t>(support(rng)));
            for (auto& v : x) v = dist(rng);
            xs.push_back(std::move(x));
        }
        check_instance(xs);
    }

    report.add_quantity("instances", static_cast<double>(evaluated));
    report.add_quantity("min_slack", evaluated > 0 ? min_slack : 0.0);
    report.add_assertion("factorial_lower_bound", evaluated == 0 || min_slack >= -tol,
                         evaluated > 0 ? min_slack : 0.0, -tol,
                         "norm of the symmetric tensor must dominate prod norms / sqrt(n!)");
    return report;
}

VerificationReport lower_bound_operators(const WeightSequence& w, const ExponentTuple& l,
                                         const std::vector<int>& probe_degrees,
                                         std::uint64_t seed, int random_probes, double tol) {
    VerificationReport report;
    report.scenario = "lower_bound_operators";
    report.add_input("weights", w.description());
    report.add_input("exponents", exponents_text(l.entries()));
    report.add_input("seed", std::to_string(seed));
    report.add_input("random_probes", std::to_string(random_probes));
    report.add_input("tol", std::to_string(tol));

    const int n = l.size();
    std::vector<std::vector<double>> probes;
    int max_index = 0;
    for (int d : probe_degrees) {
        if (d < 0) throw std::invalid_argument("probe degrees must be nonnegative");
        std::vector<double> x(static_cast<size_t>(d) + 1, 0.0);
        x.back() = 1.0;
        max_index = std::max(max_index, d);
        probes.push_back(std::move(x));
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    std::uniform_int_distribution<int> len(2, 12);
    for (int t = 0; t < random_probes; ++t) {
        std::vector<double> x(static_cast<size_t>(len(rng)));
        double norm2 = 0.0;
        for (auto& v : x) {
            v = dist(rng);
            norm2 += v * v;
        }
        if (norm2 == 0.0) {
            x[0] = 1.0;
            norm2 = 1.0;
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (auto& v : x) v *= inv;
        max_index = std::max(max_index, static_cast<int>(x.size()) - 1);
        probes.push_back(std::move(x));
    }

    const int k_needed = n * max_index + n * l.max_abs();
    const NormProfile profile = norm_profile(w, l, Symmetry::Symmetric, k_needed);

    double min_slack = std::numeric_limits<double>::infinity();
    const double inv_fact = 1.0 / std::sqrt(factorial(n));
    for (const auto& x : probes) {
        double lhs = inv_fact;
        for (int e : l.entries()) lhs *= shifted_vector_norm(w, e, x);
        min_slack = std::min(min_slack, profile.max_norm - lhs);
    }

    report.add_quantity("probes", static_cast<double>(probes.size()));
    report.add_quantity("profile_max", profile.max_norm);
    report.add_quantity("k_max_used", k_needed);
    report.add_quantity("min_slack", probes.empty() ? 0.0 : min_slack);
    report.add_assertion("operator_lower_bound", probes.empty() || min_slack >= -tol,
                         probes.empty() ? 0.0 : min_slack, -tol,
                         "prod norms of the shifted probe / sqrt(n!) must stay below the "
                         "profile max");
    return report;
}

namespace {

/// Exhaustive window-factor check over the flat full-count targets at one
/// source degree. Returns false on the first violated factor bound.
bool flat_window_factors_hold(const WeightSequence& w, const ExponentTuple& l, int k,
                              double epsilon) {
    const int n = l.size();
    const int target_degree = k + l.signed_sum();
    if (target_degree < 0) return true;
    const long long m_full = l.arrangement_count();
    // Collect the flat full-count target classes.
    std::set<std::vector<int>> flat_targets;
    for (const auto& cls : enumerate_classes(target_degree, n)) {
        if (static_cast<long long>(preimage_classes(cls, l).size()) != m_full) continue;
        bool flat = true;
        for (int x : cls.rep()) {
            for (int v : l.entries()) {
                if (!(window_min(w, x, -static_cast<long>(v)) > 1.0 - epsilon)) {
                    flat = false;
                    break;
                }
            }
            if (!flat) break;
        }
        if (flat) flat_targets.insert(cls.rep());
    }
    for (const auto& target_rep : flat_targets) {
        const MultiIndexClass target(target_rep);
        for (const auto& source : preimage_classes(target, l)) {
            for (const auto& p : matching_permutations(target, source, l)) {
                for (int a = 0; a < n; ++a) {
                    const int step = l.entries()[static_cast<size_t>(p[a])];
                    const double beta = window_product(
                        w, source.rep()[static_cast<size_t>(a)], step);
                    if (!(std::abs(beta) > std::pow(1.0 - epsilon, std::abs(step)))) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

}  // namespace

VerificationReport run_lemma_suite(int n_max, int k_max,
                                   const std::vector<ExponentTuple>& l_list,
                                   const std::vector<WeightSequence>& w_list,
                                   const std::vector<double>& eps_list) {
    if (n_max < 1 || n_max > kMaxTupleLength) throw std::invalid_argument("bad n_max");
    if (k_max < 2) throw std::invalid_argument("k_max too small for the counting checks");

    VerificationReport report;
    report.scenario = "lemma_suite";
    report.add_input("n_max", std::to_string(n_max));
    report.add_input("k_max", std::to_string(k_max));

    // Partition ratio limit, once per n.
    for (int n = 1; n <= n_max; ++n) {
        const double ratio = static_cast<double>(partition_count(200, n)) /
                             static_cast<double>(partition_count(201, n));
        report.add_quantity("partition_ratio_k200[n=" + std::to_string(n) + "]", ratio);
        report.add_assertion("partition_ratio_limit[n=" + std::to_string(n) + "]",
                             ratio >= 0.9 && ratio <= 1.0, ratio, 0.9,
                             "P(200,n)/P(201,n) must sit in [0.9, 1.0]");
    }

    const int exhaustive_k = std::min(k_max, 15);
    for (const auto& l : l_list) {
        const int n = l.size();
        if (n > n_max) continue;
        const long long m_full = l.arrangement_count();
        const std::string ltag = "[l=" + exponents_text(l.entries()) + "]";

        // Preimage-count drop for repeated-entry classes (exponent values not
        // all equal). Differences live in Z^n: no positivity filter.
        if (!l.all_equal()) {
            bool ok = true;
            const int entry_cap = std::min(12, exhaustive_k);
            for (int deg = 0; deg <= entry_cap * n && ok; ++deg) {
                for (const auto& cls : enumerate_classes(deg, n)) {
                    if (cls.rep().back() > entry_cap) continue;
                    if (static_cast<int>(std::set<int>(cls.rep().begin(), cls.rep().end()).size()) ==
                        n) {
                        continue;  // needs a repeated entry
                    }
                    std::set<std::vector<int>> diffs;
                    for (const auto& arr : l.distinct_arrangements()) {
                        std::vector<int> d(cls.rep());
                        for (int r = 0; r < n; ++r) d[static_cast<size_t>(r)] -= arr[static_cast<size_t>(r)];
                        std::sort(d.begin(), d.end());
                        diffs.insert(std::move(d));
                    }
                    if (static_cast<long long>(diffs.size()) > m_full - 1) {
                        ok = false;
                        break;
                    }
                }
            }
            report.add_assertion("repeated_entry_preimage_drop" + ltag, ok, ok ? 1.0 : 0.0, 1.0,
                                 "repeated-entry classes must lose at least one distinct offset");
        } else {
            report.add_not_applicable("repeated_entry_preimage_drop" + ltag,
                                      "exponents all equal");
        }

        // Basis-norm vs matching-count inequality over full-count targets.
        if (!l.all_equal()) {
            bool ok = true;
            const double bound_scale =
                static_cast<double>(m_full) / (factorial(n) * std::sqrt(factorial(n)));
            for (int k = 0; k <= exhaustive_k && ok; ++k) {
                const int tdeg = k + l.signed_sum();
                if (tdeg < 0) continue;
                for (const auto& target : enumerate_classes(tdeg, n)) {
                    if (static_cast<long long>(preimage_classes(target, l).size()) != m_full) {
                        continue;
                    }
                    for (const auto& source : preimage_classes(target, l)) {
                        const auto matches = matching_permutations(target, source, l);
                        const double lhs = sym_basis_norm(source);
                        const double rhs =
                            static_cast<double>(matches.size()) * bound_scale;
                        if (lhs > rhs + 1e-15) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) break;
                }
            }
            report.add_assertion("basis_norm_vs_matching_count" + ltag, ok, ok ? 1.0 : 0.0, 1.0,
                                 "basis norm must be dominated by the scaled matching count");
        } else {
            report.add_not_applicable("basis_norm_vs_matching_count" + ltag,
                                      "exponents all equal");
        }

        // Wedge orthogonality of spread tuples against the rest of the box.
        {
            bool ok = true;
            const int d = 1;
            const int gap = 4 * l.abs_sum();
            for (int k = 0; k <= k_max && ok; ++k) {
                std::set<std::vector<int>> spread;
                for (const auto& t : enumerate_strict_tuples(k, n, d)) {
                    bool sp = true;
                    for (size_t r = 1; r < t.entries.size(); ++r) {
                        if (t.entries[r] - t.entries[r - 1] <= gap) {
                            sp = false;
                            break;
                        }
                    }
                    if (sp) spread.insert(t.entries);
                }
                if (spread.empty()) continue;
                const int base_min = std::max(0, d - l.abs_sum());
                for (const auto& base : enumerate_strict_tuples(k, n, base_min)) {
                    for (const auto& p : all_permutations(n)) {
                        std::vector<int> v(static_cast<size_t>(n));
                        for (int r = 0; r < n; ++r) {
                            v[static_cast<size_t>(r)] = base.entries[static_cast<size_t>(p[r])];
                        }
                        if (!in_perturbation_box(v, l, d)) continue;
                        if (spread.count(v)) continue;  // member of the spread family itself
                        std::vector<int> sorted(v);
                        std::sort(sorted.begin(), sorted.end());
                        if (spread.count(sorted)) {
                            ok = false;  // non-orthogonal against a spread tuple
                            break;
                        }
                    }
                    if (!ok) break;
                }
            }
            report.add_assertion("spread_wedge_orthogonality" + ltag, ok, ok ? 1.0 : 0.0, 1.0,
                                 "box members outside the spread family must use other index "
                                 "sets");
        }

        for (const auto& w : w_list) {
            const std::string wtag = "[l=" + exponents_text(l.entries()) + ",w=" +
                                     w.description() + "]";

            // Counting growth checks do not depend on epsilon; run them once
            // per weight from a census at the first epsilon.
            const CensusReport base_sym = census(n, l, 0, k_max, eps_list.front(), w);
            const CensusReport base_anti = census_antisym(n, l, 1, 0, k_max, eps_list.front(), w);

            if (!l.all_equal()) {
                std::vector<long long> counts;
                for (const auto& row : base_sym.rows) counts.push_back(row.deficient_count);
                const GrowthCheck g = growth_check(counts, n);
                report.add_assertion("deficient_class_growth" + wtag, g.pass, g.ratio_full,
                                     4.0 * g.ratio_half,
                                     "deficient classes must grow at most like k^(n-2)");

                std::vector<long long> anti_counts;
                for (const auto& row : base_anti.antisym_rows) {
                    long long c = 0;
                    for (long long m = 0; m < m_full; ++m) {
                        c += row.preimage_histogram[static_cast<size_t>(m)];
                    }
                    anti_counts.push_back(c);
                }
                const GrowthCheck ga = growth_check(anti_counts, n);
                report.add_assertion("strict_deficient_growth" + wtag, ga.pass, ga.ratio_full,
                                     4.0 * ga.ratio_half,
                                     "deficient box members must grow at most like k^(n-2)");
            } else {
                report.add_not_applicable("deficient_class_growth" + wtag, "exponents all equal");
                report.add_not_applicable("strict_deficient_growth" + wtag,
                                          "exponents all equal");
            }

            {
                std::vector<long long> excess;
                for (const auto& row : base_anti.antisym_rows) {
                    excess.push_back(row.box_count - row.spread_count);
                }
                const GrowthCheck g = growth_check(excess, n);
                report.add_assertion("box_minus_spread_growth" + wtag, g.pass, g.ratio_full,
                                     4.0 * g.ratio_half,
                                     "box count minus spread count must grow at most like "
                                     "k^(n-2)");
            }

            if (!regular_with_unit_limit(w)) {
                report.add_not_applicable("dipped_class_growth" + wtag,
                                          "weight not regular with unit limit");
                report.add_not_applicable("flat_class_density" + wtag,
                                          "weight not regular with unit limit");
                report.add_not_applicable("strict_flat_density" + wtag,
                                          "weight not regular with unit limit");
                report.add_not_applicable("flat_window_factor_bound" + wtag,
                                          "weight not regular with unit limit");
                continue;
            }

            for (double eps : eps_list) {
                const std::string tag = "[l=" + exponents_text(l.entries()) + ",w=" +
                                        w.description() + ",eps=" + std::to_string(eps) + "]";
                const CensusReport sym_census =
                    eps == eps_list.front() ? base_sym : census(n, l, 0, k_max, eps, w);
                const CensusReport anti_census = eps == eps_list.front()
                                                     ? base_anti
                                                     : census_antisym(n, l, 1, 0, k_max, eps, w);
                {
                    std::vector<long long> dipped;
                    for (const auto& row : sym_census.rows) dipped.push_back(row.a_check);
                    const GrowthCheck g = growth_check(dipped, n);
                    report.add_assertion("dipped_class_growth" + tag, g.pass, g.ratio_full,
                                         4.0 * g.ratio_half,
                                         "full-count classes failing the window test must grow "
                                         "at most like k^(n-2)");

                    std::vector<double> ratios(static_cast<size_t>(k_max) + 1, 0.0);
                    for (const auto& row : sym_census.rows) {
                        ratios[static_cast<size_t>(row.k)] = row.flat_ratio;
                    }
                    const int from = std::max(2 * l.abs_sum() + 2, k_max / 3);
                    const bool trend = parity_nondecreasing(ratios, from, k_max) &&
                                       ratios[static_cast<size_t>(k_max)] >=
                                           ratios[static_cast<size_t>(from)] - 1e-12;
                    report.add_quantity("flat_ratio_final" + tag,
                                        ratios[static_cast<size_t>(k_max)]);
                    report.add_assertion("flat_class_density" + tag, trend,
                                         ratios[static_cast<size_t>(k_max)],
                                         ratios[static_cast<size_t>(from)],
                                         "share of flat full-count classes must trend up to 1");

                    std::vector<double> anti_ratios(static_cast<size_t>(k_max) + 1, 0.0);
                    for (const auto& row : anti_census.antisym_rows) {
                        anti_ratios[static_cast<size_t>(row.k)] = row.flat_ratio;
                    }
                    const int afrom = std::max({2 * l.abs_sum() + 2, k_max / 3,
                                                n + (4 * l.abs_sum() + 1) * n * (n - 1) / 2});
                    bool atrend = true;
                    if (afrom < k_max) {
                        atrend = parity_nondecreasing(anti_ratios, afrom, k_max) &&
                                 anti_ratios[static_cast<size_t>(k_max)] >=
                                     anti_ratios[static_cast<size_t>(afrom)] - 1e-12;
                    }
                    report.add_quantity("strict_flat_ratio_final" + tag,
                                        anti_ratios[static_cast<size_t>(k_max)]);
                    report.add_assertion("strict_flat_density" + tag, atrend,
                                         anti_ratios[static_cast<size_t>(k_max)],
                                         afrom < k_max ? anti_ratios[static_cast<size_t>(afrom)]
                                                       : 0.0,
                                         "share of flat spread members must trend up to 1");

                    bool factors_ok = true;
                    for (int k = 0; k <= exhaustive_k && factors_ok; ++k) {
                        factors_ok = flat_window_factors_hold(w, l, k, eps);
                    }
                    report.add_assertion("flat_window_factor_bound" + tag, factors_ok,
                                         factors_ok ? 1.0 : 0.0, 1.0,
                                         "every contributing window product into a flat target "
                                         "must clear (1-eps)^|step|");
                }
            }
        }
    }
    return report;
}

}  // namespace tensorshift
