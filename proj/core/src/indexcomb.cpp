#include "tensorshift/indexcomb.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace tensorshift {

namespace {

void check_length(int n) {
    if (n < 1 || n > kMaxTupleLength) {
        throw std::invalid_argument("tuple length must be between 1 and " +
                                    std::to_string(kMaxTupleLength));
    }
}

long long checked_add(long long a, long long b) {
    long long r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("partition count overflow");
    }
    return r;
}

/// All entries pairwise distinct?
bool all_distinct(const std::vector<int>& v) {
    for (size_t a = 0; a < v.size(); ++a) {
        for (size_t b = a + 1; b < v.size(); ++b) {
            if (v[a] == v[b]) return false;
        }
    }
    return true;
}

/// True when every entry of the class and every exponent value keep the
/// backward window above 1 - epsilon.
bool passes_window_min(const std::vector<int>& rep, const ExponentTuple& l,
                       const WeightSequence& w, double epsilon) {
    std::vector<int> values = l.entries();
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (int x : rep) {
        for (int v : values) {
            if (!(window_min(w, x, -static_cast<long>(v)) > 1.0 - epsilon)) return false;
        }
    }
    return true;
}

}  // namespace

MultiIndexClass::MultiIndexClass(std::vector<int> entries) : rep_(std::move(entries)) {
    check_length(static_cast<int>(rep_.size()));
    for (int v : rep_) {
        if (v < 0) throw std::invalid_argument("class entries must be nonnegative");
    }
    std::sort(rep_.begin(), rep_.end());
}

int MultiIndexClass::degree() const {
    return std::accumulate(rep_.begin(), rep_.end(), 0);
}

std::vector<int> MultiIndexClass::multiplicities() const {
    std::vector<int> out;
    for (size_t i = 0; i < rep_.size();) {
        size_t j = i;
        while (j < rep_.size() && rep_[j] == rep_[i]) ++j;
        out.push_back(static_cast<int>(j - i));
        i = j;
    }
    return out;
}

StrictIndexTuple::StrictIndexTuple(std::vector<int> e, int d) : entries(std::move(e)), offset(d) {
    check_length(static_cast<int>(entries.size()));
    int prev = offset - 1;
    for (int v : entries) {
        if (v <= prev) {
            throw std::invalid_argument("entries must be strictly increasing from the offset");
        }
        prev = v;
    }
}

int StrictIndexTuple::degree() const {
    return std::accumulate(entries.begin(), entries.end(), 0);
}

std::vector<Permutation> all_permutations(int n) {
    check_length(n);
    Permutation p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

int permutation_sign(const Permutation& p) {
    int inversions = 0;
    for (size_t a = 0; a < p.size(); ++a) {
        for (size_t b = a + 1; b < p.size(); ++b) {
            if (p[a] > p[b]) ++inversions;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

long long partition_count(int k, int n) {
    if (n < 1) throw std::invalid_argument("partition_count needs n >= 1");
    if (k < 0) return 0;
    if (k == 0) return 1;
    // P(j, m) = P(j, m-1) + P(j-m, m), rolled over m.
    std::vector<long long> dp(static_cast<size_t>(k) + 1, 0);
    dp[0] = 1;
    for (int m = 1; m <= n; ++m) {
        for (int j = m; j <= k; ++j) {
            dp[static_cast<size_t>(j)] =
                checked_add(dp[static_cast<size_t>(j)], dp[static_cast<size_t>(j - m)]);
        }
    }
    return dp[static_cast<size_t>(k)];
}

long long composition_count(long long k, int n) {
    if (n < 1) throw std::invalid_argument("composition_count needs n >= 1");
    if (k < 0) throw std::invalid_argument("composition_count needs k >= 0");
    unsigned long long r = 1;
    for (long long i = 1; i <= n - 1; ++i) {
        unsigned long long next = 0;
        if (__builtin_mul_overflow(r, static_cast<unsigned long long>(k + i), &next)) {
            throw std::overflow_error("composition count overflow at C(" +
                                      std::to_string(k + n - 1) + "," + std::to_string(n - 1) +
                                      ")");
        }
        r = next / static_cast<unsigned long long>(i);  // exact at every step
    }
    if (r > static_cast<unsigned long long>(std::numeric_limits<long long>::max())) {
        throw std::overflow_error("composition count exceeds 64-bit range");
    }
    return static_cast<long long>(r);
}

namespace {

void emit_weakly_increasing(int remaining, int slots, int min_value, std::vector<int>& acc,
                            std::vector<MultiIndexClass>& out) {
    if (slots == 1) {
        acc.push_back(remaining);
        out.push_back(MultiIndexClass(acc));
        acc.pop_back();
        return;
    }
    for (int v = min_value; v * slots <= remaining; ++v) {
        acc.push_back(v);
        emit_weakly_increasing(remaining - v, slots - 1, v, acc, out);
        acc.pop_back();
    }
}

void emit_strict(int remaining, int slots, int min_value, std::vector<int>& acc, int offset,
                 std::vector<StrictIndexTuple>& out) {
    if (slots == 1) {
        if (remaining >= min_value) {
            acc.push_back(remaining);
            out.push_back(StrictIndexTuple(acc, offset));
            acc.pop_back();
        }
        return;
    }
    // Remaining entries must strictly increase from v, so they cost at least
    // v*slots + slots*(slots-1)/2 in total.
    for (int v = min_value; v * slots + slots * (slots - 1) / 2 <= remaining; ++v) {
        acc.push_back(v);
        emit_strict(remaining - v, slots - 1, v + 1, acc, offset, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<MultiIndexClass> enumerate_classes(int k, int n) {
    check_length(n);
    if (k < 0) throw std::invalid_argument("enumerate_classes needs k >= 0");
    BudgetMeter meter;
    meter.charge(partition_count(k, n));
    std::vector<MultiIndexClass> out;
    out.reserve(static_cast<size_t>(partition_count(k, n)));
    std::vector<int> acc;
    emit_weakly_increasing(k, n, 0, acc, out);
    return out;
}

std::vector<StrictIndexTuple> enumerate_strict_tuples(int k, int n, int d) {
    check_length(n);
    if (d < 0) throw std::invalid_argument("offset must be nonnegative");
    std::vector<StrictIndexTuple> out;
    if (k < 0) return out;
    BudgetMeter meter;
    meter.charge(partition_count(k - n * d - n * (n - 1) / 2, n));
    std::vector<int> acc;
    emit_strict(k, n, d, acc, d, out);
    return out;
}

std::vector<MultiIndexClass> preimage_classes(const MultiIndexClass& i,
                                              const ExponentTuple& l) {
    if (i.size() != l.size()) throw std::invalid_argument("class/exponent length mismatch");
    std::set<std::vector<int>> seen;
    for (const auto& arr : l.distinct_arrangements()) {
        std::vector<int> cand(i.rep());
        bool valid = true;
        for (size_t r = 0; r < cand.size(); ++r) {
            cand[r] -= arr[r];
            if (cand[r] < 0) {
                valid = false;
                break;
            }
        }
        if (!valid) continue;
        std::sort(cand.begin(), cand.end());
        seen.insert(std::move(cand));
    }
    std::vector<MultiIndexClass> out;
    out.reserve(seen.size());
    for (const auto& rep : seen) out.push_back(MultiIndexClass(rep));
    return out;
}

std::vector<Permutation> matching_permutations(const MultiIndexClass& j,
                                               const MultiIndexClass& i,
                                               const ExponentTuple& l) {
    if (i.size() != l.size() || j.size() != l.size()) {
        throw std::invalid_argument("class/exponent length mismatch");
    }
    std::vector<Permutation> out;
    for (const auto& p : all_permutations(l.size())) {
        std::vector<int> v(i.rep());
        bool valid = true;
        for (size_t r = 0; r < v.size(); ++r) {
            v[r] += l.entries()[static_cast<size_t>(p[r])];
            if (v[r] < 0) {
                valid = false;
                break;
            }
        }
        if (!valid) continue;
        std::sort(v.begin(), v.end());
        if (v == j.rep()) out.push_back(p);
    }
    return out;
}

std::vector<std::vector<int>> preimage_strict_tuples(const std::vector<int>& v,
                                                     const ExponentTuple& l, int d) {
    const int n = l.size();
    if (static_cast<int>(v.size()) != n) {
        throw std::invalid_argument("tuple/exponent length mismatch");
    }
    if (!all_distinct(v)) {
        throw std::invalid_argument("wedge preimages need pairwise distinct entries");
    }
    // j + l_p must be an even rearrangement of v: j = v_t - l_p over even t.
    std::set<std::vector<int>> seen;
    const auto arrangements = l.distinct_arrangements();
    for (const auto& t : all_permutations(n)) {
        if (permutation_sign(t) != 1) continue;
        std::vector<int> vt(static_cast<size_t>(n));
        for (int r = 0; r < n; ++r) vt[static_cast<size_t>(r)] = v[static_cast<size_t>(t[r])];
        for (const auto& arr : arrangements) {
            std::vector<int> j(static_cast<size_t>(n));
            bool valid = true;
            int prev = d - 1;
            for (int r = 0; r < n; ++r) {
                j[static_cast<size_t>(r)] = vt[static_cast<size_t>(r)] - arr[static_cast<size_t>(r)];
                if (j[static_cast<size_t>(r)] <= prev) {
                    valid = false;
                    break;
                }
                prev = j[static_cast<size_t>(r)];
            }
            if (valid) seen.insert(std::move(j));
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<Permutation> wedge_matching_permutations(const std::vector<int>& j,
                                                     const std::vector<int>& i,
                                                     const ExponentTuple& l) {
    const int n = l.size();
    if (static_cast<int>(j.size()) != n || static_cast<int>(i.size()) != n) {
        throw std::invalid_argument("tuple/exponent length mismatch");
    }
    std::vector<Permutation> out;
    for (const auto& p : all_permutations(n)) {
        std::vector<int> v(i);
        bool valid = true;
        for (int r = 0; r < n; ++r) {
            v[static_cast<size_t>(r)] += l.entries()[static_cast<size_t>(p[r])];
            if (v[static_cast<size_t>(r)] < 0) {
                valid = false;
                break;
            }
        }
        if (!valid || !all_distinct(v)) continue;
        // Sign of the sort must be +1 for the wedge vectors to match exactly.
        std::vector<int> order(static_cast<size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return v[static_cast<size_t>(a)] < v[static_cast<size_t>(b)];
        });
        std::vector<int> sorted(static_cast<size_t>(n));
        for (int r = 0; r < n; ++r) sorted[static_cast<size_t>(r)] = v[static_cast<size_t>(order[r])];
        if (sorted == j && permutation_sign(order) == 1) out.push_back(p);
    }
    return out;
}

bool in_perturbation_box(const std::vector<int>& v, const ExponentTuple& l, int d) {
    const int n = l.size();
    if (static_cast<int>(v.size()) != n) {
        throw std::invalid_argument("tuple/exponent length mismatch");
    }
    if (!all_distinct(v)) return false;
    for (int x : v) {
        if (x < 0) return false;
    }
    const int box = l.abs_sum();
    // Greedy feasibility for d <= i_1 < ... < i_n with |i_r - v_r| <= box.
    int prev = d - 1;
    for (int r = 0; r < n; ++r) {
        const int lo = std::max(prev + 1, v[static_cast<size_t>(r)] - box);
        if (lo > v[static_cast<size_t>(r)] + box) return false;
        prev = lo;
    }
    return true;
}

CensusReport census(int n, const ExponentTuple& l, int k_lo, int k_hi, double epsilon,
                    const WeightSequence& w) {
    check_length(n);
    if (n != l.size()) throw std::invalid_argument("census: n does not match the exponent tuple");
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument("census: epsilon must lie in (0,1)");
    }
    if (k_lo > k_hi || k_lo < 0) throw std::invalid_argument("census: bad degree range");

    CensusReport report;
    report.antisymmetric = false;
    report.n = n;
    report.exponents = l.entries();
    report.k_lo = k_lo;
    report.k_hi = k_hi;
    report.epsilon = epsilon;
    report.weight_desc = w.description();

    const long long m_full = l.arrangement_count();
    BudgetMeter meter;
    for (int k = k_lo; k <= k_hi; ++k) {
        CensusRow row;
        row.k = k;
        row.target_degree = k + l.signed_sum();
        row.source_partition_count = partition_count(k, n);
        row.target_partition_count = partition_count(row.target_degree, n);
        row.preimage_histogram.assign(static_cast<size_t>(m_full) + 1, 0);
        if (row.target_degree >= 0) {
            meter.charge(row.target_partition_count * m_full);
            for (const auto& cls : enumerate_classes(row.target_degree, n)) {
                const auto m = static_cast<long long>(preimage_classes(cls, l).size());
                ++row.preimage_histogram[static_cast<size_t>(m)];
                if (m == m_full) {
                    if (passes_window_min(cls.rep(), l, w, epsilon)) {
                        ++row.a_tilde;
                    } else {
                        ++row.a_check;
                    }
                }
            }
        }
        for (long long m = 0; m < m_full; ++m) {
            row.deficient_count += row.preimage_histogram[static_cast<size_t>(m)];
        }
        if (row.source_partition_count > 0) {
            row.flat_ratio = static_cast<double>(row.a_tilde) /
                             static_cast<double>(row.source_partition_count);
        }
        row.deficient_ratio =
            static_cast<double>(row.deficient_count) /
            std::pow(static_cast<double>(std::max(row.target_degree, 1)), n - 2);
        report.rows.push_back(std::move(row));
    }
    return report;
}

namespace {

/// Ordered distinct tuples of the given degree that sit in the perturbation
/// box; enumerated as strictly increasing bases times permutations.
std::vector<std::vector<int>> box_members(int degree, int n, const ExponentTuple& l, int d,
                                          BudgetMeter& meter) {
    std::vector<std::vector<int>> out;
    if (degree < 0) return out;
    const int base_min = std::max(0, d - l.abs_sum());
    const auto perms = all_permutations(n);
    for (const auto& base : enumerate_strict_tuples(degree, n, base_min)) {
        for (const auto& p : perms) {
            meter.charge();
            std::vector<int> v(static_cast<size_t>(n));
            for (int r = 0; r < n; ++r) {
                v[static_cast<size_t>(r)] = base.entries[static_cast<size_t>(p[r])];
            }
            if (in_perturbation_box(v, l, d)) out.push_back(std::move(v));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_spread(const std::vector<int>& v, int d, int min_gap) {
    int prev = v.front();
    if (prev < d) return false;
    for (size_t r = 1; r < v.size(); ++r) {
        if (v[r] - prev <= min_gap) return false;
        prev = v[r];
    }
    return true;
}

}  // namespace

CensusReport census_antisym(int n, const ExponentTuple& l, int d, int k_lo, int k_hi,
                            double epsilon, const WeightSequence& w) {
    check_length(n);
    if (n != l.size()) throw std::invalid_argument("census: n does not match the exponent tuple");
    if (d < 1) throw std::invalid_argument("census_antisym: offset d must be >= 1");
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument("census: epsilon must lie in (0,1)");
    }
    if (k_lo > k_hi || k_lo < 0) throw std::invalid_argument("census: bad degree range");

    CensusReport report;
    report.antisymmetric = true;
    report.n = n;
    report.exponents = l.entries();
    report.offset = d;
    report.k_lo = k_lo;
    report.k_hi = k_hi;
    report.epsilon = epsilon;
    report.weight_desc = w.description();

    const long long m_full = l.arrangement_count();
    const int gap = 4 * l.abs_sum();
    BudgetMeter meter;
    for (int k = k_lo; k <= k_hi; ++k) {
        AntisymCensusRow row;
        row.k = k;
        row.target_degree = k + l.signed_sum();
        row.strict_count = partition_count(k - n * d - n * (n - 1) / 2, n);
        row.spread_count =
            partition_count(k - n * d - (gap + 1) * n * (n - 1) / 2, n);
        row.box_count = static_cast<long long>(box_members(k, n, l, d, meter).size());
        row.preimage_histogram.assign(static_cast<size_t>(m_full) + 1, 0);
        for (const auto& v : box_members(row.target_degree, n, l, d, meter)) {
            const auto m = static_cast<long long>(preimage_strict_tuples(v, l, d).size());
            ++row.preimage_histogram[static_cast<size_t>(m)];
            if (m == m_full && is_spread(v, d, gap) &&
                passes_window_min(v, l, w, epsilon)) {
                ++row.a_tilde_prime;
            }
        }
        if (row.strict_count > 0) {
            row.flat_ratio = static_cast<double>(row.a_tilde_prime) /
                             static_cast<double>(row.strict_count);
        }
        row.box_excess_ratio = static_cast<double>(row.box_count - row.spread_count) /
                               std::pow(static_cast<double>(std::max(k, 1)), n - 2);
        report.antisym_rows.push_back(std::move(row));
    }
    return report;
}

bool permutation_partition_check(const MultiIndexClass& i, const ExponentTuple& l, int k) {
    const int n = l.size();
    if (i.degree() != k) throw std::invalid_argument("degree of the class must equal k");
    const long long m_full = l.arrangement_count();

    // Admissible permutations: offsets staying inside N^n.
    std::vector<Permutation> admissible;
    for (const auto& p : all_permutations(n)) {
        bool valid = true;
        for (int r = 0; r < n; ++r) {
            if (i.rep()[static_cast<size_t>(r)] + l.entries()[static_cast<size_t>(p[r])] < 0) {
                valid = false;
                break;
            }
        }
        if (valid) admissible.push_back(p);
    }

    // Bucket admissible permutations by the preimage count of their target.
    std::vector<std::set<Permutation>> buckets(static_cast<size_t>(m_full) + 1);
    for (const auto& p : admissible) {
        std::vector<int> v(i.rep());
        for (int r = 0; r < n; ++r) v[static_cast<size_t>(r)] += l.entries()[static_cast<size_t>(p[r])];
        std::sort(v.begin(), v.end());
        const MultiIndexClass target(v);
        const auto m = static_cast<long long>(preimage_classes(target, l).size());
        if (m == 0) return false;  // the class of i itself is always a preimage
        buckets[static_cast<size_t>(m)].insert(p);
    }

    // Each bucket must be the disjoint union of the matching sets of its
    // distinct target classes, and the buckets must partition the admissible set.
    size_t covered = 0;
    for (long long m = 1; m <= m_full; ++m) {
        std::set<MultiIndexClass> targets;
        for (const auto& p : buckets[static_cast<size_t>(m)]) {
            std::vector<int> v(i.rep());
            for (int r = 0; r < n; ++r) {
                v[static_cast<size_t>(r)] += l.entries()[static_cast<size_t>(p[r])];
            }
            std::sort(v.begin(), v.end());
            targets.insert(MultiIndexClass(v));
        }
        std::set<Permutation> rebuilt;
        for (const auto& target : targets) {
            for (const auto& p : matching_permutations(target, i, l)) {
                if (!rebuilt.insert(p).second) return false;  // overlap
            }
        }
        if (rebuilt != buckets[static_cast<size_t>(m)]) return false;
        covered += rebuilt.size();
    }
    return covered == admissible.size();
}

}  // namespace tensorshift
