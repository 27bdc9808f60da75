#pragma once

#include <set>
#include <vector>

#include "tensorshift/budget.hpp"
#include "tensorshift/weights.hpp"

namespace tensorshift {

/// Equivalence class of a tuple in N^n under permutation, stored as its weakly
/// increasing representative.
class MultiIndexClass {
public:
    MultiIndexClass() = default;
    /// Sorts the entries; rejects negative entries.
    explicit MultiIndexClass(std::vector<int> entries);

    const std::vector<int>& rep() const { return rep_; }
    int size() const { return static_cast<int>(rep_.size()); }
    int degree() const;
    std::vector<int> multiplicities() const;

    friend auto operator<=>(const MultiIndexClass&, const MultiIndexClass&) = default;

private:
    std::vector<int> rep_;
};

/// Strictly increasing tuple with entries >= offset.
struct StrictIndexTuple {
    std::vector<int> entries;
    int offset = 0;

    StrictIndexTuple() = default;
    StrictIndexTuple(std::vector<int> e, int d);
    int degree() const;
};

using Permutation = std::vector<int>;

/// All permutations of {0..n-1} in lexicographic order. n <= 6.
std::vector<Permutation> all_permutations(int n);
int permutation_sign(const Permutation& p);

/// Number of partitions of k into at most n parts. 0 for negative k.
long long partition_count(int k, int n);

/// Number of ordered n-tuples of nonnegative integers summing to k,
/// C(k+n-1, n-1). Throws std::overflow_error instead of wrapping.
long long composition_count(long long k, int n);

/// All weakly increasing n-tuples of nonnegative integers summing to k, in
/// lexicographic order. Length equals partition_count(k, n).
std::vector<MultiIndexClass> enumerate_classes(int k, int n);

/// All strictly increasing n-tuples with entries >= d summing to k, lex order.
std::vector<StrictIndexTuple> enumerate_strict_tuples(int k, int n, int d);

/// Classes j such that some rearrangement of l added to j lands in the class
/// of i. At most arrangement_count(l) of them.
std::vector<MultiIndexClass> preimage_classes(const MultiIndexClass& i,
                                              const ExponentTuple& l);

/// Permutations p with <i + l_p> = <j>, where (l_p)_r = l[p[r]].
std::vector<Permutation> matching_permutations(const MultiIndexClass& j,
                                               const MultiIndexClass& i,
                                               const ExponentTuple& l);

/// Antisymmetric analogue of preimage_classes: strictly increasing tuples
/// j >= d such that for some rearrangement the shifted wedge vector equals the
/// wedge vector of v (sign included). v must have pairwise distinct entries.
std::vector<std::vector<int>> preimage_strict_tuples(const std::vector<int>& v,
                                                     const ExponentTuple& l, int d);

/// Permutations p such that the wedge vector of i + l_p equals the wedge
/// vector of the strictly increasing tuple j (sign included).
std::vector<Permutation> wedge_matching_permutations(const std::vector<int>& j,
                                                     const std::vector<int>& i,
                                                     const ExponentTuple& l);

/// Membership test for the perturbation box: v is some strictly increasing
/// tuple >= d moved entrywise by at most abs_sum(l), with all entries distinct.
bool in_perturbation_box(const std::vector<int>& v, const ExponentTuple& l, int d);

struct CensusRow {
    int k = 0;
    int target_degree = 0;           // k + signed_sum(l)
    long long source_partition_count = 0;  // P(k, n)
    long long target_partition_count = 0;  // P(target_degree, n)
    long long deficient_count = 0;   // classes at target degree with fewer than
                                     // arrangement_count(l) preimage classes
    std::vector<long long> preimage_histogram;  // bucket m = #classes with m preimages
    long long a_tilde = 0;           // full-count classes passing the window-min test
    long long a_check = 0;           // full-count classes failing it
    double flat_ratio = 0.0;         // a_tilde / P(k, n)
    double deficient_ratio = 0.0;    // deficient_count / max(1, target_degree)^(n-2)
};

struct AntisymCensusRow {
    int k = 0;
    int target_degree = 0;
    long long strict_count = 0;      // strictly increasing tuples >= d of degree k
    long long spread_count = 0;      // those with consecutive gaps > 4*abs_sum(l)
    long long box_count = 0;         // perturbation-box members of degree k
    std::vector<long long> preimage_histogram;  // over box members at target degree
    long long a_tilde_prime = 0;     // spread full-count members passing the window-min test
    double flat_ratio = 0.0;         // a_tilde_prime / strict_count
    double box_excess_ratio = 0.0;   // (box_count - spread_count) / max(1, k)^(n-2)
};

struct CensusReport {
    bool antisymmetric = false;
    int n = 0;
    std::vector<int> exponents;
    int offset = 0;                  // antisymmetric only
    int k_lo = 0, k_hi = 0;
    double epsilon = 0.0;
    std::string weight_desc;
    std::vector<CensusRow> rows;
    std::vector<AntisymCensusRow> antisym_rows;
};

/// Per-degree counting report over the symmetric class family: preimage
/// histogram, deficient classes, and the epsilon split of the full bucket.
/// epsilon must lie in (0,1).
CensusReport census(int n, const ExponentTuple& l, int k_lo, int k_hi,
                    double epsilon, const WeightSequence& w);

/// Antisymmetric counting report over strictly increasing tuples with offset d.
CensusReport census_antisym(int n, const ExponentTuple& l, int d, int k_lo,
                            int k_hi, double epsilon, const WeightSequence& w);

/// Checks that the permutations keeping i + l_p inside N^n are partitioned by
/// the matching-permutation sets, grouped by the preimage count of the target
/// class. |i| must equal k.
bool permutation_partition_check(const MultiIndexClass& i, const ExponentTuple& l,
                                 int k);

}  // namespace tensorshift
