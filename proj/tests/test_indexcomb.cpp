#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "support/oracle.hpp"
#include "tensorshift/indexcomb.hpp"

using namespace tensorshift;

namespace {

/// Restores the previous budget on scope exit.
struct BudgetGuard {
    long long saved = enumeration_budget();
    ~BudgetGuard() { set_enumeration_budget(saved); }
};

MultiIndexClass cls(std::vector<int> v) { return MultiIndexClass(std::move(v)); }

}  // namespace

TEST_CASE("partition counts against exhaustive enumeration") {
    CHECK(partition_count(4, 2) == 3);
    CHECK(partition_count(0, 3) == 1);
    CHECK(partition_count(-2, 3) == 0);
    for (int k = 0; k <= 20; ++k) {
        CHECK(partition_count(k, 1) == 1);
        for (int n = 1; n <= 4; ++n) {
            CHECK(partition_count(k, n) == oracle::count_weakly_increasing(k, n));
        }
    }
    CHECK(partition_count(20, 4) == 108);
    CHECK_THROWS_AS(partition_count(4, 0), std::invalid_argument);
}

TEST_CASE("composition counts") {
    CHECK(composition_count(4, 2) == 5);
    CHECK(composition_count(0, 3) == 1);
    CHECK(composition_count(10, 3) == 66);
    for (int k = 0; k <= 12; ++k) {
        for (int n = 1; n <= 4; ++n) {
            CHECK(composition_count(k, n) == oracle::count_ordered(k, n));
        }
    }
    CHECK_THROWS_AS(composition_count(1'000'000'000'000LL, 6), std::overflow_error);
}

TEST_CASE("class enumeration") {
    const auto pairs = enumerate_classes(2, 2);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].rep() == std::vector<int>{0, 2});
    CHECK(pairs[1].rep() == std::vector<int>{1, 1});

    const auto zero = enumerate_classes(0, 3);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].rep() == std::vector<int>{0, 0, 0});

    CHECK(enumerate_classes(20, 4).size() == 108);

    // Lexicographic order.
    const auto all = enumerate_classes(9, 3);
    CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("enumeration budget") {
    BudgetGuard guard;
    set_enumeration_budget(10);
    CHECK_THROWS_AS(enumerate_classes(60, 4), BudgetExceeded);
    set_enumeration_budget(5'000'000);
    CHECK_NOTHROW(enumerate_classes(30, 3));
    CHECK_THROWS_AS(set_enumeration_budget(0), std::invalid_argument);
}

TEST_CASE("multi-index classes") {
    const auto c = cls({3, 1, 1});
    CHECK(c.rep() == std::vector<int>{1, 1, 3});
    CHECK(c.degree() == 5);
    CHECK(c.multiplicities() == std::vector<int>{2, 1});
    CHECK_THROWS_AS(cls({-1, 2}), std::invalid_argument);
}

TEST_CASE("strict tuples") {
    CHECK_THROWS_AS(StrictIndexTuple({1, 1}, 0), std::invalid_argument);
    CHECK_THROWS_AS(StrictIndexTuple({0, 2}, 1), std::invalid_argument);
    const StrictIndexTuple t({1, 4}, 1);
    CHECK(t.degree() == 5);
    // d=1, degree 7: (1,6),(2,5),(3,4).
    CHECK(enumerate_strict_tuples(7, 2, 1).size() == 3);
    CHECK(enumerate_strict_tuples(1, 2, 1).empty());
}

TEST_CASE("preimage classes") {
    const ExponentTuple l({1, -1});
    const auto r1 = preimage_classes(cls({1, 1}), l);
    REQUIRE(r1.size() == 1);
    CHECK(r1[0].rep() == std::vector<int>{0, 2});

    const auto r2 = preimage_classes(cls({0, 2}), l);
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].rep() == std::vector<int>{1, 1});

    const ExponentTuple zero({0, 0, 0});
    const auto r3 = preimage_classes(cls({2, 3, 5}), zero);
    REQUIRE(r3.size() == 1);
    CHECK(r3[0].rep() == std::vector<int>{2, 3, 5});

    // Cardinality never exceeds the arrangement count.
    const ExponentTuple mixed({2, 1, -3});
    for (const auto& c : enumerate_classes(9, 3)) {
        CHECK(preimage_classes(c, mixed).size() <=
              static_cast<size_t>(mixed.arrangement_count()));
    }
}

TEST_CASE("matching permutations") {
    const ExponentTuple l({1, -1});
    const auto n1 = matching_permutations(cls({1, 1}), cls({0, 2}), l);
    REQUIRE(n1.size() == 1);
    CHECK(n1[0] == Permutation{0, 1});

    const ExponentTuple zero({0, 0});
    CHECK(matching_permutations(cls({0, 2}), cls({0, 2}), zero).size() == 2);

    CHECK(matching_permutations(cls({5, 9}), cls({0, 2}), l).empty());
}

TEST_CASE("repeated-entry classes lose an offset") {
    // Entries <= 12, n <= 4, exponents not all equal.
    const std::vector<ExponentTuple> ls = {ExponentTuple({1, -1}), ExponentTuple({2, 1, -3}),
                                           ExponentTuple({1, 1, -1, 0})};
    for (const auto& l : ls) {
        const int n = l.size();
        for (int deg = 0; deg <= 3 * n; ++deg) {
            for (const auto& j : enumerate_classes(deg, n)) {
                const auto mult = j.multiplicities();
                if (static_cast<int>(mult.size()) == n) continue;  // all distinct
                std::set<std::vector<int>> diffs;
                for (const auto& arr : l.distinct_arrangements()) {
                    std::vector<int> d = j.rep();
                    for (int r = 0; r < n; ++r) d[static_cast<size_t>(r)] -= arr[static_cast<size_t>(r)];
                    std::sort(d.begin(), d.end());
                    diffs.insert(d);
                }
                CHECK(static_cast<long long>(diffs.size()) <= l.arrangement_count() - 1);
            }
        }
    }
}

TEST_CASE("census: preimage histogram") {
    const auto hardy = WeightSequence::constant(1.0);
    const ExponentTuple l({1, -1});
    const auto report = census(2, l, 2, 2, 0.1, hardy);
    REQUIRE(report.rows.size() == 1);
    const auto& row = report.rows.front();
    CHECK(row.target_degree == 2);
    CHECK(row.preimage_histogram.size() == 3);
    CHECK(row.preimage_histogram[0] == 0);
    CHECK(row.preimage_histogram[1] == 2);  // <0,2> and <1,1>
    CHECK(row.preimage_histogram[2] == 0);
}

TEST_CASE("census: histogram sums to the partition count") {
    const auto hardy = WeightSequence::constant(1.0);
    const std::vector<ExponentTuple> ls = {ExponentTuple({1, -1}), ExponentTuple({1, 1, -1}),
                                           ExponentTuple({2, 1, -3})};
    for (const auto& l : ls) {
        const auto report = census(l.size(), l, 0, 30, 0.1, hardy);
        for (const auto& row : report.rows) {
            long long sum = 0;
            for (long long e : row.preimage_histogram) sum += e;
            CHECK(sum == row.target_partition_count);
            CHECK(row.a_tilde + row.a_check ==
                  row.preimage_histogram.back());
        }
    }
    // Worked value: P(10+0, 2) = 11 for the degree-10 row.
    const auto r = census(2, ExponentTuple({1, -1}), 10, 10, 0.1, hardy);
    long long sum = 0;
    for (long long e : r.rows.front().preimage_histogram) sum += e;
    CHECK(sum == 11);
}

TEST_CASE("census: equal exponents have no arrangements to lose") {
    const auto hardy = WeightSequence::constant(1.0);
    const ExponentTuple l({1, 1});
    const auto report = census(2, l, 0, 12, 0.1, hardy);
    for (const auto& row : report.rows) {
        // Full count is 1; deficient classes are exactly those with no preimage.
        CHECK(row.deficient_count == row.preimage_histogram[0]);
    }
}

TEST_CASE("antisym census counts") {
    const auto hardy = WeightSequence::constant(1.0);
    const ExponentTuple l({1, -1});
    const auto report = census_antisym(2, l, 1, 0, 20, 0.1, hardy);
    for (const auto& row : report.antisym_rows) {
        // Spread implies strict implies box-membership.
        CHECK(row.spread_count <= row.strict_count);
        CHECK(row.strict_count <= row.box_count);
        long long sum = 0;
        for (long long e : row.preimage_histogram) sum += e;
        // Histogram runs over the box members at the target degree.
        const auto target_row = std::find_if(
            report.antisym_rows.begin(), report.antisym_rows.end(),
            [&](const AntisymCensusRow& r) { return r.k == row.target_degree; });
        if (target_row != report.antisym_rows.end()) {
            CHECK(sum == target_row->box_count);
        }
    }
    // W_(7,2) with d=1: (1,6),(2,5),(3,4).
    CHECK(report.antisym_rows[7].strict_count == 3);

    // Strict counts match exhaustive enumeration.
    for (int k = 0; k <= 20; ++k) {
        CHECK(report.antisym_rows[static_cast<size_t>(k)].strict_count ==
              static_cast<long long>(oracle::strictly_increasing_tuples(k, 2, 1).size()));
    }
}

TEST_CASE("spread counts match exhaustive enumeration") {
    const auto hardy = WeightSequence::constant(1.0);
    for (int n = 2; n <= 3; ++n) {
        const ExponentTuple l(n == 2 ? std::vector<int>{1, -1} : std::vector<int>{1, 1, -1});
        const int gap = 4 * l.abs_sum();
        const auto report = census_antisym(n, l, 1, 0, 30, 0.1, hardy);
        for (int k = 0; k <= 30; ++k) {
            long long spread = 0;
            for (const auto& t : oracle::strictly_increasing_tuples(k, n, 1)) {
                bool ok = true;
                for (size_t r = 1; r < t.size(); ++r) {
                    if (t[r] - t[r - 1] <= gap) {
                        ok = false;
                        break;
                    }
                }
                if (ok) ++spread;
            }
            CHECK(report.antisym_rows[static_cast<size_t>(k)].spread_count == spread);
        }
    }
}

TEST_CASE("wedge preimages and matchings") {
    const ExponentTuple l({1, -1});
    // Spread tuple: both arrangements give strictly increasing preimages.
    const auto r = preimage_strict_tuples({10, 20}, l, 1);
    CHECK(r.size() == 2);
    for (const auto& p : r) {
        const auto matches = wedge_matching_permutations({10, 20}, p, l);
        CHECK(!matches.empty());
        CHECK(matches.size() <= 2);
    }

    // Box membership.
    CHECK(in_perturbation_box({1, 3}, l, 1));
    CHECK(in_perturbation_box({3, 1}, l, 1));     // nearly sorted reversal
    CHECK_FALSE(in_perturbation_box({9, 1}, l, 1));  // too far out of order
    CHECK_FALSE(in_perturbation_box({2, 2}, l, 1));  // repeated entries
}

TEST_CASE("wedge matching counts for spread pairs") {
    const ExponentTuple l({1, -1});
    for (int base = 9; base <= 12; ++base) {
        const std::vector<int> i = {base, base + 9};
        for (const auto& j : preimage_strict_tuples(i, l, 1)) {
            const auto count = wedge_matching_permutations(i, j, l).size();
            CHECK(count >= 1);
            CHECK(count <= 2);
        }
    }
}

TEST_CASE("permutation partition property") {
    const ExponentTuple zero({0, 0});
    CHECK(permutation_partition_check(cls({0, 2}), zero, 2));

    const ExponentTuple l({1, -1});
    CHECK(permutation_partition_check(cls({0, 2}), l, 2));

    const ExponentTuple l3({1, 1, -1});
    CHECK(permutation_partition_check(cls({1, 2, 3}), l3, 6));

    // Randomized sweep over small degrees.
    const std::vector<ExponentTuple> ls = {l, l3, ExponentTuple({2, 1, -3})};
    for (const auto& t : ls) {
        const int n = t.size();
        for (int k = 0; k <= 10; ++k) {
            for (const auto& c : enumerate_classes(k, n)) {
                CHECK(permutation_partition_check(c, t, k));
            }
        }
    }
}

TEST_CASE("census argument validation") {
    const auto hardy = WeightSequence::constant(1.0);
    const ExponentTuple l({1, -1});
    CHECK_THROWS_AS(census(3, l, 0, 5, 0.1, hardy), std::invalid_argument);
    CHECK_THROWS_AS(census(2, l, 0, 5, 0.0, hardy), std::invalid_argument);
    CHECK_THROWS_AS(census(2, l, 5, 0, 0.1, hardy), std::invalid_argument);
    CHECK_THROWS_AS(census_antisym(2, l, 0, 0, 5, 0.1, hardy), std::invalid_argument);
}
