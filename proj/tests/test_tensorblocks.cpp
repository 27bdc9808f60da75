#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "support/oracle.hpp"
#include "tensorshift/tensorblocks.hpp"

using namespace tensorshift;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

double entry(const GradedBlock& b, int r, int c) {
    for (const auto& [row, v] : b.columns[static_cast<size_t>(c)]) {
        if (row == r) return v;
    }
    return 0.0;
}

void check_against_oracle(const WeightSequence& w, const std::vector<int>& l, int k,
                          bool anti, double tol = 1e-12) {
    const ExponentTuple et(l);
    const GradedBlock block =
        anti ? build_wedge_block(w, et, k) : build_sym_block(w, et, k);
    const auto ref = oracle::compressed_block(w, l, k, anti);
    REQUIRE(block.cols() == ref.cols());
    REQUIRE(block.rows() == ref.rows());
    REQUIRE(block.source_basis == ref.source_basis);
    REQUIRE(block.target_basis == ref.target_basis);
    CHECK(ref.residual <= 1e-10);
    const auto dense = block.dense();
    for (size_t i = 0; i < dense.size(); ++i) {
        CHECK(std::abs(dense[i] - ref.entries[i]) <= tol);
    }
}

}  // namespace

TEST_CASE("basis norms") {
    CHECK(sym_basis_norm(std::vector<int>{0, 1}) == doctest::Approx(kInvSqrt2).epsilon(1e-15));
    CHECK(sym_basis_norm(std::vector<int>{1, 1}) == doctest::Approx(1.0));
    CHECK(sym_basis_norm(std::vector<int>{0, 0, 1}) ==
          doctest::Approx(std::sqrt(1.0 / 3.0)));
    CHECK(wedge_basis_norm(1) == 1.0);
    CHECK(wedge_basis_norm(2) == doctest::Approx(kInvSqrt2));
    CHECK(wedge_basis_norm(4) == doctest::Approx(1.0 / std::sqrt(24.0)));
}

TEST_CASE("symmetric blocks: worked entries") {
    const auto hardy = WeightSequence::constant(1.0);
    const ExponentTuple l({1, -1});

    // Degree 0: the only class maps to nothing.
    const auto b0 = build_sym_block(hardy, l, 0);
    CHECK(b0.cols() == 1);
    CHECK(b0.rows() == 1);
    CHECK(b0.columns[0].empty());

    // Degree 1: single class, entry 1/2.
    const auto b1 = build_sym_block(hardy, l, 1);
    CHECK(b1.cols() == 1);
    CHECK(entry(b1, 0, 0) == doctest::Approx(0.5).epsilon(1e-15));

    // Degree 2: antidiagonal with entries 1/sqrt(2).
    const auto b2 = build_sym_block(hardy, l, 2);
    REQUIRE(b2.cols() == 2);
    CHECK(entry(b2, 0, 0) == doctest::Approx(0.0));
    CHECK(entry(b2, 1, 1) == doctest::Approx(0.0));
    CHECK(entry(b2, 1, 0) == doctest::Approx(kInvSqrt2));
    CHECK(entry(b2, 0, 1) == doctest::Approx(kInvSqrt2));
}

TEST_CASE("wedge blocks: worked entries") {
    const auto hardy = WeightSequence::constant(1.0);

    // Forward pair: source (0,1) -> target (1,2) with entry 1.
    const auto fw = build_wedge_block(hardy, ExponentTuple({1, 1}), 1);
    REQUIRE(fw.cols() == 1);
    REQUIRE(fw.rows() == 1);
    CHECK(entry(fw, 0, 0) == doctest::Approx(1.0));

    // Zero powers: identity on every degree.
    const auto id = build_wedge_block(hardy, ExponentTuple({0, 0}), 5);
    REQUIRE(id.cols() == id.rows());
    for (int c = 0; c < id.cols(); ++c) {
        for (int r = 0; r < id.rows(); ++r) {
            CHECK(entry(id, r, c) == doctest::Approx(r == c ? 1.0 : 0.0));
        }
    }

    // Mixed pair at degree 1: the single entry is -1/2 after the sorting sign.
    const auto mixed = build_wedge_block(hardy, ExponentTuple({1, -1}), 1);
    REQUIRE(mixed.cols() == 1);
    CHECK(entry(mixed, 0, 0) == doctest::Approx(-0.5).epsilon(1e-15));
}

TEST_CASE("degenerate targets give explicit zero blocks") {
    const auto hardy = WeightSequence::constant(1.0);
    const auto neg = build_sym_block(hardy, ExponentTuple({-2, -2}), 1);
    CHECK(neg.rows() == 0);
    CHECK(neg.cols() == 1);  // the single degree-1 class
    for (const auto& col : neg.columns) CHECK(col.empty());

    // Below the minimal wedge degree the source basis is empty.
    const auto empty = build_wedge_block(hardy, ExponentTuple({1, -1}), 0);
    CHECK(empty.cols() == 0);
}

TEST_CASE("grading and column sparsity") {
    const auto w = WeightSequence::eventually_constant({1.0, 0.3}, 0.6);
    const ExponentTuple l({2, 1, -3});
    for (int k = 0; k <= 10; ++k) {
        const auto block = build_sym_block(w, l, k);
        long long fact = 1;
        for (int i = 2; i <= l.size(); ++i) fact *= i;
        for (int c = 0; c < block.cols(); ++c) {
            int src_deg = 0;
            for (int v : block.source_basis[static_cast<size_t>(c)]) src_deg += v;
            CHECK(src_deg == k);
            CHECK(block.columns[static_cast<size_t>(c)].size() <= static_cast<size_t>(fact));
            for (const auto& [r, v] : block.columns[static_cast<size_t>(c)]) {
                int tgt_deg = 0;
                for (int x : block.target_basis[static_cast<size_t>(r)]) tgt_deg += x;
                CHECK(tgt_deg == k + l.signed_sum());
            }
        }
    }
}

TEST_CASE("adjoint blocks are transposes") {
    const auto w = WeightSequence::eventually_constant({1.0, 0.3}, 0.6);
    const std::vector<std::vector<int>> ls = {{1, -1}, {2, 1}, {2, 1, -3}, {1, 1, -1}};
    for (const auto& lv : ls) {
        const ExponentTuple l(lv);
        std::vector<int> neg(lv);
        for (int& v : neg) v = -v;
        const ExponentTuple lneg(neg);
        for (int k = 0; k <= 12; ++k) {
            const int kt = k + l.signed_sum();
            if (kt < 0) continue;
            for (bool anti : {false, true}) {
                const auto fwd = anti ? build_wedge_block(w, l, k) : build_sym_block(w, l, k);
                const auto bwd =
                    anti ? build_wedge_block(w, lneg, kt) : build_sym_block(w, lneg, kt);
                REQUIRE(fwd.rows() == bwd.cols());
                REQUIRE(fwd.cols() == bwd.rows());
                for (int c = 0; c < fwd.cols(); ++c) {
                    for (const auto& [r, v] : fwd.columns[static_cast<size_t>(c)]) {
                        CHECK(entry(bwd, c, r) == doctest::Approx(v).epsilon(1e-12));
                    }
                }
            }
        }
    }
}

TEST_CASE("blocks match the full-tensor compression") {
    const auto hardy = WeightSequence::constant(1.0);
    const auto mixed = WeightSequence::eventually_constant({1.0}, 0.5);
    for (const auto& w : {hardy, mixed}) {
        for (int k = 0; k <= 6; ++k) {
            check_against_oracle(w, {1, -1}, k, false);
            check_against_oracle(w, {1, -1}, k, true);
            check_against_oracle(w, {2, -1}, k, false);
            check_against_oracle(w, {2, -1}, k, true);
            check_against_oracle(w, {1, 1, -1}, k, false);
            check_against_oracle(w, {1, 1, -1}, k, true);
            check_against_oracle(w, {2, 0, -2}, k, false);
            check_against_oracle(w, {2, 0, -2}, k, true);
        }
    }
}

TEST_CASE("symmetric vector tensors: worked values") {
    // e0 tensor e0.
    const auto t1 = sym_tensor_vectors({{1.0}, {1.0}});
    CHECK(t1.coefficient({0, 0}) == doctest::Approx(1.0));
    CHECK(t1.norm() == doctest::Approx(1.0));

    // e0 (.) e1: coefficient 1 on <0,1>, norm 1/sqrt(2).
    const auto t2 = sym_tensor_vectors({{1.0}, {0.0, 1.0}});
    CHECK(t2.coefficient({0, 1}) == doctest::Approx(1.0));
    CHECK(t2.norm() == doctest::Approx(kInvSqrt2));

    // ((e0+e1)/sqrt(2)) (.) e0: norm^2 = 3/4.
    const auto t3 = sym_tensor_vectors({{kInvSqrt2, kInvSqrt2}, {1.0}});
    CHECK(t3.norm() * t3.norm() == doctest::Approx(0.75).epsilon(1e-14));

    // Cancelling pair: (e0+e1) (.) (e0-e1) drops the cross class.
    const auto t4 = sym_tensor_vectors({{1.0, 1.0}, {1.0, -1.0}});
    CHECK(t4.coefficient({0, 1}) == 0.0);
    CHECK(t4.norm() == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("symmetric vector tensors match the full-space norm") {
    std::mt19937_64 rng(41);
    std::normal_distribution<double> dist(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2);
        std::vector<std::vector<double>> xs;
        for (int r = 0; r < n; ++r) {
            std::vector<double> x(1 + rng() % 5);
            for (auto& v : x) v = dist(rng);
            xs.push_back(std::move(x));
        }
        const double got = sym_tensor_vectors(xs).norm();
        const double want = oracle::full_space_sym_tensor_norm(xs);
        CHECK(got == doctest::Approx(want).epsilon(1e-11));
    }
}
