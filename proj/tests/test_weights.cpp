#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <random>

#include "tensorshift/weights.hpp"

using namespace tensorshift;

TEST_CASE("window product: basic windows") {
    const auto hardy = WeightSequence::constant(1.0);
    const auto mixed = WeightSequence::eventually_constant({1.0}, 0.5);

    CHECK(window_product(hardy, 5, 0) == 1.0);
    CHECK(window_product(mixed, 0, 2) == doctest::Approx(0.5).epsilon(1e-15));
    // Window reaching index -1 vanishes by convention.
    CHECK(window_product(hardy, 1, -2) == 0.0);
    CHECK(window_product(mixed, 0, 1) == 1.0);
    CHECK(window_product(mixed, 3, -2) == doctest::Approx(0.25));
}

TEST_CASE("window min: basic windows") {
    const auto hardy = WeightSequence::constant(1.0);
    const auto mixed = WeightSequence::eventually_constant({1.0}, 0.5);

    CHECK(window_min(hardy, 7, 0) == 1.0);
    CHECK(window_min(hardy, 3, 4) == 1.0);
    CHECK(window_min(mixed, 0, 2) == doctest::Approx(0.5));
    CHECK(window_min(mixed, 1, -2) == 0.0);
}

TEST_CASE("window bounds against the sup and the min") {
    const auto w = WeightSequence::eventually_constant({0.3, 1.2, 0.9}, 0.8);
    const double sup = 1.2;
    for (long i = 0; i <= 8; ++i) {
        for (long t = -4; t <= 4; ++t) {
            const double beta = window_product(w, i, t);
            CHECK(beta <= std::pow(sup, std::abs(t)) + 1e-12);
            const long lo = t >= 0 ? i : i + t;
            if (lo >= 0) {
                const double gamma = window_min(w, i, t);
                CHECK(beta + 1e-12 >= std::pow(gamma, std::abs(t)));
            }
        }
    }
}

TEST_CASE("regularity decisions") {
    CHECK(is_regular(WeightSequence::constant(0.7)).regular);
    CHECK(is_regular(WeightSequence::bergman()).regular);

    const auto bad = is_regular(WeightSequence::eventually_constant({1.0}, 0.5));
    CHECK_FALSE(bad.regular);
    CHECK(bad.witness == 0);

    const auto later = is_regular(WeightSequence::eventually_constant({0.4, 0.9, 0.6}, 0.5));
    CHECK_FALSE(later.regular);
    CHECK(later.witness == 1);

    // Decreasing family: the literal definition rejects it, witness at 0.
    const auto dir = is_regular(WeightSequence::dirichlet());
    CHECK_FALSE(dir.regular);
    CHECK(dir.witness == 0);

    CHECK_THROWS_AS(
        is_regular(WeightSequence::parametric(WeightSequence::Family::Bergman, 1.0, std::nullopt)),
        std::invalid_argument);
}

TEST_CASE("regularity is scale invariant") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(0.1, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> prefix;
        const int len = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < len; ++i) prefix.push_back(dist(rng));
        const double tail = dist(rng);
        const auto w = WeightSequence::eventually_constant(prefix, tail);
        const double c = dist(rng) + 0.5;
        CHECK(is_regular(w).regular == is_regular(w.scaled(c)).regular);
    }
}

TEST_CASE("power norms") {
    CHECK(power_norm(WeightSequence::constant(1.0), 3) == 1.0);
    CHECK(power_norm(WeightSequence::eventually_constant({1.0}, 0.5), 2) ==
          doctest::Approx(0.5).epsilon(1e-15));
    // Increasing family: the supremum is the unattained limit.
    CHECK(power_norm(WeightSequence::bergman(), 1) == 1.0);
    CHECK(power_norm(WeightSequence::bergman(), 3) == 1.0);

    const auto berg = WeightSequence::bergman();
    double prev = 0.0;
    for (long i = 0; i < 1000; ++i) {
        const double b = window_product(berg, i, 1);
        CHECK(b < 1.0);
        CHECK(b >= prev);
        prev = b;
    }
    CHECK(window_product(berg, 1000000, 1) < 1.0);
}

TEST_CASE("power norm is adjoint symmetric") {
    const auto w = WeightSequence::eventually_constant({0.3, 1.2, 0.9}, 0.8);
    for (long l = 0; l <= 5; ++l) {
        CHECK(power_norm(w, l) == power_norm(w, -l));
    }
}

TEST_CASE("power norm matches the finite-window maximum") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(0.0, 1.5);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<double> prefix;
        const int len = static_cast<int>(rng() % 6);
        for (int i = 0; i < len; ++i) prefix.push_back(dist(rng));
        const auto w = WeightSequence::eventually_constant(prefix, dist(rng));
        for (long l = 0; l <= 4; ++l) {
            double best = 0.0;
            for (long i = 0; i <= static_cast<long>(prefix.size()) + l; ++i) {
                best = std::max(best, window_product(w, i, l));
            }
            if (l == 0) best = 1.0;
            CHECK(power_norm(w, l) == doctest::Approx(best).epsilon(1e-14));
        }
    }
}

TEST_CASE("exponent tuple invariants") {
    const ExponentTuple l({2, 1, -3});
    CHECK(l.signed_sum() == 0);
    CHECK(l.abs_sum() == 6);
    CHECK(l.max_abs() == 3);
    CHECK(l.arrangement_count() == 6);

    const ExponentTuple eq({2, 2, 2});
    CHECK(eq.arrangement_count() == 1);
    CHECK(eq.all_equal());

    const ExponentTuple pair({1, -1});
    CHECK(pair.arrangement_count() == 2);
    CHECK(pair.distinct_arrangements().size() == 2);

    // arrangement_count divides n! and equals 1 only for constant tuples.
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        std::vector<int> e;
        for (int i = 0; i < n; ++i) e.push_back(static_cast<int>(rng() % 5) - 2);
        const ExponentTuple t(e);
        long long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        CHECK(fact % t.arrangement_count() == 0);
        CHECK((t.arrangement_count() == 1) == t.all_equal());
        CHECK(static_cast<long long>(t.distinct_arrangements().size()) ==
              t.arrangement_count());
    }

    CHECK_THROWS_AS(ExponentTuple({}), std::invalid_argument);
    CHECK_THROWS_AS(ExponentTuple({1, 1, 1, 1, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("weightspec parsing") {
    const auto hardy = parse_weightspec("const:1");
    CHECK(hardy.kind() == WeightSequence::Kind::EventuallyConstant);
    CHECK(hardy.limit() == 1.0);

    const auto mixed = parse_weightspec("prefix:1.0,0.75;tail:0.5");
    CHECK(mixed.prefix().size() == 2);
    CHECK(mixed.at(1) == 0.75);
    CHECK(mixed.at(7) == 0.5);

    const auto berg = parse_weightspec("bergman");
    CHECK(berg.kind() == WeightSequence::Kind::Parametric);
    CHECK(berg.at(0) == doctest::Approx(std::sqrt(0.5)));

    // Round trip through the description.
    CHECK(parse_weightspec(mixed.description()).description() == mixed.description());
    CHECK(parse_weightspec(hardy.description()).description() == hardy.description());

    CHECK_THROWS_AS(parse_weightspec("nope"), SpecParseError);
    CHECK_THROWS_AS(parse_weightspec("const:abc"), SpecParseError);
    CHECK_THROWS_AS(parse_weightspec("prefix:1.0"), SpecParseError);
    CHECK_THROWS_AS(parse_weightspec("prefix:1.0;tail:x"), SpecParseError);
    try {
        parse_weightspec("const:abc");
        CHECK(false);
    } catch (const SpecParseError& e) {
        CHECK(e.token() == "abc");
    }
}

TEST_CASE("weight file parsing") {
    const std::string path = "test_weights_file.json";
    {
        std::ofstream out(path);
        out << "{\"prefix\": [1.0, 0.25], \"tail\": 0.5}\n";
    }
    const auto w = parse_weightspec("file:" + path);
    CHECK(w.at(0) == 1.0);
    CHECK(w.at(1) == 0.25);
    CHECK(w.at(2) == 0.5);
    CHECK(w.limit() == 0.5);
    std::remove(path.c_str());

    CHECK_THROWS_AS(parse_weightspec("file:does_not_exist.json"), SpecParseError);
}

TEST_CASE("exponent list parsing") {
    CHECK(parse_exponent_list("1,-1") == std::vector<int>{1, -1});
    CHECK(parse_exponent_list("2,1,-3") == std::vector<int>{2, 1, -3});
    CHECK_THROWS_AS(parse_exponent_list("1,x"), SpecParseError);
    CHECK_THROWS_AS(parse_exponent_list(""), SpecParseError);
    try {
        parse_exponent_list("1,2x");
        CHECK(false);
    } catch (const SpecParseError& e) {
        CHECK(e.token() == "2x");
    }
}

TEST_CASE("weights reject invalid values") {
    CHECK_THROWS_AS(WeightSequence::constant(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(WeightSequence::eventually_constant({0.5, -0.1}, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(WeightSequence::constant(std::nan("")), std::invalid_argument);
}
