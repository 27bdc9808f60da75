#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tensorshift {

/// A convergent weight sequence for a weighted shift S: e_i -> a_i e_{i+1}.
///
/// Two kinds are supported:
///  - EventuallyConstant: a finite prefix followed by the constant tail value
///    (which is also the limit).
///  - Parametric: a named closed-form family with a declared limit and a
///    declared monotone-tail direction, e.g. the Bergman-type family
///    a_i = sqrt((i+1)/(i+2)) increasing to 1.
///
/// Weights are nonnegative reals; a_i = 0 for i < 0 by convention. Regularity
/// and norm computations rely on the declared limit rather than on symbolic
/// limit evaluation.
///
/// Text form (shared with the CLI, bit-exact):
///   weightspec := "const:" REAL
///               | "prefix:" REAL ("," REAL)* ";tail:" REAL
///               | "bergman"
///               | "file:" PATH
/// where the file is a JSON document {"prefix": [REAL...], "tail": REAL}.
class WeightSequence {
public:
    enum class Kind { EventuallyConstant, Parametric };
    enum class Family { Bergman, Dirichlet };

    static WeightSequence constant(double value);
    static WeightSequence eventually_constant(std::vector<double> prefix, double tail);
    /// a_i = sqrt((i+1)/(i+2)), increasing, limit 1.
    static WeightSequence bergman();
    /// a_i = sqrt((i+2)/(i+1)), decreasing, limit 1. Library-only; not part of
    /// the weightspec grammar.
    static WeightSequence dirichlet();
    /// General parametric factory; tail_increasing may be left undeclared to
    /// model an uncertifiable input (is_regular rejects it).
    static WeightSequence parametric(Family family, double declared_limit,
                                     std::optional<bool> tail_increasing,
                                     long monotone_from = 0);

    Kind kind() const { return kind_; }
    /// a_i; zero for i < 0.
    double at(long i) const;
    /// Declared/constructed limit of the sequence.
    double limit() const { return limit_; }
    const std::vector<double>& prefix() const { return prefix_; }
    std::optional<bool> tail_increasing() const { return tail_increasing_; }
    /// Index from which a Parametric family is monotone (0 for the built-ins).
    long monotone_from() const { return monotone_from_; }
    /// Spec string that parses back to this sequence (EventuallyConstant and
    /// bergman; the dirichlet family prints its name but is not in the grammar).
    std::string description() const;
    /// Same weights multiplied by c > 0. EventuallyConstant only.
    WeightSequence scaled(double c) const;

private:
    WeightSequence() = default;

    Kind kind_ = Kind::EventuallyConstant;
    std::vector<double> prefix_;
    double limit_ = 0.0;
    Family family_ = Family::Bergman;
    std::optional<bool> tail_increasing_;
    long monotone_from_ = 0;
};

/// Signed exponent tuple (l_1,...,l_n); negative entries denote adjoint powers.
/// n is capped at 6 because several computations enumerate all n! permutations.
class ExponentTuple {
public:
    explicit ExponentTuple(std::vector<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }
    /// Sum of the entries; the degree shift of the graded blocks.
    int signed_sum() const;
    /// Sum of absolute values.
    int abs_sum() const;
    /// Largest absolute entry.
    int max_abs() const;
    /// Multiplicities of the distinct values, in increasing value order.
    std::vector<int> multiplicity_profile() const;
    /// Number of distinct rearrangements, n!/(prod of multiplicity factorials).
    long long arrangement_count() const;
    /// All distinct rearrangements in lexicographic order.
    std::vector<std::vector<int>> distinct_arrangements() const;
    bool all_equal() const;

    friend bool operator==(const ExponentTuple&, const ExponentTuple&) = default;

private:
    std::vector<int> entries_;
};

inline constexpr int kMaxTupleLength = 6;

/// Product of the weights over the window a power of the shift traverses from
/// index i: for t > 0 the indices i..i+t-1, for t < 0 the indices i+t..i-1,
/// and 1 for t = 0. Windows reaching below index 0 give 0.
double window_product(const WeightSequence& w, long i, long t);

/// Minimum weight over the same window; 1 for t = 0, 0 if the window reaches
/// below index 0.
double window_min(const WeightSequence& w, long i, long t);

struct RegularityDecision {
    bool regular = false;
    /// Smallest index whose weight exceeds the limit, when not regular.
    std::optional<long> witness;
};

/// A sequence is regular when its limit dominates every individual weight.
/// Exact for EventuallyConstant; for Parametric decided from the declared
/// monotone tail plus a scan of the pre-monotone indices. Throws
/// std::invalid_argument for Parametric inputs without a declared direction.
RegularityDecision is_regular(const WeightSequence& w);

/// Operator norm of the |l|-th shift power: sup_i of the window product.
/// The supremum includes the limit value even when it is not attained.
double power_norm(const WeightSequence& w, long l);

/// Error for malformed weightspec / exponent-list text; names the bad token.
class SpecParseError : public std::invalid_argument {
public:
    SpecParseError(const std::string& message, std::string token)
        : std::invalid_argument(message), token_(std::move(token)) {}
    const std::string& token() const { return token_; }

private:
    std::string token_;
};

WeightSequence parse_weightspec(const std::string& spec);
std::vector<int> parse_exponent_list(const std::string& text);

}  // namespace tensorshift
