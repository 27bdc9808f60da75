#pragma once

#include <stdexcept>
#include <string>

namespace tensorshift {

/// Thrown when an enumeration would visit more tuples than the configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Process-wide cap on enumeration work, counted in tuple visits.
/// Default 5'000'000; the CLI honors TENSORSHIFT_BUDGET.
long long enumeration_budget();
void set_enumeration_budget(long long visits);

/// Per-call meter. Charge once per materialized tuple.
class BudgetMeter {
public:
    BudgetMeter() : limit_(enumeration_budget()) {}
    explicit BudgetMeter(long long limit) : limit_(limit) {}

    void charge(long long visits = 1);
    long long used() const { return used_; }

private:
    long long used_ = 0;
    long long limit_;
};

}  // namespace tensorshift
