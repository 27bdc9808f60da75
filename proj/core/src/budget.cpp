#include "tensorshift/budget.hpp"

#include <atomic>

namespace tensorshift {

namespace {
std::atomic<long long> g_budget{5'000'000};
}

long long enumeration_budget() { return g_budget.load(); }

void set_enumeration_budget(long long visits) {
    if (visits <= 0) throw std::invalid_argument("enumeration budget must be positive");
    g_budget.store(visits);
}

void BudgetMeter::charge(long long visits) {
    used_ += visits;
    if (used_ > limit_) {
        throw BudgetExceeded("enumeration budget exceeded: " + std::to_string(used_) +
                             " visits > " + std::to_string(limit_));
    }
}

}  // namespace tensorshift
