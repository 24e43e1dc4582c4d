#pragma once

#include <chrono>
#include <limits>
#include <optional>

namespace domlab {

/// Wall-clock allowance for one solve. Default-constructed budgets never expire.
struct Budget {
    std::optional<std::chrono::duration<double>> limit;

    static Budget unlimited() { return {}; }
    static Budget seconds(double s) { return Budget{std::chrono::duration<double>(s)}; }
};

class Deadline {
public:
    explicit Deadline(const Budget& budget) {
        if (budget.limit)
            at_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(*budget.limit);
    }

    [[nodiscard]] bool expired() const {
        return at_ && std::chrono::steady_clock::now() >= *at_;
    }

    /// Remaining allowance as a budget, for nested solves that share one deadline.
    [[nodiscard]] Budget remaining() const {
        if (!at_) return Budget::unlimited();
        auto left = std::chrono::duration<double>(*at_ - std::chrono::steady_clock::now());
        return Budget{left.count() > 0 ? left : std::chrono::duration<double>(0)};
    }

private:
    std::optional<std::chrono::steady_clock::time_point> at_;
};

}  // namespace domlab
