#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "domlab/budget.hpp"
#include "domlab/exact_set.hpp"

namespace domlab {

/// n x m job/machine matrix: cell (j, p) set when job j needs machine p.
class TaskMatrix {
public:
    /// Throws InvalidArgument for n < 1 or m < 1.
    TaskMatrix(int n, int m);
    /// Rows of '0'/'1' characters; throws ParseError on ragged or bad rows.
    static TaskMatrix from_rows(const std::vector<std::string>& rows);

    [[nodiscard]] int jobs() const noexcept { return n_; }
    [[nodiscard]] int machines() const noexcept { return m_; }
    [[nodiscard]] bool at(int j, int p) const { return cells_[index(j, p)] != 0; }
    void set(int j, int p, bool value) { cells_[index(j, p)] = value ? 1 : 0; }

    [[nodiscard]] int task_count() const;
    /// Tasks on machine p.
    [[nodiscard]] int column_count(int p) const;
    [[nodiscard]] std::vector<std::string> rows() const;

    bool operator==(const TaskMatrix&) const = default;

private:
    [[nodiscard]] std::size_t index(int j, int p) const;

    int n_;
    int m_;
    std::vector<char> cells_;
};

struct Task {
    int job{0};
    int machine{0};

    auto operator<=>(const Task&) const = default;
};

using Schedule = std::vector<Task>;

/// Every task exactly once, jobs visit machines in increasing order and
/// machines take jobs in increasing order.
bool is_valid_schedule(const TaskMatrix& m, std::span<const Task> s);

/// Adjacent pairs on different machines.
int switch_count(std::span<const Task> s);

/// Machine the worker stands at before the first task; nullopt = free.
using StartMachine = std::optional<int>;

struct CfspResult {
    int switches{0};
    Schedule schedule;
};

/// Largest state space delta_min explores.
inline constexpr double kMaxCfspStates = 1e8;

/// Minimum number of machine switches over all valid schedules, with a
/// witness. 0-1 BFS over (per-machine progress, worker machine); a fixed
/// start machine charges one switch when the first task is elsewhere.
/// Throws TooLarge beyond kMaxCfspStates, InvalidArgument for a bad start.
CfspResult delta_min(const TaskMatrix& m, StartMachine start = std::nullopt);

/// Enumerates every valid schedule. Throws TooLarge above 10 tasks.
int delta_min_bruteforce(const TaskMatrix& m, StartMachine start = std::nullopt);

/// Throws InvalidArgument for an empty list.
TaskMatrix block_diagonal(std::span<const TaskMatrix> blocks);

/// delta_min(block_diagonal(blocks)) - sum of delta_min(block). Throws
/// TimedOut when the budget runs out between solves.
int composition_offset(std::span<const TaskMatrix> blocks, const Budget& budget = Budget::unlimited());

/// delta_min(m) in s.
bool exact_cfsp(const TaskMatrix& m, const ExactSet& s, StartMachine start = std::nullopt);

/// {z+offset+1, z+offset+3, ..., z+offset+2k-1}. Throws OddZ for odd z and
/// InvalidArgument for k < 1.
ExactSet sk_from_z(int z, int k, int offset = 0);

}  // namespace domlab
