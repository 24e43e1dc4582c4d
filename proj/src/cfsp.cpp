#include "domlab/cfsp.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <unordered_map>

#include "domlab/error.hpp"

namespace domlab {

TaskMatrix::TaskMatrix(int n, int m) : n_(n), m_(m) {
    if (n < 1 || m < 1) throw Error(ErrorCode::InvalidArgument, "task matrix needs at least one job and one machine");
    cells_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(m), 0);
}

TaskMatrix TaskMatrix::from_rows(const std::vector<std::string>& rows) {
    if (rows.empty() || rows.front().empty()) throw Error(ErrorCode::ParseError, "task matrix has no cells");
    TaskMatrix out(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (std::size_t j = 0; j < rows.size(); ++j) {
        if (rows[j].size() != rows.front().size())
            throw Error(ErrorCode::ParseError, "row " + std::to_string(j + 1) + " has a different length");
        for (std::size_t p = 0; p < rows[j].size(); ++p) {
            const char c = rows[j][p];
            if (c != '0' && c != '1')
                throw Error(ErrorCode::ParseError, "row " + std::to_string(j + 1) + " contains '" + std::string(1, c) + "'");
            out.set(static_cast<int>(j), static_cast<int>(p), c == '1');
        }
    }
    return out;
}

std::size_t TaskMatrix::index(int j, int p) const {
    if (j < 0 || j >= n_ || p < 0 || p >= m_) throw Error(ErrorCode::InvalidArgument, "cell outside the task matrix");
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(p);
}

int TaskMatrix::task_count() const { return static_cast<int>(std::count(cells_.begin(), cells_.end(), 1)); }

int TaskMatrix::column_count(int p) const {
    int c = 0;
    for (int j = 0; j < n_; ++j) c += at(j, p) ? 1 : 0;
    return c;
}

std::vector<std::string> TaskMatrix::rows() const {
    std::vector<std::string> out;
    for (int j = 0; j < n_; ++j) {
        std::string row;
        for (int p = 0; p < m_; ++p) row += at(j, p) ? '1' : '0';
        out.push_back(std::move(row));
    }
    return out;
}

bool is_valid_schedule(const TaskMatrix& m, std::span<const Task> s) {
    if (static_cast<int>(s.size()) != m.task_count()) return false;
    std::vector<int> last_machine(static_cast<std::size_t>(m.jobs()), -1);
    std::vector<int> last_job(static_cast<std::size_t>(m.machines()), -1);
    for (const Task& t : s) {
        if (t.job < 0 || t.job >= m.jobs() || t.machine < 0 || t.machine >= m.machines()) return false;
        if (!m.at(t.job, t.machine)) return false;
        // Strict increase also rules out repeats.
        if (t.machine <= last_machine[static_cast<std::size_t>(t.job)]) return false;
        if (t.job <= last_job[static_cast<std::size_t>(t.machine)]) return false;
        last_machine[static_cast<std::size_t>(t.job)] = t.machine;
        last_job[static_cast<std::size_t>(t.machine)] = t.job;
    }
    return true;
}

int switch_count(std::span<const Task> s) {
    int c = 0;
    for (std::size_t i = 1; i < s.size(); ++i) c += s[i].machine != s[i - 1].machine ? 1 : 0;
    return c;
}

namespace {

void check_start(const TaskMatrix& m, StartMachine start) {
    if (start && (*start < 0 || *start >= m.machines()))
        throw Error(ErrorCode::InvalidArgument, "start machine " + std::to_string(*start) + " outside 0.." +
                                                    std::to_string(m.machines() - 1));
}

// Per-machine job lists and, per job, the rank of that job on each machine.
struct Columns {
    std::vector<std::vector<int>> jobs_on;  // [p] -> jobs in increasing order
    std::vector<std::vector<int>> rank;     // [j][p] -> position of j on p, or -1

    explicit Columns(const TaskMatrix& m)
        : jobs_on(static_cast<std::size_t>(m.machines())),
          rank(static_cast<std::size_t>(m.jobs()), std::vector<int>(static_cast<std::size_t>(m.machines()), -1)) {
        for (int p = 0; p < m.machines(); ++p)
            for (int j = 0; j < m.jobs(); ++j)
                if (m.at(j, p)) {
                    rank[static_cast<std::size_t>(j)][static_cast<std::size_t>(p)] =
                        static_cast<int>(jobs_on[static_cast<std::size_t>(p)].size());
                    jobs_on[static_cast<std::size_t>(p)].push_back(j);
                }
    }

    // Next task of machine p is ready under the given progress vector.
    [[nodiscard]] std::optional<int> ready_job(const std::vector<int>& progress, int p) const {
        const auto& col = jobs_on[static_cast<std::size_t>(p)];
        const int done = progress[static_cast<std::size_t>(p)];
        if (done >= static_cast<int>(col.size())) return std::nullopt;
        const int j = col[static_cast<std::size_t>(done)];
        for (int q = 0; q < p; ++q) {
            const int r = rank[static_cast<std::size_t>(j)][static_cast<std::size_t>(q)];
            if (r >= 0 && progress[static_cast<std::size_t>(q)] <= r) return std::nullopt;
        }
        return j;
    }
};

}  // namespace

CfspResult delta_min(const TaskMatrix& m, StartMachine start) {
    check_start(m, start);
    const int machines = m.machines();
    const Columns cols(m);

    // Mixed-radix code: progress digits, then the worker position in 0..m
    // (m = not yet placed).
    std::vector<std::uint64_t> radix(static_cast<std::size_t>(machines) + 1);
    double states = machines;
    std::uint64_t mult = 1;
    for (int p = 0; p < machines; ++p) {
        const int c = static_cast<int>(cols.jobs_on[static_cast<std::size_t>(p)].size());
        radix[static_cast<std::size_t>(p)] = mult;
        mult *= static_cast<std::uint64_t>(c + 1);
        states *= c + 1;
    }
    radix[static_cast<std::size_t>(machines)] = mult;
    if (states > kMaxCfspStates)
        throw Error(ErrorCode::TooLarge, "CFSP state space exceeds " + std::to_string(static_cast<long long>(kMaxCfspStates)));

    auto encode = [&](const std::vector<int>& progress, int worker) {
        std::uint64_t code = 0;
        for (int p = 0; p < machines; ++p)
            code += radix[static_cast<std::size_t>(p)] * static_cast<std::uint64_t>(progress[static_cast<std::size_t>(p)]);
        return code + radix[static_cast<std::size_t>(machines)] * static_cast<std::uint64_t>(worker);
    };
    auto decode = [&](std::uint64_t code, std::vector<int>& progress) {
        for (int p = 0; p < machines; ++p) {
            const auto c = cols.jobs_on[static_cast<std::size_t>(p)].size() + 1;
            progress[static_cast<std::size_t>(p)] = static_cast<int>(code % c);
            code /= c;
        }
        return static_cast<int>(code);
    };

    struct Entry {
        int dist;
        std::uint64_t parent;
    };
    constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
    std::unordered_map<std::uint64_t, Entry> seen;
    std::deque<std::uint64_t> queue;

    std::vector<int> progress(static_cast<std::size_t>(machines), 0);
    const std::uint64_t origin = encode(progress, start ? *start : machines);
    seen[origin] = {0, kNone};
    queue.push_back(origin);

    const int total = m.task_count();
    std::uint64_t goal = kNone;
    std::unordered_map<std::uint64_t, char> settled;
    while (!queue.empty()) {
        const std::uint64_t code = queue.front();
        queue.pop_front();
        if (settled.count(code)) continue;
        settled[code] = 1;
        const int dist = seen[code].dist;
        const int worker = decode(code, progress);
        int done = 0;
        for (int x : progress) done += x;
        if (done == total) {
            goal = code;
            break;
        }
        for (int p = 0; p < machines; ++p) {
            if (!cols.ready_job(progress, p)) continue;
            const int cost = (worker == machines || worker == p) ? 0 : 1;
            ++progress[static_cast<std::size_t>(p)];
            const std::uint64_t next = encode(progress, p);
            --progress[static_cast<std::size_t>(p)];
            auto it = seen.find(next);
            if (it != seen.end() && it->second.dist <= dist + cost) continue;
            seen[next] = {dist + cost, code};
            if (cost == 0)
                queue.push_front(next);
            else
                queue.push_back(next);
        }
    }
    if (goal == kNone) throw Error(ErrorCode::InvalidArgument, "no schedule reaches the final state");

    CfspResult result{seen[goal].dist, {}};
    std::vector<int> before(static_cast<std::size_t>(machines));
    for (std::uint64_t code = goal; seen[code].parent != kNone; code = seen[code].parent) {
        const int worker = decode(code, progress);
        decode(seen[code].parent, before);
        const int done = before[static_cast<std::size_t>(worker)];
        result.schedule.push_back(
            {cols.jobs_on[static_cast<std::size_t>(worker)][static_cast<std::size_t>(done)], worker});
    }
    std::reverse(result.schedule.begin(), result.schedule.end());
    return result;
}

int delta_min_bruteforce(const TaskMatrix& m, StartMachine start) {
    check_start(m, start);
    const int total = m.task_count();
    if (total > 10) throw Error(ErrorCode::TooLarge, std::to_string(total) + " tasks exceed the enumeration guard of 10");

    // Independent of Columns: readiness straight from the matrix.
    std::vector<char> done(static_cast<std::size_t>(m.jobs() * m.machines()), 0);
    auto is_done = [&](int j, int p) { return done[static_cast<std::size_t>(j * m.machines() + p)] != 0; };
    auto ready = [&](int j, int p) {
        if (!m.at(j, p) || is_done(j, p)) return false;
        for (int q = 0; q < p; ++q)
            if (m.at(j, q) && !is_done(j, q)) return false;
        for (int i = 0; i < j; ++i)
            if (m.at(i, p) && !is_done(i, p)) return false;
        return true;
    };

    Schedule s;
    int best = std::numeric_limits<int>::max();
    std::function<void()> extend = [&] {
        if (static_cast<int>(s.size()) == total) {
            int c = switch_count(s);
            if (start && !s.empty() && s.front().machine != *start) ++c;
            best = std::min(best, c);
            return;
        }
        for (int j = 0; j < m.jobs(); ++j)
            for (int p = 0; p < m.machines(); ++p)
                if (ready(j, p)) {
                    done[static_cast<std::size_t>(j * m.machines() + p)] = 1;
                    s.push_back({j, p});
                    extend();
                    s.pop_back();
                    done[static_cast<std::size_t>(j * m.machines() + p)] = 0;
                }
    };
    extend();
    return best;
}

TaskMatrix block_diagonal(std::span<const TaskMatrix> blocks) {
    if (blocks.empty()) throw Error(ErrorCode::InvalidArgument, "block_diagonal needs at least one block");
    int n = 0;
    int m = 0;
    for (const TaskMatrix& b : blocks) {
        n += b.jobs();
        m += b.machines();
    }
    TaskMatrix out(n, m);
    int row = 0;
    int col = 0;
    for (const TaskMatrix& b : blocks) {
        for (int j = 0; j < b.jobs(); ++j)
            for (int p = 0; p < b.machines(); ++p) out.set(row + j, col + p, b.at(j, p));
        row += b.jobs();
        col += b.machines();
    }
    return out;
}

int composition_offset(std::span<const TaskMatrix> blocks, const Budget& budget) {
    const Deadline deadline(budget);
    auto check = [&] {
        if (deadline.expired()) throw Error(ErrorCode::TimedOut, "composition offset exceeded its budget");
    };
    int sum = 0;
    for (const TaskMatrix& b : blocks) {
        check();
        sum += delta_min(b).switches;
    }
    check();
    return delta_min(block_diagonal(blocks)).switches - sum;
}

bool exact_cfsp(const TaskMatrix& m, const ExactSet& s, StartMachine start) {
    return s.contains(delta_min(m, start).switches);
}

ExactSet sk_from_z(int z, int k, int offset) {
    if (z % 2 != 0) throw Error(ErrorCode::OddZ, "z = " + std::to_string(z) + " is odd");
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "S_k needs k >= 1");
    std::vector<int> values;
    for (int i = 0; i < k; ++i) values.push_back(z + offset + 2 * i + 1);
    return ExactSet::make(std::move(values), 0);
}

}  // namespace domlab
