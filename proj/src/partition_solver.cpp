#include <algorithm>
#include <bit>
#include <stdexcept>

#include "domlab/error.hpp"
#include "domlab/partition.hpp"

namespace domlab {
namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int c) { return Mask{1} << c; }

// O(1) interval queries against a count set over 0..max_count.
class CountTable {
public:
    CountTable(const SigmaRhoSpec& spec, int max_count) : next_(static_cast<std::size_t>(max_count) + 2), prev_(next_.size()) {
        const int none_above = max_count + 1;
        int last = -1;
        for (int c = 0; c <= max_count + 1; ++c) {
            if (c <= max_count && spec.contains(c)) last = c;
            prev_[static_cast<std::size_t>(c)] = last;
        }
        int nxt = none_above;
        for (int c = max_count + 1; c >= 0; --c) {
            if (c <= max_count && spec.contains(c)) nxt = c;
            next_[static_cast<std::size_t>(c)] = nxt;
        }
    }

    // Smallest member >= lo (max_count + 1 when none).
    [[nodiscard]] int next(int lo) const { return next_[static_cast<std::size_t>(lo)]; }
    // Largest member <= hi (-1 when none).
    [[nodiscard]] int prev(int hi) const { return prev_[static_cast<std::size_t>(hi)]; }
    [[nodiscard]] bool meets(int lo, int hi) const { return next(lo) <= hi; }

private:
    std::vector<int> next_;
    std::vector<int> prev_;
};

enum class Order { Degree, Weighted };

constexpr std::uint64_t kFirstLimit = 1000;

struct State {
    std::vector<int> cls;   // -1 while unassigned
    std::vector<Mask> dom;  // candidate classes
    std::vector<int> cnt;   // n * k: assigned neighbors per class
    Mask used = 0;          // classes holding at least one vertex
    int unassigned = 0;
};

class Solver {
public:
    Solver(const Graph& g, int k, const SigmaRhoSpec& sigma, const SigmaRhoSpec& rho, const Budget& budget)
        : g_(g),
          n_(g.order()),
          k_(k),
          full_(k == 64 ? ~Mask{0} : bit(k) - 1),
          sigma_(sigma),
          rho_(rho),
          sig_(sigma, max_degree(g)),
          rho_tab_(rho, max_degree(g)),
          deadline_(budget),
          ne_(static_cast<std::size_t>(g.order())),
          queued_(static_cast<std::size_t>(g.order()), 0),
          pot_(static_cast<std::size_t>(k), 0),
          weight_(static_cast<std::size_t>(g.order()), 1) {}

    SolveResult run() {
        SolveResult result;
        if (!build_hitting_constraints()) return result;

        stack_.resize(static_cast<std::size_t>(n_) + 2);
        State root;
        root.cls.assign(static_cast<std::size_t>(n_), -1);
        root.dom.assign(static_cast<std::size_t>(n_), full_);
        root.cnt.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(k_), 0);
        root.unassigned = n_;
        for (Vertex v = 0; v < n_; ++v) enqueue(v);
        if (!propagate(root)) return result;

        // Restarts alternating the two orderings with doubling node limits;
        // only a run that finishes under its limit proves No.
        for (std::uint64_t limit = kFirstLimit;; limit *= 2) {
            for (const Order order : {Order::Degree, Order::Weighted}) {
                order_ = order;
                run_limit_ = nodes_ + limit;
                aborted_ = false;
                stack_[0] = root;
                if (search(0)) {
                    result.status = SolveStatus::Yes;
                    result.witness = std::move(witness_);
                } else if (timed_out_) {
                    result.status = SolveStatus::TimedOut;
                } else if (!aborted_) {
                    result.status = SolveStatus::No;
                } else {
                    continue;
                }
                result.nodes = nodes_;
                return result;
            }
        }
    }

private:
    static int max_degree(const Graph& g) {
        int d = 0;
        for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
        return d;
    }

    // With 0 not in rho, every class has to show up in N[v] (in N(v) when 0 is
    // not in sigma either). Too small a neighborhood refutes the instance
    // outright; an exactly-k neighborhood must be rainbow.
    bool build_hitting_constraints() {
        if (rho_.contains(0)) return true;
        const bool open = !sigma_.contains(0);
        for (Vertex v = 0; v < n_; ++v) {
            std::vector<Vertex> hood(g_.neighbors(v).begin(), g_.neighbors(v).end());
            if (!open) hood.push_back(v);
            const int size = static_cast<int>(hood.size());
            if (size < k_) return false;
            if (size > k_) continue;
            for (Vertex a : hood)
                for (Vertex b : hood)
                    if (a != b) ne_[static_cast<std::size_t>(a)].push_back(b);
        }
        for (auto& list : ne_) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
        }
        return true;
    }

    void enqueue(Vertex v) {
        auto& q = queued_[static_cast<std::size_t>(v)];
        if (!q) {
            q = 1;
            queue_.push_back(v);
        }
    }

    void clear_queue() {
        for (Vertex v : queue_) queued_[static_cast<std::size_t>(v)] = 0;
        queue_.clear();
    }

    bool propagate(State& s) {
        while (!queue_.empty()) {
            const Vertex v = queue_.back();
            queue_.pop_back();
            queued_[static_cast<std::size_t>(v)] = 0;
            if (!check_vertex(s, v)) {
                ++weight_[static_cast<std::size_t>(v)];
                clear_queue();
                return false;
            }
        }
        return true;
    }

    bool assign(State& s, Vertex v, int c) {
        const auto vi = static_cast<std::size_t>(v);
        if (s.cls[vi] != -1) return s.cls[vi] == c;
        if (!(s.dom[vi] & bit(c))) return false;
        s.cls[vi] = c;
        s.dom[vi] = bit(c);
        s.used |= bit(c);
        --s.unassigned;
        for (Vertex w : g_.neighbors(v)) {
            ++s.cnt[static_cast<std::size_t>(w) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)];
            enqueue(w);
        }
        enqueue(v);
        for (Vertex w : ne_[vi]) {
            const Mask d = s.dom[static_cast<std::size_t>(w)];
            if ((d & bit(c)) && !restrict(s, w, d & ~bit(c))) return false;
        }
        return true;
    }

    bool restrict(State& s, Vertex v, Mask nd) {
        const auto vi = static_cast<std::size_t>(v);
        if (nd == s.dom[vi]) return true;
        if (nd == 0) return false;
        s.dom[vi] = nd;
        for (Vertex w : g_.neighbors(v)) enqueue(w);
        enqueue(v);
        if (std::popcount(nd) == 1) return assign(s, v, std::countr_zero(nd));
        return true;
    }

    bool check_vertex(State& s, Vertex v) {
        const auto vi = static_cast<std::size_t>(v);
        std::fill(pot_.begin(), pot_.end(), 0);
        for (Vertex w : g_.neighbors(v)) {
            if (s.cls[static_cast<std::size_t>(w)] != -1) continue;
            for (Mask d = s.dom[static_cast<std::size_t>(w)]; d; d &= d - 1) ++pot_[static_cast<std::size_t>(std::countr_zero(d))];
        }
        const std::size_t base = vi * static_cast<std::size_t>(k_);

        if (const int own = s.cls[vi]; own != -1) {
            for (int c = 0; c < k_; ++c) {
                const CountTable& tab = c == own ? sig_ : rho_tab_;
                const int lo = s.cnt[base + static_cast<std::size_t>(c)];
                const int p = pot_[static_cast<std::size_t>(c)];
                const int hi = lo + p;
                const int x = tab.next(lo);
                if (x > hi) return false;
                if (p == 0 || x != tab.prev(hi) || (x != lo && x != hi)) continue;
                // The only admissible count is an end of the interval: either
                // every possible supporter joins c, or none of them does.
                const bool all = x == hi;
                for (Vertex w : g_.neighbors(v)) {
                    const auto wi = static_cast<std::size_t>(w);
                    if (s.cls[wi] != -1 || !(s.dom[wi] & bit(c))) continue;
                    const bool ok = all ? assign(s, w, c) : restrict(s, w, s.dom[wi] & ~bit(c));
                    if (!ok) return false;
                }
            }
            return true;
        }

        const Mask d = s.dom[vi];
        Mask nd = d;
        int must = -1;
        for (int c = 0; c < k_; ++c) {
            const int lo = s.cnt[base + static_cast<std::size_t>(c)];
            const int hi = lo + pot_[static_cast<std::size_t>(c)];
            if ((d & bit(c)) && !sig_.meets(lo, hi)) nd &= ~bit(c);
            if (!rho_tab_.meets(lo, hi)) {
                if (must != -1) return false;
                must = c;
            }
        }
        if (must != -1) nd &= bit(must);
        return restrict(s, v, nd);
    }

    // Degree: smallest domain, ties by higher degree, then lower index.
    // Weighted: smallest domain relative to the failure weight of the
    // constraints the vertex takes part in (its own and its neighbors').
    Vertex pick(const State& s) const {
        Vertex best = -1;
        std::uint64_t best_size = 0;
        std::uint64_t best_weight = 1;
        for (Vertex v = 0; v < n_; ++v) {
            if (s.cls[static_cast<std::size_t>(v)] != -1) continue;
            const auto size = static_cast<std::uint64_t>(std::popcount(s.dom[static_cast<std::size_t>(v)]));
            std::uint64_t w = 1;
            if (order_ == Order::Weighted) {
                w = weight_[static_cast<std::size_t>(v)];
                for (Vertex u : g_.neighbors(v)) w += weight_[static_cast<std::size_t>(u)];
            }
            if (best == -1 || size * best_weight < best_size * w ||
                (size * best_weight == best_size * w && g_.degree(v) > g_.degree(best))) {
                best = v;
                best_size = size;
                best_weight = w;
            }
        }
        return best;
    }

    bool search(std::size_t depth) {
        ++nodes_;
        if ((nodes_ & 255U) == 0 && deadline_.expired()) {
            timed_out_ = true;
            return false;
        }
        if (nodes_ > run_limit_) {
            aborted_ = true;
            return false;
        }
        const State& s = stack_[depth];
        if (s.unassigned == 0) {
            Partition p{k_, s.cls};
            if (!check_partition(g_, p, sigma_, rho_))
                throw std::logic_error("propagating solver produced an invalid partition");
            witness_ = std::move(p);
            return true;
        }

        const Vertex v = pick(s);
        Mask candidates = s.dom[static_cast<std::size_t>(v)];
        // Classes without members are interchangeable; try only the first one.
        if (const Mask unused = full_ & ~s.used; unused) candidates &= s.used | (unused & (~unused + 1));

        for (Mask rest = candidates; rest; rest &= rest - 1) {
            const int c = std::countr_zero(rest);
            stack_[depth + 1] = stack_[depth];
            State& t = stack_[depth + 1];
            if (assign(t, v, c) && propagate(t)) {
                if (search(depth + 1)) return true;
                if (timed_out_ || aborted_) return false;
            } else {
                clear_queue();
            }
        }
        return false;
    }

    const Graph& g_;
    int n_;
    int k_;
    Mask full_;
    const SigmaRhoSpec& sigma_;
    const SigmaRhoSpec& rho_;
    CountTable sig_;
    CountTable rho_tab_;
    Deadline deadline_;
    std::vector<std::vector<Vertex>> ne_;
    std::vector<Vertex> queue_;
    std::vector<char> queued_;
    std::vector<int> pot_;
    std::vector<std::uint64_t> weight_;  // failures caused by each vertex's constraint
    std::vector<State> stack_;
    std::optional<Partition> witness_;
    std::uint64_t nodes_ = 0;
    std::uint64_t run_limit_ = 0;
    Order order_ = Order::Degree;
    bool timed_out_ = false;
    bool aborted_ = false;
};

}  // namespace

SolveResult exists_partition(const Graph& g, int k, const SigmaRhoSpec& sigma, const SigmaRhoSpec& rho,
                             const Budget& budget) {
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "class count must be at least 1");
    if (k > kMaxClasses) throw Error(ErrorCode::TooLarge, "class count above " + std::to_string(kMaxClasses));
    if (g.order() == 0) return SolveResult{SolveStatus::Yes, Partition{k, {}}, 0};
    return Solver(g, k, sigma, rho, budget).run();
}

}  // namespace domlab
