#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "domlab/budget.hpp"
#include "domlab/graph.hpp"

namespace domlab {

/// Membership predicate over neighbor counts: c is a member iff it is listed
/// in the finite part or c >= cofinite_from.
class SigmaRhoSpec {
public:
    SigmaRhoSpec(std::vector<int> finite_members, std::optional<int> cofinite_from);

    static SigmaRhoSpec naturals() { return {{}, 0}; }
    static SigmaRhoSpec positive() { return {{}, 1}; }
    static SigmaRhoSpec zero() { return {{0}, std::nullopt}; }
    static SigmaRhoSpec one() { return {{1}, std::nullopt}; }
    static SigmaRhoSpec zero_one() { return {{0, 1}, std::nullopt}; }

    /// The five menu sets, in the order N, N+, {0}, {1}, {0,1}.
    static std::vector<SigmaRhoSpec> menu();

    /// CLI tokens: N, N+, 0, 1, 01. Throws ParseError otherwise.
    static SigmaRhoSpec parse(std::string_view token);
    /// Menu token when this is a menu set, otherwise a descriptive string.
    [[nodiscard]] std::string token() const;

    [[nodiscard]] bool contains(int count) const;
    /// Smallest member >= lo, or nullopt.
    [[nodiscard]] std::optional<int> first_at_least(int lo) const;
    /// Largest member <= hi, or nullopt.
    [[nodiscard]] std::optional<int> last_at_most(int hi) const;
    [[nodiscard]] bool meets(int lo, int hi) const;

    [[nodiscard]] const std::vector<int>& finite_members() const noexcept { return finite_; }
    [[nodiscard]] std::optional<int> cofinite_from() const noexcept { return cofinite_; }

    bool operator==(const SigmaRhoSpec&) const = default;

private:
    std::vector<int> finite_;  // sorted, deduplicated, all below cofinite_ when set
    std::optional<int> cofinite_;
};

enum class Monotonicity { Minimum, Maximum, Neither };

/// Minimum: every member of level k is also in level k+1 (0 in rho, so an
/// empty class can always be appended). Maximum: rho = N+ and sigma in
/// {N, N+}, where two classes can always be merged.
Monotonicity classify(const SigmaRhoSpec& sigma, const SigmaRhoSpec& rho);

/// In-set vertices need |N(u) ∩ U| in sigma, the rest need it in rho.
bool is_sigma_rho_set(const Graph& g, std::span<const Vertex> set, const SigmaRhoSpec& sigma,
                      const SigmaRhoSpec& rho);

/// Every class, empty ones included, must be a (sigma, rho)-set.
/// Throws PartitionMismatch when the partition does not cover exactly V(G).
bool check_partition(const Graph& g, const Partition& p, const SigmaRhoSpec& sigma, const SigmaRhoSpec& rho);

enum class SolveStatus { Yes, No, TimedOut };

std::string_view to_string(SolveStatus s);

struct SolveResult {
    SolveStatus status{SolveStatus::No};
    std::optional<Partition> witness;
    std::uint64_t nodes{0};
};

/// Largest class count the propagating solver accepts.
inline constexpr int kMaxClasses = 64;

/// Exact backtracking search for a (k, sigma, rho)-partition.
///
/// Domains are class bitmasks. Propagation keeps, for every vertex and class,
/// the interval [assigned in-class neighbors, assigned + still-possible] and
/// prunes values whose interval misses sigma (own class) or rho (other
/// classes), forcing or excluding supporters when only one count is left.
/// When 0 is not in rho, every closed neighborhood (open, if 0 is not in
/// sigma either) must meet all k classes; a neighborhood of exactly k
/// vertices therefore becomes an all-different constraint.
///
/// Branching picks the smallest domain (ties: higher degree, lower index)
/// and tries classes in index order, opening at most one previously unused
/// class per node.
SolveResult exists_partition(const Graph& g, int k, const SigmaRhoSpec& sigma, const SigmaRhoSpec& rho,
                             const Budget& budget = Budget::unlimited());

/// Exhaustive enumeration of all k^n class assignments. Independent of the
/// propagating solver. Throws TooLarge when k^n > 10^8.
SolveResult brute_force_partition(const Graph& g, int k, const SigmaRhoSpec& sigma, const SigmaRhoSpec& rho);

}  // namespace domlab
