#include <bit>
#include <cstdint>

#include "domlab/error.hpp"
#include "domlab/partition.hpp"

namespace domlab {
namespace {

constexpr std::uint64_t kEnumerationLimit = 100'000'000;

bool member(const std::vector<char>& table, int count) { return table[static_cast<std::size_t>(count)] != 0; }

}  // namespace

SolveResult brute_force_partition(const Graph& g, int k, const SigmaRhoSpec& sigma, const SigmaRhoSpec& rho) {
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "class count must be at least 1");
    const int n = g.order();
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        total *= static_cast<std::uint64_t>(k);
        if (total > kEnumerationLimit)
            throw Error(ErrorCode::TooLarge, std::to_string(k) + "^" + std::to_string(n) + " assignments exceed 10^8");
    }

    std::vector<char> in_sigma(static_cast<std::size_t>(n) + 1), in_rho(static_cast<std::size_t>(n) + 1);
    for (int c = 0; c <= n; ++c) {
        in_sigma[static_cast<std::size_t>(c)] = sigma.contains(c);
        in_rho[static_cast<std::size_t>(c)] = rho.contains(c);
    }

    // n <= 26 here unless k == 1, in which case the single assignment is
    // checked directly.
    if (n > 64) {
        Partition p{k, std::vector<int>(static_cast<std::size_t>(n), 0)};
        const bool ok = check_partition(g, p, sigma, rho);
        return SolveResult{ok ? SolveStatus::Yes : SolveStatus::No, ok ? std::optional<Partition>(p) : std::nullopt, 1};
    }

    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
        adj[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
    }

    std::vector<int> cls(static_cast<std::size_t>(n), 0);
    std::vector<std::uint64_t> members(static_cast<std::size_t>(k));
    std::uint64_t visited = 0;
    while (true) {
        ++visited;
        std::fill(members.begin(), members.end(), 0);
        for (int v = 0; v < n; ++v) members[static_cast<std::size_t>(cls[static_cast<std::size_t>(v)])] |= std::uint64_t{1} << v;

        bool ok = true;
        for (int c = 0; c < k && ok; ++c)
            for (int v = 0; v < n && ok; ++v) {
                const int inside = std::popcount(adj[static_cast<std::size_t>(v)] & members[static_cast<std::size_t>(c)]);
                ok = cls[static_cast<std::size_t>(v)] == c ? member(in_sigma, inside) : member(in_rho, inside);
            }
        // Empty vertex set: every class is vacuously valid.
        if (ok) return SolveResult{SolveStatus::Yes, Partition{k, cls}, visited};

        int pos = 0;
        while (pos < n && ++cls[static_cast<std::size_t>(pos)] == k) cls[static_cast<std::size_t>(pos++)] = 0;
        if (pos == n) break;
    }
    return SolveResult{SolveStatus::No, std::nullopt, visited};
}

}  // namespace domlab
