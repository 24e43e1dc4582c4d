#include "domlab/domatic.hpp"

#include <algorithm>

#include "domlab/error.hpp"

namespace domlab {
namespace {

// Yes/No at level k; TimedOut becomes an exception.
bool level(const Graph& g, int k, const SigmaRhoSpec& sigma, const SigmaRhoSpec& rho, const Deadline& deadline) {
    const SolveResult r = exists_partition(g, k, sigma, rho, deadline.remaining());
    if (r.status == SolveStatus::TimedOut)
        throw Error(ErrorCode::TimedOut, "(" + std::to_string(k) + "," + sigma.token() + "," + rho.token() +
                                             ")-partition search exceeded its budget");
    return r.status == SolveStatus::Yes;
}

int ceil_half(int x) { return (x + 1) / 2; }

// Smallest k in [from, to] at level k for a minimum problem.
std::optional<int> ascend(const Graph& g, int from, int to, const SigmaRhoSpec& sigma, const SigmaRhoSpec& rho,
                          const Budget& budget) {
    const Deadline deadline(budget);
    for (int k = std::max(from, 1); k <= to; ++k) {
        if (k > kMaxClasses) throw Error(ErrorCode::TooLarge, "parameter search beyond " + std::to_string(kMaxClasses) + " classes");
        if (level(g, k, sigma, rho, deadline)) return k;
    }
    return std::nullopt;
}

}  // namespace

int greedy_clique_size(const Graph& g) {
    int best = g.order() > 0 ? 1 : 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        std::vector<Vertex> clique{s};
        std::vector<Vertex> cands(g.neighbors(s).begin(), g.neighbors(s).end());
        while (!cands.empty()) {
            auto it = std::max_element(cands.begin(), cands.end(),
                                       [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
            const Vertex pick = *it;
            clique.push_back(pick);
            std::erase_if(cands, [&](Vertex w) { return w == pick || !g.has_edge(w, pick); });
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

int domatic_number(const Graph& g, const Budget& budget) {
    const DegreeStats stats = degree_stats(g);
    if (stats.min_deg == 0) return 1;
    const Deadline deadline(budget);
    const auto sigma = SigmaRhoSpec::naturals();
    const auto rho = SigmaRhoSpec::positive();
    // Maximum problem bounded by min-deg + 1; without isolated vertices the
    // answer is at least 2, so the search stops before k = 2.
    for (int k = stats.min_deg + 1; k >= 3; --k)
        if (level(g, k, sigma, rho, deadline)) return k;
    return 2;
}

std::optional<int> gamma(const Graph& g, const Budget& budget) {
    if (g.order() == 0 || has_isolated_vertex(g)) return std::nullopt;
    const Deadline deadline(budget);
    const auto spec = SigmaRhoSpec::positive();
    for (int k = degree_stats(g).min_deg; k >= 2; --k)
        if (level(g, k, spec, spec, deadline)) return k;
    return 1;
}

int alpha(const Graph& g, const Budget& budget) {
    if (g.order() == 0) return 1;
    // A class meets any clique in at most two vertices.
    auto k = ascend(g, ceil_half(greedy_clique_size(g)), g.order(), SigmaRhoSpec::zero_one(), SigmaRhoSpec::naturals(), budget);
    return *k;  // singletons always work at k = n
}

std::optional<int> beta(const Graph& g, const Budget& budget) {
    // Every class induces a perfect matching, so V(G) needs one; pairing the
    // matched vertices then already works at k = n/2.
    if (g.order() == 0) return 1;
    if (g.order() % 2 != 0) return std::nullopt;
    return ascend(g, ceil_half(greedy_clique_size(g)), g.order() / 2, SigmaRhoSpec::one(), SigmaRhoSpec::naturals(), budget);
}

int chromatic_number(const Graph& g, const Budget& budget) {
    if (g.order() == 0) return 1;
    return *ascend(g, greedy_clique_size(g), g.order(), SigmaRhoSpec::zero(), SigmaRhoSpec::naturals(), budget);
}

bool exact_partition_decision(const Graph& g, int k, const SigmaRhoSpec& sigma, const SigmaRhoSpec& rho,
                              const Budget& budget) {
    const Monotonicity kind = classify(sigma, rho);
    if (kind == Monotonicity::Neither)
        throw Error(ErrorCode::NotMonotone,
                    "(" + sigma.token() + "," + rho.token() + ") is neither a minimum nor a maximum problem");
    const Deadline deadline(budget);
    if (kind == Monotonicity::Minimum) {
        if (k < 2) throw Error(ErrorCode::InvalidArgument, "exact minimum problems need k >= 2");
        return level(g, k, sigma, rho, deadline) && !level(g, k - 1, sigma, rho, deadline);
    }
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "exact maximum problems need k >= 1");
    return level(g, k, sigma, rho, deadline) && !level(g, k + 1, sigma, rho, deadline);
}

bool exact_domatic_in_set(const Graph& g, const ExactSet& values, const Budget& budget) {
    return values.contains(domatic_number(g, budget));
}

bool dnp_odd(const Graph& g, const Budget& budget) { return domatic_number(g, budget) % 2 == 1; }

bool dnp_equ(const Graph& g, const Graph& h, const Budget& budget) {
    const Deadline deadline(budget);
    const int dg = domatic_number(g, deadline.remaining());
    return dg == domatic_number(h, deadline.remaining());
}

bool dnp_geq(const Graph& g, const Graph& h, const Budget& budget) {
    const Deadline deadline(budget);
    const int dg = domatic_number(g, deadline.remaining());
    return dg >= domatic_number(h, deadline.remaining());
}

}  // namespace domlab
