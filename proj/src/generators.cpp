#include "domlab/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "domlab/error.hpp"

namespace domlab {

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0) throw Error(ErrorCode::InvalidArgument, "need n >= 0 and 0 <= p <= 1");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

Cnf3 random_cnf3(int num_vars, int clauses, std::uint64_t seed) {
    if (num_vars < 1 || clauses < 0) throw Error(ErrorCode::InvalidArgument, "need at least one variable");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> var(0, num_vars - 1);
    std::bernoulli_distribution sign(0.5);
    std::vector<Clause> out;
    for (int i = 0; i < clauses; ++i) {
        Clause c;
        for (Literal& l : c) l = Literal{var(rng), sign(rng)};
        out.push_back(c);
    }
    return make_cnf3(num_vars, std::move(out));
}

TripleSystem random_triples(int num_vars, int sets, std::uint64_t seed) {
    if (num_vars < 3 || sets < 0) throw Error(ErrorCode::InvalidArgument, "need at least three variables");
    std::mt19937_64 rng(seed);
    std::vector<int> vars(static_cast<std::size_t>(num_vars));
    std::iota(vars.begin(), vars.end(), 0);
    std::vector<Clause> out;
    for (int i = 0; i < sets; ++i) {
        std::shuffle(vars.begin(), vars.end(), rng);
        std::array<int, 3> pick{vars[0], vars[1], vars[2]};
        std::sort(pick.begin(), pick.end());
        out.push_back(Clause{Literal{pick[0], false}, Literal{pick[1], false}, Literal{pick[2], false}});
    }
    return make_triple_system(num_vars, std::move(out));
}

TaskMatrix random_matrix(int n, int m, double density, std::uint64_t seed) {
    if (density < 0.0 || density > 1.0) throw Error(ErrorCode::InvalidArgument, "density outside [0, 1]");
    TaskMatrix out(n, m);
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(density);
    for (int j = 0; j < n; ++j)
        for (int p = 0; p < m; ++p) out.set(j, p, coin(rng));
    return out;
}

std::vector<Graph> nonisomorphic_graphs(int max_n) {
    if (max_n < 0 || max_n > 6) throw Error(ErrorCode::TooLarge, "isomorphism classes enumerated up to 6 vertices");
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> pairs;
        std::vector<std::vector<int>> pair_index(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                pair_index[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = static_cast<int>(pairs.size());
                pair_index[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = static_cast<int>(pairs.size());
                pairs.emplace_back(u, v);
            }
        std::vector<std::vector<int>> perms;
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        do perms.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));
        // Pair image under each permutation, so relabeling is a bit shuffle.
        std::vector<std::vector<int>> image(perms.size(), std::vector<int>(pairs.size()));
        for (std::size_t q = 0; q < perms.size(); ++q)
            for (std::size_t e = 0; e < pairs.size(); ++e)
                image[q][e] = pair_index[static_cast<std::size_t>(perms[q][static_cast<std::size_t>(pairs[e].first)])]
                                        [static_cast<std::size_t>(perms[q][static_cast<std::size_t>(pairs[e].second)])];

        const std::uint32_t total = std::uint32_t{1} << pairs.size();
        std::vector<char> seen(total, 0);
        for (std::uint32_t code = 0; code < total; ++code) {
            if (seen[code]) continue;
            // Codes are visited in increasing order, so the first member of
            // each orbit is its smallest encoding.
            for (const auto& img : image) {
                std::uint32_t mapped = 0;
                for (std::size_t e = 0; e < pairs.size(); ++e)
                    if ((code >> e) & 1U) mapped |= std::uint32_t{1} << img[e];
                seen[mapped] = 1;
            }
            std::vector<std::pair<Vertex, Vertex>> edges;
            for (std::size_t e = 0; e < pairs.size(); ++e)
                if ((code >> e) & 1U) edges.push_back(pairs[e]);
            out.push_back(build_graph(n, edges));
        }
    }
    return out;
}

std::vector<TaskMatrix> all_matrices(int n, int m) {
    if (n < 1 || m < 1 || n * m > 20) throw Error(ErrorCode::TooLarge, "matrix universe limited to 20 cells");
    std::vector<TaskMatrix> out;
    const std::uint32_t total = std::uint32_t{1} << (n * m);
    for (std::uint32_t code = 0; code < total; ++code) {
        TaskMatrix t(n, m);
        for (int c = 0; c < n * m; ++c) t.set(c / m, c % m, ((code >> c) & 1U) != 0);
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace domlab
