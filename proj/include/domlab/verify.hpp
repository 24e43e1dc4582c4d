#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "domlab/budget.hpp"
#include "domlab/graph.hpp"
#include "domlab/io.hpp"
#include "domlab/sat.hpp"

namespace domlab {

enum class RecordStatus { Ok, Fail, Timeout };

std::string_view to_string(RecordStatus s);

struct VerifyRecord {
    std::string instance;
    std::string digest;  // FNV-1a of the instance's canonical text
    std::string expected;
    std::string observed;
    RecordStatus status{RecordStatus::Ok};
};

struct VerifySummary {
    int ok{0};
    int fail{0};
    int timeout{0};
};

struct VerifyReport {
    std::string campaign;
    std::uint64_t seed{0};
    double budget_seconds{0};
    std::vector<VerifyRecord> records;

    [[nodiscard]] VerifySummary summary() const;
    [[nodiscard]] Json to_json() const;
    [[nodiscard]] std::string to_table() const;
    /// 1 on any fail, otherwise 3 on any timeout, otherwise 0.
    [[nodiscard]] int exit_code() const;
};

std::string fnv1a_hex(std::string_view text);

/// A deferred instance check; campaigns are lists of these.
using Check = std::function<VerifyRecord()>;

/// Runs the checks on up to `threads` workers; record order follows input order.
std::vector<VerifyRecord> run_checks(const std::vector<Check>& checks, int threads);

/// DOMATIC_LAB_THREADS if set and positive, else the hardware concurrency.
int default_threads();

// Built-in corpora, deterministic in the seed.

/// Every isomorphism class on 1..6 vertices, then seeded G(n, p) graphs on
/// 1..6 vertices until `total` graphs are listed.
std::vector<Graph> srp_corpus(std::uint64_t seed, std::size_t total = 500);

/// K3, C5, K4, W5 (hub plus C5), then 20 distinct seeded non-bipartite
/// graphs on 4..6 vertices without isolated vertices.
std::vector<std::pair<std::string, Graph>> lemma3_corpus(std::uint64_t seed);

struct NaePair {
    std::string name;
    Cnf3 h1;
    Cnf3 h2;
    int expected_gamma{0};  // 4 (Sat, Sat), 3 (Sat, Unsat), 2 (Unsat, Unsat)
};

/// The worked example pair plus `per_class` seeded pairs of each outcome class,
/// at most 4 variables and 2 clauses per side.
std::vector<NaePair> nae_corpus(std::uint64_t seed, int per_class = 7);

/// The worked NAE example pair.
std::pair<Cnf3, Cnf3> nae_figure_pair();

struct TripleCase {
    std::string name;
    TripleSystem system;
    bool satisfiable{false};
};

/// `per_class` seeded positive systems of each one-in-three outcome, on 3..5
/// variables, ordered by the size of their graph image.
std::vector<TripleCase> triple_corpus(std::uint64_t seed, int per_class = 10);

std::vector<std::string> campaign_names();

/// Throws InvalidArgument for an unknown campaign name.
VerifyReport run_campaign(const std::string& name, std::uint64_t seed, const Budget& budget, int threads);

}  // namespace domlab
