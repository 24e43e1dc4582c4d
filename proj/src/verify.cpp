#include "domlab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "domlab/cfsp.hpp"
#include "domlab/domatic.hpp"
#include "domlab/error.hpp"
#include "domlab/generators.hpp"
#include "domlab/partition.hpp"
#include "domlab/reductions.hpp"

namespace domlab {

std::string_view to_string(RecordStatus s) {
    switch (s) {
        case RecordStatus::Ok: return "ok";
        case RecordStatus::Fail: return "fail";
        case RecordStatus::Timeout: return "timeout";
    }
    return "?";
}

VerifySummary VerifyReport::summary() const {
    VerifySummary s;
    for (const auto& r : records) {
        switch (r.status) {
            case RecordStatus::Ok: ++s.ok; break;
            case RecordStatus::Fail: ++s.fail; break;
            case RecordStatus::Timeout: ++s.timeout; break;
        }
    }
    return s;
}

Json VerifyReport::to_json() const {
    const VerifySummary s = summary();
    Json recs = Json::array();
    for (const auto& r : records)
        recs.push_back({{"instance", r.instance},
                        {"digest", r.digest},
                        {"expected", r.expected},
                        {"observed", r.observed},
                        {"status", std::string(to_string(r.status))}});
    return Json{{"campaign", campaign},
                {"seed", seed},
                {"budget_seconds", budget_seconds},
                {"summary", {{"ok", s.ok}, {"fail", s.fail}, {"timeout", s.timeout}}},
                {"records", recs}};
}

std::string VerifyReport::to_table() const {
    std::size_t w_inst = 8;
    std::size_t w_exp = 8;
    for (const auto& r : records) {
        w_inst = std::max(w_inst, r.instance.size());
        w_exp = std::max(w_exp, r.expected.size());
    }
    auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
    std::ostringstream out;
    out << "campaign " << campaign << "  seed " << seed << "  budget " << budget_seconds << "s\n";
    out << pad("instance", w_inst) << "  " << pad("expected", w_exp) << "  status   observed\n";
    for (const auto& r : records)
        out << pad(r.instance, w_inst) << "  " << pad(r.expected, w_exp) << "  " << pad(std::string(to_string(r.status)), 7)
            << "  " << r.observed << "\n";
    const VerifySummary s = summary();
    out << "ok " << s.ok << "  fail " << s.fail << "  timeout " << s.timeout << "\n";
    return out.str();
}

int VerifyReport::exit_code() const {
    const VerifySummary s = summary();
    if (s.fail > 0) return 1;
    return s.timeout > 0 ? 3 : 0;
}

std::string fnv1a_hex(std::string_view text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<VerifyRecord> run_checks(const std::vector<Check>& checks, int threads) {
    std::vector<VerifyRecord> out(checks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < checks.size(); i = next++) out[i] = checks[i]();
    };
    const auto count = static_cast<std::size_t>(std::max(1, threads));
    if (count == 1 || checks.size() < 2) {
        worker();
        return out;
    }
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < std::min(count, checks.size()); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return out;
}

int default_threads() {
    if (const char* env = std::getenv("DOMATIC_LAB_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

using Outcome = std::pair<std::string, bool>;  // observed text, ok

// Runs one check; TimedOut becomes a timeout record, other errors a failure.
VerifyRecord guarded(std::string instance, std::string digest, std::string expected,
                     const std::function<Outcome()>& body) {
    VerifyRecord r{std::move(instance), std::move(digest), std::move(expected), "", RecordStatus::Ok};
    try {
        auto [observed, ok] = body();
        r.observed = std::move(observed);
        r.status = ok ? RecordStatus::Ok : RecordStatus::Fail;
    } catch (const Error& e) {
        r.observed = e.what();
        r.status = e.code() == ErrorCode::TimedOut ? RecordStatus::Timeout : RecordStatus::Fail;
    } catch (const std::exception& e) {
        r.observed = e.what();
        r.status = RecordStatus::Fail;
    }
    return r;
}

std::string graph_digest(const Graph& g) { return fnv1a_hex(write_dimacs(g)); }

std::uint64_t mix(std::uint64_t seed, std::uint64_t i) { return seed * 1000003ULL + i; }

const SigmaRhoSpec kN = SigmaRhoSpec::naturals();
const SigmaRhoSpec kNplus = SigmaRhoSpec::positive();

Partition domatic_witness(const Graph& g, int k, const Budget& budget) {
    SolveResult r = exists_partition(g, k, kN, kNplus, budget);
    if (r.status == SolveStatus::TimedOut) throw Error(ErrorCode::TimedOut, "witness search exceeded its budget");
    if (r.status != SolveStatus::Yes) throw Error(ErrorCode::InvalidArgument, "no domatic partition at the claimed value");
    return *r.witness;
}

struct KsOperand {
    std::string name;
    DecoratedGraph h;
};

std::vector<KsOperand> ks_operands() {
    return {{"ks(K3)", kaplan_shamir(complete_graph(3))}, {"ks(K4)", kaplan_shamir(complete_graph(4))}};
}

// --- partition campaigns -------------------------------------------------

std::vector<Check> oracle_srp(std::uint64_t seed, const Budget& budget) {
    std::vector<Check> checks;
    const auto corpus = srp_corpus(seed);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        checks.push_back([g = corpus[i], i, budget] {
            return guarded("g" + std::to_string(i) + " n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()),
                           graph_digest(g), "solver = brute force, k 1..4, 25 pairs", [&]() -> Outcome {
                               const auto menu = SigmaRhoSpec::menu();
                               for (int k = 1; k <= 4; ++k)
                                   for (const auto& s : menu)
                                       for (const auto& r : menu) {
                                           const SolveResult a = exists_partition(g, k, s, r, budget);
                                           if (a.status == SolveStatus::TimedOut)
                                               throw Error(ErrorCode::TimedOut, "solver budget exceeded");
                                           const SolveResult b = brute_force_partition(g, k, s, r);
                                           const std::string where =
                                               " at k=" + std::to_string(k) + " sigma=" + s.token() + " rho=" + r.token();
                                           if (a.status != b.status)
                                               return {std::string("solver ") + std::string(to_string(a.status)) +
                                                           " vs oracle " + std::string(to_string(b.status)) + where,
                                                       false};
                                           if (a.witness && !check_partition(g, *a.witness, s, r))
                                               return {"invalid witness" + where, false};
                                       }
                               return {"agree", true};
                           });
        });
    }
    return checks;
}

std::vector<Check> fact1(std::uint64_t seed, const Budget& budget) {
    std::vector<Check> checks;
    const auto corpus = srp_corpus(seed);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        checks.push_back([g = corpus[i], i, budget] {
            return guarded("g" + std::to_string(i) + " n=" + std::to_string(g.order()), graph_digest(g),
                           "monotone levels k 1..5", [&]() -> Outcome {
                               const auto menu = SigmaRhoSpec::menu();
                               for (const auto& s : menu)
                                   for (const auto& r : menu) {
                                       const Monotonicity kind = classify(s, r);
                                       if (kind == Monotonicity::Neither) continue;
                                       std::array<bool, 6> yes{};
                                       for (int k = 1; k <= 5; ++k) {
                                           const SolveResult a = exists_partition(g, k, s, r, budget);
                                           if (a.status == SolveStatus::TimedOut)
                                               throw Error(ErrorCode::TimedOut, "solver budget exceeded");
                                           yes[static_cast<std::size_t>(k)] = a.status == SolveStatus::Yes;
                                       }
                                       for (int k = 1; k <= 4; ++k) {
                                           const bool lo = yes[static_cast<std::size_t>(k)];
                                           const bool hi = yes[static_cast<std::size_t>(k + 1)];
                                           const bool broken = kind == Monotonicity::Minimum ? (lo && !hi) : (hi && !lo);
                                           if (broken)
                                               return {"violated at k=" + std::to_string(k) + " sigma=" + s.token() +
                                                           " rho=" + r.token(),
                                                       false};
                                       }
                                   }
                               return {"monotone", true};
                           });
        });
    }
    return checks;
}

std::vector<Check> lemma3(std::uint64_t seed, const Budget& budget) {
    std::vector<Check> checks;
    for (auto& [name, g] : lemma3_corpus(seed)) {
        checks.push_back([name = name, g = g, budget] {
            return guarded(name, graph_digest(g), "chi=3 <=> delta(ks)=3, else 2", [&]() -> Outcome {
                const Deadline deadline(budget);
                const int chi = chromatic_number(g, deadline.remaining());
                const int d = domatic_number(kaplan_shamir(g).graph, deadline.remaining());
                const bool ok = chi == 3 ? d == 3 : (chi >= 4 && d == 2);
                return {"chi=" + std::to_string(chi) + " delta(ks)=" + std::to_string(d), ok};
            });
        });
    }
    return checks;
}

// --- gadget campaigns ----------------------------------------------------

std::vector<Check> thm1(const Budget& budget) {
    std::vector<Check> checks;
    const auto ops = ks_operands();
    const std::array<std::pair<int, int>, 3> pairs{{{0, 0}, {0, 1}, {1, 1}}};
    for (auto [a, b] : pairs) {
        const KsOperand& x = ops[static_cast<std::size_t>(a)];
        const KsOperand& y = ops[static_cast<std::size_t>(b)];
        const std::string name = "gadget_join(" + x.name + "," + y.name + ")";
        checks.push_back([x, y, name, budget] {
            const Graph joined = gadget_join(x.h, y.h);
            const int d1 = domatic_number(x.h.graph);
            const int d2 = domatic_number(y.h.graph);
            const int target = d1 + d2;
            return guarded(name, graph_digest(joined),
                           "delta=" + std::to_string(target) + " (" + std::to_string(d1) + "+" + std::to_string(d2) + ")",
                           [&]() -> Outcome {
                               try {
                                   const int d = domatic_number(joined, budget);
                                   return {"delta=" + std::to_string(d), d == target};
                               } catch (const Error& e) {
                                   if (e.code() != ErrorCode::TimedOut) throw;
                               }
                               // Full search ran out: accept a constructive
                               // lower bound plus a completed refutation above it.
                               const std::array<DecoratedGraph, 2> hs{x.h, y.h};
                               const std::array<Partition, 2> ps{domatic_witness(x.h.graph, d1, budget),
                                                                 domatic_witness(y.h.graph, d2, budget)};
                               const Partition lower = extend_domatic_partitions(hs, ps);
                               const bool valid = lower.k == target && check_partition(joined, lower, kN, kNplus);
                               const SolveResult above = exists_partition(joined, target + 1, kN, kNplus, budget);
                               if (above.status == SolveStatus::TimedOut)
                                   throw Error(ErrorCode::TimedOut, "refutation above the target exceeded its budget");
                               return {"delta=" + std::to_string(target) + " by construction and refutation",
                                       valid && above.status == SolveStatus::No};
                           });
        });
        checks.push_back([x, y, name, budget] {
            const Graph joined = gadget_join(x.h, y.h);
            return guarded(name + " lower bound", graph_digest(joined), "extended partition dominates", [&]() -> Outcome {
                const int d1 = domatic_number(x.h.graph, budget);
                const int d2 = domatic_number(y.h.graph, budget);
                const std::array<DecoratedGraph, 2> hs{x.h, y.h};
                const std::array<Partition, 2> ps{domatic_witness(x.h.graph, d1, budget),
                                                  domatic_witness(y.h.graph, d2, budget)};
                const Partition p = extend_domatic_partitions(hs, ps);
                const bool ok = p.k == d1 + d2 && check_partition(joined, p, kN, kNplus);
                return {"k=" + std::to_string(p.k) + (ok ? " valid" : " invalid"), ok};
            });
        });
    }
    return checks;
}

std::vector<Check> thm10_k1() {
    std::vector<Check> checks;
    const auto ops = ks_operands();
    for (const auto& x : ops)
        for (const auto& y : ops) {
            checks.push_back([x, y] {
                const Graph pair = gadget_join(x.h, y.h);
                return guarded("multi(" + x.name + "," + y.name + ")", graph_digest(pair), "equals gadget_join",
                               [&]() -> Outcome {
                                   const std::array<DecoratedGraph, 2> hs{x.h, y.h};
                                   const Graph multi = multi_gadget_join(hs);
                                   const bool ok = multi == pair && multi.labels() == pair.labels();
                                   return {ok ? "identical" : "differs", ok};
                               });
            });
        }
    const std::vector<std::pair<std::string, std::vector<int>>> quads{{"4 x ks(K3)", {0, 0, 0, 0}},
                                                                      {"3 x ks(K3) + ks(K4)", {0, 0, 0, 1}}};
    for (const auto& [name, pick] : quads) {
        std::vector<DecoratedGraph> hs;
        for (int i : pick) hs.push_back(ops[static_cast<std::size_t>(i)].h);
        checks.push_back([name = name, hs] {
            const Graph g = multi_gadget_join(hs);
            return guarded("multi(" + name + ")", graph_digest(g), "gadget degree 11, count formula", [&]() -> Outcome {
                int base = 0;
                std::size_t tuples = 1;
                for (const auto& h : hs) {
                    base += h.graph.order();
                    tuples *= h.triangles.size();
                }
                const int expected_n = base + 12 * static_cast<int>(tuples);
                std::set<int> degrees;
                for (Vertex v = base; v < g.order(); ++v) degrees.insert(g.degree(v));
                const bool ok = g.order() == expected_n && degrees == std::set<int>{11};
                std::string obs = "n=" + std::to_string(g.order()) + " degrees {";
                for (int d : degrees) obs += std::to_string(d) + (d == *degrees.rbegin() ? "" : ",");
                return {obs + "}", ok};
            });
        });
    }
    const std::vector<std::vector<int>> mk{{5}, {9, 11}, {13, 15, 17}};
    for (int k = 1; k <= 3; ++k) {
        checks.push_back([k, want = mk[static_cast<std::size_t>(k - 1)]] {
            const ExactSet expected = ExactSet::make(want);
            return guarded("M_" + std::to_string(k), fnv1a_hex(std::to_string(k)), expected.to_string(), [&]() -> Outcome {
                const ExactSet got = exact_mk_set(k);
                return {got.to_string(), got == expected};
            });
        });
    }
    return checks;
}

std::vector<Check> parity_k1(const Budget& budget) {
    std::vector<Check> checks;
    const auto ops = ks_operands();
    // Three-chromatic operands first, as the ordering constraint asks.
    const std::vector<std::vector<int>> lists{{0, 0}, {0, 1}, {1, 1}, {0, 0, 0, 0}, {0, 0, 0, 1}};
    for (const auto& pick : lists) {
        std::vector<DecoratedGraph> hs;
        std::string name = "parity(";
        int three_chromatic = 0;
        for (std::size_t i = 0; i < pick.size(); ++i) {
            hs.push_back(ops[static_cast<std::size_t>(pick[i])].h);
            name += (i ? "," : "") + ops[static_cast<std::size_t>(pick[i])].name;
            three_chromatic += pick[i] == 0 ? 1 : 0;
        }
        name += ")";
        const bool even = three_chromatic % 2 == 0;
        checks.push_back([hs, name, even, budget] {
            const auto [odd_g, even_g] = parity_pair(hs);
            return guarded(name, fnv1a_hex(write_dimacs(odd_g.graph) + write_dimacs(even_g.graph)),
                           even ? "delta(odd) = delta(even)" : "delta(odd) - 1 = delta(even)", [&]() -> Outcome {
                               const Deadline deadline(budget);
                               const int a = domatic_number(odd_g.graph, deadline.remaining());
                               const int b = domatic_number(even_g.graph, deadline.remaining());
                               const bool ok = even ? a == b : a - 1 == b;
                               return {"delta(odd)=" + std::to_string(a) + " delta(even)=" + std::to_string(b), ok};
                           });
        });
    }
    return checks;
}

// --- formula campaigns ---------------------------------------------------

std::vector<Check> thm3(std::uint64_t seed, const Budget& budget) {
    std::vector<Check> checks;
    for (const NaePair& p : nae_corpus(seed)) {
        checks.push_back([p, budget] {
            const Graph g = nae_construct(p.h1, p.h2);
            return guarded(p.name, graph_digest(g), "gamma=" + std::to_string(p.expected_gamma), [&]() -> Outcome {
                const auto gm = gamma(g, budget);
                return {gm ? "gamma=" + std::to_string(*gm) : "gamma=None", gm && *gm == p.expected_gamma};
            });
        });
    }
    return checks;
}

std::pair<TripleCase, TripleCase> smallest_cases(const std::vector<TripleCase>& corpus) {
    std::optional<TripleCase> sat;
    std::optional<TripleCase> unsat;
    for (const auto& c : corpus) {
        if (c.satisfiable && !sat) sat = c;
        if (!c.satisfiable && !unsat) unsat = c;
    }
    return {*sat, *unsat};
}

std::vector<Check> thm6(std::uint64_t seed, const Budget& budget) {
    std::vector<Check> checks;
    const auto corpus = triple_corpus(seed);
    for (const TripleCase& c : corpus) {
        checks.push_back([c, budget] {
            const Graph g = ht_one_in_three(c.system);
            const int want = c.satisfiable ? 2 : 3;
            return guarded(c.name, graph_digest(g), "alpha=" + std::to_string(want), [&]() -> Outcome {
                const int a = alpha(g, budget);
                return {"alpha=" + std::to_string(a), a == want};
            });
        });
    }
    const auto [sat, unsat] = smallest_cases(corpus);
    const std::array<std::pair<TripleCase, TripleCase>, 3> combos{{{sat, sat}, {sat, unsat}, {unsat, unsat}}};
    for (const auto& [s1, s2] : combos) {
        checks.push_back([s1 = s1, s2 = s2, budget] {
            const Graph g = thm6_construct(s1.system, s2.system);
            const int want = (s1.satisfiable ? 2 : 3) + (s2.satisfiable ? 2 : 3);
            return guarded("thm6(" + s1.name + "," + s2.name + ")", graph_digest(g),
                           "alpha=" + std::to_string(want) + " = alpha(G1)+alpha(G2)", [&]() -> Outcome {
                               const Deadline deadline(budget);
                               const int a1 = alpha(ht_one_in_three(s1.system), deadline.remaining());
                               const int a2 = alpha(ht_one_in_three(s2.system), deadline.remaining());
                               const int a = alpha(g, deadline.remaining());
                               return {"alpha=" + std::to_string(a) + " (" + std::to_string(a1) + "+" + std::to_string(a2) + ")",
                                       a == want && a == a1 + a2};
                           });
        });
    }
    return checks;
}

std::vector<Check> thm8(std::uint64_t seed, const Budget& budget) {
    std::vector<Check> checks;
    const auto corpus = triple_corpus(seed);
    for (const TripleCase& c : corpus) {
        checks.push_back([c, budget] {
            const Graph g = ht_one_in_three(c.system);
            return guarded(c.name, graph_digest(g), "beta=alpha", [&]() -> Outcome {
                const bool eq = beta_equals_alpha_check(g, c.system, budget);
                return {eq ? "equal" : "differ", eq};
            });
        });
    }
    const auto [sat, unsat] = smallest_cases(corpus);
    const std::array<std::pair<TripleCase, TripleCase>, 3> combos{{{sat, sat}, {sat, unsat}, {unsat, unsat}}};
    for (const auto& [s1, s2] : combos) {
        checks.push_back([s1 = s1, s2 = s2, budget] {
            const Graph g = thm6_construct(s1.system, s2.system);
            return guarded("thm6(" + s1.name + "," + s2.name + ")", graph_digest(g), "beta=alpha", [&]() -> Outcome {
                const bool eq = beta_equals_alpha_check(g, s1.system, s2.system, budget);
                return {eq ? "equal" : "differ", eq};
            });
        });
    }
    return checks;
}

// --- scheduling campaigns ------------------------------------------------

std::string matrix_name(const TaskMatrix& m) {
    std::string s;
    for (const auto& row : m.rows()) s += (s.empty() ? "" : "/") + row;
    return s;
}

int busy_machines(const TaskMatrix& m) {
    int c = 0;
    for (int p = 0; p < m.machines(); ++p) c += m.column_count(p) > 0 ? 1 : 0;
    return c;
}

std::vector<Check> oracle_cfsp(std::uint64_t seed) {
    std::vector<TaskMatrix> corpus = all_matrices(3, 3);
    for (std::uint64_t i = 0; corpus.size() < 512 + 100; ++i) {
        TaskMatrix m = random_matrix(4, 4, 0.5, mix(seed, i));
        if (m.task_count() <= 10) corpus.push_back(std::move(m));
    }
    std::vector<Check> checks;
    for (const TaskMatrix& m : corpus) {
        checks.push_back([m] {
            return guarded(matrix_name(m), fnv1a_hex(matrix_to_json(m).dump()), "solver = enumeration", [&]() -> Outcome {
                const CfspResult r = delta_min(m);
                const int b = delta_min_bruteforce(m);
                const CfspResult r0 = delta_min(m, 0);
                const int b0 = delta_min_bruteforce(m, 0);
                const bool witness = is_valid_schedule(m, r.schedule) && switch_count(r.schedule) == r.switches;
                const bool bound = r.switches >= std::max(0, busy_machines(m) - 1);
                const bool ok = r.switches == b && r0.switches == b0 && witness && bound;
                std::string obs = "delta=" + std::to_string(r.switches) + " oracle=" + std::to_string(b);
                if (r0.switches != b0) obs += " start0 " + std::to_string(r0.switches) + "/" + std::to_string(b0);
                if (!witness) obs += " bad witness";
                if (!bound) obs += " below machine bound";
                return {obs, ok};
            });
        });
    }
    return checks;
}

std::vector<Check> cfsp_compose(const Budget& budget) {
    std::vector<TaskMatrix> universe;
    for (auto [n, m] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}})
        for (auto& t : all_matrices(n, m)) universe.push_back(std::move(t));

    std::vector<Check> checks;
    for (int length = 1; length <= 3; ++length) {
        for (const TaskMatrix& first : universe) {
            checks.push_back([length, first, universe, budget] {
                return guarded("blocks=" + std::to_string(length) + " first=" + matrix_name(first),
                               fnv1a_hex(std::to_string(length) + matrix_to_json(first).dump()),
                               "offset = nonempty blocks - 1", [&]() -> Outcome {
                                   const std::size_t tails = length == 1 ? 1 : length == 2 ? universe.size()
                                                                                            : universe.size() * universe.size();
                                   for (std::size_t t = 0; t < tails; ++t) {
                                       std::vector<TaskMatrix> blocks{first};
                                       if (length >= 2) blocks.push_back(universe[t % universe.size()]);
                                       if (length == 3) blocks.push_back(universe[t / universe.size()]);
                                       int nonempty = 0;
                                       for (const auto& b : blocks) nonempty += b.task_count() > 0 ? 1 : 0;
                                       const int off = composition_offset(blocks, budget);
                                       if (off != std::max(0, nonempty - 1)) {
                                           std::string list;
                                           for (const auto& b : blocks) list += "[" + matrix_name(b) + "]";
                                           return {"offset " + std::to_string(off) + " on " + list, false};
                                       }
                                   }
                                   return {std::to_string(tails) + " lists agree", true};
                               });
            });
        }
    }
    checks.push_back([] {
        return guarded("sk_from_z offset 0", fnv1a_hex("sk"), "{z+1, z+3, ..., z+2k-1}", [&]() -> Outcome {
            for (int z = 0; z <= 20; z += 2)
                for (int k = 1; k <= 5; ++k) {
                    std::vector<int> want;
                    for (int i = 1; i <= 2 * k - 1; i += 2) want.push_back(z + i);
                    if (sk_from_z(z, k, 0).values() != want)
                        return {"mismatch at z=" + std::to_string(z) + " k=" + std::to_string(k), false};
                }
            return {"z 0..20, k 1..5 agree", true};
        });
    });
    return checks;
}

}  // namespace

std::vector<Graph> srp_corpus(std::uint64_t seed, std::size_t total) {
    std::vector<Graph> out = nonisomorphic_graphs(6);
    for (std::uint64_t i = 0; out.size() < total; ++i) {
        const int n = 1 + static_cast<int>(i % 6);
        const double p = 0.2 + 0.15 * static_cast<double>((i / 6) % 5);
        out.push_back(random_graph(n, p, mix(seed, i)));
    }
    return out;
}

std::vector<std::pair<std::string, Graph>> lemma3_corpus(std::uint64_t seed) {
    std::vector<std::pair<std::string, Graph>> out{
        {"K3", complete_graph(3)}, {"C5", cycle_graph(5)}, {"K4", complete_graph(4)}, {"W5", wheel_graph(5)}};
    std::set<std::vector<Edge>> seen;
    for (const auto& [name, g] : out) seen.insert(g.edges());
    for (std::uint64_t i = 0; out.size() < 24; ++i) {
        const int n = 4 + static_cast<int>(i % 3);
        Graph g = random_graph(n, 0.6, mix(seed, i));
        if (has_isolated_vertex(g) || is_two_colorable(g) || !seen.insert(g.edges()).second) continue;
        out.emplace_back("random" + std::to_string(out.size() - 3) + " n=" + std::to_string(n), std::move(g));
    }
    return out;
}

std::pair<Cnf3, Cnf3> nae_figure_pair() {
    const Literal x1{0, false}, x2{1, false}, x3{2, false};
    return {make_cnf3(3, {{x1, ~x2, x3}, {~x1, x2, x3}}), make_cnf3(3, {{x1, x2, x3}, {~x1, ~x2, ~x3}})};
}

std::vector<NaePair> nae_corpus(std::uint64_t seed, int per_class) {
    std::vector<NaePair> out;
    const auto [f1, f2] = nae_figure_pair();
    out.push_back({"figure pair", f1, f2, 4});

    std::vector<Cnf3> sat;
    std::vector<Cnf3> unsat;
    std::set<std::string> seen;
    const auto need = static_cast<std::size_t>(3 * per_class);
    for (std::uint64_t i = 0; sat.size() < need || unsat.size() < need; ++i) {
        if (i > 1000000) throw Error(ErrorCode::InvalidArgument, "NAE corpus generation did not converge");
        const int vars = 1 + static_cast<int>(i % 4);
        const int clauses = 1 + static_cast<int>((i / 4) % 2);
        Cnf3 f = random_cnf3(vars, clauses, mix(seed, i));
        if (!seen.insert(cnf3_to_json(f).dump()).second) continue;
        auto& pool = nae3_decide(f).satisfiable ? sat : unsat;
        if (pool.size() < need) pool.push_back(std::move(f));
    }
    auto label = [](const char* kind, int j) { return std::string(kind) + " #" + std::to_string(j + 1); };
    for (int j = 0; j < per_class; ++j) {
        const auto u = static_cast<std::size_t>(j);
        out.push_back({label("sat,sat", j), sat[2 * u], sat[2 * u + 1], 4});
        out.push_back({label("sat,unsat", j), sat[2 * static_cast<std::size_t>(per_class) + u], unsat[u], 3});
        out.push_back({label("unsat,unsat", j), unsat[static_cast<std::size_t>(per_class) + 2 * u],
                       unsat[static_cast<std::size_t>(per_class) + 2 * u + 1], 2});
    }
    return out;
}

std::vector<TripleCase> triple_corpus(std::uint64_t seed, int per_class) {
    std::vector<TripleCase> sat;
    std::vector<TripleCase> unsat;
    std::set<std::string> seen;
    for (std::uint64_t i = 0; std::min(sat.size(), unsat.size()) < static_cast<std::size_t>(per_class); ++i) {
        if (i > 1000000) throw Error(ErrorCode::InvalidArgument, "triple corpus generation did not converge");
        const int vars = 3 + static_cast<int>(i % 3);
        const int sets = 1 + static_cast<int>((i / 3) % 5);
        TripleSystem s = random_triples(vars, sets, mix(seed, i));
        if (!seen.insert(triples_to_json(s).dump()).second) continue;
        const bool ok = one_in_three_decide(s).satisfiable;
        auto& pool = ok ? sat : unsat;
        if (pool.size() < static_cast<std::size_t>(per_class))
            pool.push_back({std::string(ok ? "sat" : "unsat") + " #" + std::to_string(pool.size() + 1), std::move(s), ok});
    }
    std::vector<TripleCase> out = sat;
    out.insert(out.end(), unsat.begin(), unsat.end());
    std::stable_sort(out.begin(), out.end(), [](const TripleCase& a, const TripleCase& b) {
        return ht_one_in_three(a.system).order() < ht_one_in_three(b.system).order();
    });
    return out;
}

std::vector<std::string> campaign_names() {
    return {"lemma3", "thm1",   "thm3",       "thm6",        "thm8",        "thm10-k1",
            "parity-k1", "fact1", "oracle-srp", "oracle-cfsp", "cfsp-compose"};
}

VerifyReport run_campaign(const std::string& name, std::uint64_t seed, const Budget& budget, int threads) {
    std::vector<Check> checks;
    if (name == "lemma3") checks = lemma3(seed, budget);
    else if (name == "thm1") checks = thm1(budget);
    else if (name == "thm3") checks = thm3(seed, budget);
    else if (name == "thm6") checks = thm6(seed, budget);
    else if (name == "thm8") checks = thm8(seed, budget);
    else if (name == "thm10-k1") checks = thm10_k1();
    else if (name == "parity-k1") checks = parity_k1(budget);
    else if (name == "fact1") checks = fact1(seed, budget);
    else if (name == "oracle-srp") checks = oracle_srp(seed, budget);
    else if (name == "oracle-cfsp") checks = oracle_cfsp(seed);
    else if (name == "cfsp-compose") checks = cfsp_compose(budget);
    else throw Error(ErrorCode::InvalidArgument, "unknown campaign '" + name + "'");

    VerifyReport report;
    report.campaign = name;
    report.seed = seed;
    report.budget_seconds = budget.limit ? budget.limit->count() : 0.0;
    report.records = run_checks(checks, threads);
    return report;
}

}  // namespace domlab
