// domatic-lab: solvers, reductions, decisions, verification campaigns and
// instance generators on the command line.
//
// Exit codes: 0 success / YES, 1 NO (decide) or failed campaign, 2 error,
// 3 timeout.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "domlab/cfsp.hpp"
#include "domlab/domatic.hpp"
#include "domlab/error.hpp"
#include "domlab/generators.hpp"
#include "domlab/io.hpp"
#include "domlab/reductions.hpp"
#include "domlab/verify.hpp"

using namespace domlab;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;
constexpr int kExitTimeout = 3;

struct Options {
    std::string kind;
    std::string in;
    std::vector<std::string> inputs;
    std::string a;
    std::string b;
    std::string out;
    std::string witness;
    std::string sigma = "N";
    std::string rho = "N+";
    std::string set;
    std::string start = "free";
    std::string format = "table";
    std::string report;
    int k = 0;
    double budget_seconds = 60;
    std::uint64_t seed = 1;
    bool oracle = false;
    bool oracle_safe = false;
    int n = 6;
    int m = 3;
    double p = 0.5;
    double density = 0.5;
    int vars = 4;
    int clauses = 3;
    int sets = 3;
};

Budget budget_of(const Options& o) { return Budget::seconds(o.budget_seconds); }

Graph load_graph(const std::string& path) { return read_graph_text(read_file(path)); }
DecoratedGraph load_decorated(const std::string& path) { return read_decorated_text(read_file(path)); }

StartMachine parse_start(const std::string& text) {
    if (text == "free") return std::nullopt;
    try {
        std::size_t used = 0;
        const int idx = std::stoi(text, &used);
        if (used == text.size()) return idx;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::ParseError, "--start expects 'free' or a machine index, got '" + text + "'");
}

void require(const std::string& value, const char* flag) {
    if (value.empty()) throw Error(ErrorCode::InvalidArgument, std::string(flag) + " is required");
}

void write_witness(const Options& o, const Json& j) {
    if (!o.witness.empty()) write_file(o.witness, j.dump(2) + "\n");
}

// Witness partition at a parameter value already known to be feasible.
void write_partition_witness(const Options& o, const Graph& g, int k, const SigmaRhoSpec& s, const SigmaRhoSpec& r) {
    if (o.witness.empty()) return;
    const SolveResult res = exists_partition(g, k, s, r, budget_of(o));
    if (res.status == SolveStatus::TimedOut) throw Error(ErrorCode::TimedOut, "witness search exceeded its budget");
    if (res.witness) write_witness(o, partition_to_json(*res.witness));
}

int cmd_solve(const Options& o) {
    require(o.in, "--in");
    const Budget budget = budget_of(o);
    if (o.kind == "cfsp") {
        const TaskMatrix m = matrix_from_json(parse_json(read_file(o.in)));
        const StartMachine start = parse_start(o.start);
        if (o.oracle) {
            std::cout << delta_min_bruteforce(m, start) << "\n";
            return kExitYes;
        }
        const CfspResult r = delta_min(m, start);
        write_witness(o, schedule_to_json(r.schedule));
        std::cout << r.switches << "\n";
        return kExitYes;
    }

    const Graph g = load_graph(o.in);
    auto print_optional = [](const std::optional<int>& v) { std::cout << (v ? std::to_string(*v) : "None") << "\n"; };
    if (o.kind == "delta") {
        const int d = domatic_number(g, budget);
        write_partition_witness(o, g, d, SigmaRhoSpec::naturals(), SigmaRhoSpec::positive());
        std::cout << d << "\n";
    } else if (o.kind == "gamma") {
        const auto v = gamma(g, budget);
        if (v) write_partition_witness(o, g, *v, SigmaRhoSpec::positive(), SigmaRhoSpec::positive());
        print_optional(v);
    } else if (o.kind == "alpha") {
        const int v = alpha(g, budget);
        write_partition_witness(o, g, v, SigmaRhoSpec::zero_one(), SigmaRhoSpec::naturals());
        std::cout << v << "\n";
    } else if (o.kind == "beta") {
        const auto v = beta(g, budget);
        if (v) write_partition_witness(o, g, *v, SigmaRhoSpec::one(), SigmaRhoSpec::naturals());
        print_optional(v);
    } else if (o.kind == "chi") {
        const int v = chromatic_number(g, budget);
        write_partition_witness(o, g, v, SigmaRhoSpec::zero(), SigmaRhoSpec::naturals());
        std::cout << v << "\n";
    } else if (o.kind == "srp") {
        if (o.k < 1) throw Error(ErrorCode::InvalidArgument, "--k must be at least 1");
        const auto sigma = SigmaRhoSpec::parse(o.sigma);
        const auto rho = SigmaRhoSpec::parse(o.rho);
        const SolveResult r =
            o.oracle ? brute_force_partition(g, o.k, sigma, rho) : exists_partition(g, o.k, sigma, rho, budget);
        if (r.status == SolveStatus::TimedOut) throw Error(ErrorCode::TimedOut, "partition search exceeded its budget");
        if (r.witness) write_witness(o, partition_to_json(*r.witness));
        std::cout << to_string(r.status) << "\n";
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown solve kind '" + o.kind + "'");
    }
    return kExitYes;
}

void emit_graph(const std::string& prefix, const DecoratedGraph& d) {
    write_file(prefix + ".dimacs", write_dimacs(d.graph));
    write_file(prefix + ".json", decorated_to_json(d).dump(2) + "\n");
    std::cout << prefix << ".dimacs " << prefix << ".json  n=" << d.graph.order() << " m=" << d.graph.size() << "\n";
}

int cmd_reduce(const Options& o) {
    const std::string prefix = o.out.empty() ? o.kind : o.out;
    if (o.kind == "ks") {
        require(o.in, "--in");
        emit_graph(prefix, kaplan_shamir(load_graph(o.in)));
    } else if (o.kind == "thm1" || o.kind == "times") {
        require(o.a, "--a");
        require(o.b, "--b");
        const DecoratedGraph a = load_decorated(o.a);
        const DecoratedGraph b = load_decorated(o.b);
        emit_graph(prefix, o.kind == "times" ? times(a, b) : DecoratedGraph{gadget_join(a, b), {}});
    } else if (o.kind == "thm10" || o.kind == "parity") {
        std::vector<DecoratedGraph> hs;
        for (const auto& path : o.inputs) hs.push_back(load_decorated(path));
        if (o.kind == "thm10") {
            emit_graph(prefix, DecoratedGraph{multi_gadget_join(hs), {}});
        } else {
            const auto [odd, even] = parity_pair(hs);
            emit_graph(prefix + ".odd", odd);
            emit_graph(prefix + ".even", even);
        }
    } else if (o.kind == "nae") {
        require(o.a, "--f1");
        require(o.b, "--f2");
        const Cnf3 f1 = cnf3_from_json(parse_json(read_file(o.a)));
        const Cnf3 f2 = cnf3_from_json(parse_json(read_file(o.b)));
        emit_graph(prefix, DecoratedGraph{nae_construct(f1, f2), {}});
    } else if (o.kind == "ht13") {
        require(o.in, "--in");
        emit_graph(prefix, DecoratedGraph{ht_one_in_three(triples_from_json(parse_json(read_file(o.in)))), {}});
    } else if (o.kind == "thm6") {
        require(o.a, "--s1");
        require(o.b, "--s2");
        const TripleSystem s1 = triples_from_json(parse_json(read_file(o.a)));
        const TripleSystem s2 = triples_from_json(parse_json(read_file(o.b)));
        emit_graph(prefix, DecoratedGraph{thm6_construct(s1, s2), {}});
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown reduce kind '" + o.kind + "'");
    }
    return kExitYes;
}

int cmd_decide(const Options& o) {
    const Budget budget = budget_of(o);
    bool yes = false;
    if (o.kind == "exact-domatic") {
        require(o.set, "--set");
        require(o.in, "--in");
        const ExactSet s = ExactSet::parse(o.set);
        yes = exact_domatic_in_set(load_graph(o.in), s, budget);
    } else if (o.kind == "dnp-odd") {
        require(o.in, "--in");
        yes = dnp_odd(load_graph(o.in), budget);
    } else if (o.kind == "dnp-equ" || o.kind == "dnp-geq") {
        require(o.a, "--a");
        require(o.b, "--b");
        const Graph g = load_graph(o.a);
        const Graph h = load_graph(o.b);
        yes = o.kind == "dnp-equ" ? dnp_equ(g, h, budget) : dnp_geq(g, h, budget);
    } else if (o.kind == "exact-cfsp") {
        require(o.set, "--set");
        require(o.in, "--in");
        const ExactSet s = ExactSet::parse(o.set, 0);
        yes = exact_cfsp(matrix_from_json(parse_json(read_file(o.in))), s, parse_start(o.start));
    } else if (o.kind == "exact-srp") {
        require(o.in, "--in");
        yes = exact_partition_decision(load_graph(o.in), o.k, SigmaRhoSpec::parse(o.sigma), SigmaRhoSpec::parse(o.rho),
                                       budget);
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown decide kind '" + o.kind + "'");
    }
    std::cout << (yes ? "YES" : "NO") << "\n";
    return yes ? kExitYes : kExitNo;
}

int cmd_verify(const Options& o) {
    if (o.format != "json" && o.format != "table")
        throw Error(ErrorCode::InvalidArgument, "--format must be json or table");
    const VerifyReport report = run_campaign(o.kind, o.seed, budget_of(o), default_threads());
    if (!o.report.empty()) write_file(o.report, report.to_json().dump(2) + "\n");
    if (o.format == "json")
        std::cout << report.to_json().dump(2) << "\n";
    else
        std::cout << report.to_table();
    return report.exit_code();
}

int cmd_gen(const Options& o) {
    std::string text;
    if (o.kind == "graph") {
        if (o.oracle_safe && o.n > 12) throw Error(ErrorCode::TooLarge, "--oracle-safe graphs have at most 12 vertices");
        const Graph g = random_graph(o.n, o.p, o.seed);
        text = o.format == "json" ? graph_to_json(g).dump(2) + "\n" : write_dimacs(g);
    } else if (o.kind == "cnf3") {
        if (o.oracle_safe && o.vars > kMaxOracleVars) throw Error(ErrorCode::TooLarge, "--oracle-safe formulas have at most 24 variables");
        text = cnf3_to_json(random_cnf3(o.vars, o.clauses, o.seed)).dump(2) + "\n";
    } else if (o.kind == "triples") {
        if (o.oracle_safe && o.vars > kMaxOracleVars) throw Error(ErrorCode::TooLarge, "--oracle-safe systems have at most 24 variables");
        text = triples_to_json(random_triples(o.vars, o.sets, o.seed)).dump(2) + "\n";
    } else if (o.kind == "matrix") {
        const TaskMatrix m = random_matrix(o.n, o.m, o.density, o.seed);
        if (o.oracle_safe && m.task_count() > 10) throw Error(ErrorCode::TooLarge, "--oracle-safe matrices have at most 10 tasks");
        text = matrix_to_json(m).dump(2) + "\n";
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown gen kind '" + o.kind + "'");
    }
    if (o.out.empty())
        std::cout << text;
    else
        write_file(o.out, text);
    return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"domatic-lab: generalized domination partitions, reductions and conveyor flow shop"};
    app.require_subcommand(1);
    Options o;

    auto* solve = app.add_subcommand("solve", "Compute delta, gamma, alpha, beta, chi, an srp decision or cfsp");
    solve->add_option("kind", o.kind, "delta|gamma|alpha|beta|chi|srp|cfsp")
        ->required()
        ->check(CLI::IsMember({"delta", "gamma", "alpha", "beta", "chi", "srp", "cfsp"}));
    solve->add_option("--in", o.in, "Graph (DIMACS or JSON) or task matrix JSON");
    solve->add_option("--k", o.k, "Class count for srp");
    solve->add_option("--sigma", o.sigma, "N, N+, 0, 1 or 01");
    solve->add_option("--rho", o.rho, "N, N+, 0, 1 or 01");
    solve->add_option("--witness", o.witness, "Write the witness partition / schedule here");
    solve->add_flag("--oracle", o.oracle, "Use the brute-force oracle (srp, cfsp)");
    solve->add_option("--start", o.start, "cfsp worker start: free or a machine index");
    solve->add_option("--budget-seconds", o.budget_seconds, "Per-instance wall clock budget");

    auto* reduce = app.add_subcommand("reduce", "Build a reduction graph");
    reduce->add_option("kind", o.kind, "ks|thm1|thm10|times|parity|nae|ht13|thm6")
        ->required()
        ->check(CLI::IsMember({"ks", "thm1", "thm10", "times", "parity", "nae", "ht13", "thm6"}));
    reduce->add_option("--in", o.in, "Input graph (ks) or triple system (ht13)");
    reduce->add_option("--inputs", o.inputs, "Decorated graphs for thm10 / parity")->expected(1, -1);
    reduce->add_option("--a,--f1,--s1", o.a, "First operand");
    reduce->add_option("--b,--f2,--s2", o.b, "Second operand");
    reduce->add_option("--out", o.out, "Output prefix (default: the kind)");

    auto* decide = app.add_subcommand("decide", "YES/NO decisions");
    decide->add_option("kind", o.kind, "exact-domatic|dnp-odd|dnp-equ|dnp-geq|exact-cfsp|exact-srp")
        ->required()
        ->check(CLI::IsMember({"exact-domatic", "dnp-odd", "dnp-equ", "dnp-geq", "exact-cfsp", "exact-srp"}));
    decide->add_option("--in", o.in, "Graph or task matrix");
    decide->add_option("--a", o.a, "First graph (dnp-equ, dnp-geq)");
    decide->add_option("--b", o.b, "Second graph (dnp-equ, dnp-geq)");
    decide->add_option("--set", o.set, "Noncontiguous integer set, e.g. 9,11");
    decide->add_option("--k", o.k, "Class count for exact-srp");
    decide->add_option("--sigma", o.sigma, "N, N+, 0, 1 or 01");
    decide->add_option("--rho", o.rho, "N, N+, 0, 1 or 01");
    decide->add_option("--start", o.start, "cfsp worker start: free or a machine index");
    decide->add_option("--budget-seconds", o.budget_seconds, "Wall clock budget");

    auto* verify = app.add_subcommand("verify", "Run a verification campaign");
    verify->add_option("campaign", o.kind, "Campaign name")->required()->check(CLI::IsMember(campaign_names()));
    verify->add_option("--seed", o.seed, "Corpus seed");
    verify->add_option("--budget-seconds", o.budget_seconds, "Per-instance budget");
    verify->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    verify->add_option("--report", o.report, "Also write the JSON report here");

    auto* gen = app.add_subcommand("gen", "Generate seeded instances");
    gen->add_option("kind", o.kind, "graph|cnf3|triples|matrix")
        ->required()
        ->check(CLI::IsMember({"graph", "cnf3", "triples", "matrix"}));
    gen->add_option("--seed", o.seed, "Seed");
    gen->add_option("--n", o.n, "Vertices (graph) or jobs (matrix)");
    gen->add_option("--m", o.m, "Machines (matrix)");
    gen->add_option("--p", o.p, "Edge probability");
    gen->add_option("--density", o.density, "Task probability");
    gen->add_option("--vars", o.vars, "Variables");
    gen->add_option("--clauses", o.clauses, "Clauses");
    gen->add_option("--sets", o.sets, "Sets");
    gen->add_option("--format", o.format, "Graph output: dimacs or json");
    gen->add_flag("--oracle-safe", o.oracle_safe, "Refuse sizes beyond the brute-force guards");
    gen->add_option("--out", o.out, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (*solve) return cmd_solve(o);
        if (*reduce) return cmd_reduce(o);
        if (*decide) return cmd_decide(o);
        if (*verify) return cmd_verify(o);
        if (*gen) return cmd_gen(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::TimedOut ? kExitTimeout : kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
