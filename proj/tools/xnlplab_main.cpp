#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "xnlplab/bandwidth.hpp"
#include "xnlplab/binpack.hpp"
#include "xnlplab/dot_export.hpp"
#include "xnlplab/generate.hpp"
#include "xnlplab/hardness.hpp"
#include "xnlplab/json_io.hpp"
#include "xnlplab/scheduling.hpp"
#include "xnlplab/shuffle.hpp"
#include "xnlplab/verify.hpp"

namespace {

using namespace xnlplab;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitVerification = 4;

struct verification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t default_budget() {
    if (const char* env = std::getenv("XNLPLAB_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("XNLPLAB_BUDGET is not an integer");
        }
    }
    return kDefaultSearchBudget;
}

int cmd_reduce(const std::string& kind, const std::string& in_path,
               const std::string& out_path, int limit, const std::string& meta_path) {
    Json in = load_json_file(in_path);
    Json out;
    Json meta;
    if (kind == "nnccm-to-shuffle") {
        ShuffleReduction red = reduce_nnccm_to_shuffle(nnccm_from_json(in));
        out = shuffle_to_json(red.instance);
        meta = reduction_meta_to_json(red.meta);
    } else if (kind == "nnccm-to-dag") {
        out = digraph_to_json(build_dag(nnccm_from_json(in)).graph);
    } else if (kind == "nnccm-to-tree") {
        out = digraph_to_json(build_tree(nnccm_from_json(in)).graph);
    } else if (kind == "bandwidth-to-sched") {
        out = sched_to_json(bandwidth_to_sched(digraph_from_json(in), limit));
    } else if (kind == "sched-to-bandwidth") {
        auto [g, b] = sched_to_bandwidth(sched_from_json(in));
        out = digraph_to_json(g);
        out["limit"] = b;
    } else if (kind == "parallel-to-mindelay") {
        out = sched_to_json(parallel_to_min_delay(sched_from_json(in)));
    } else if (kind == "binpack-to-chains") {
        out = sched_to_json(binpack_to_chains(binpack_from_json(in)));
    } else if (kind == "chains-to-binpack") {
        out = binpack_to_json(chains_to_binpack(sched_from_json(in)));
    } else {
        std::cerr << "unknown reduction kind '" << kind << "'\n";
        return kExitParse;
    }
    write_json_file(out_path, out);
    if (!meta_path.empty() && !meta.is_null()) write_json_file(meta_path, meta);
    return kExitOk;
}

int cmd_solve(const std::string& problem, const std::string& in_path, int limit,
              std::uint64_t budget, int deadline, const std::string& witness_path) {
    Json in = load_json_file(in_path);
    std::string answer;
    Json witness;
    if (problem == "nnccm") {
        NnccmInstance m = nnccm_from_json(in);
        auto run = find_run(m);
        answer = run ? "yes" : "no";
        if (run) {
            if (!validate_run(m, *run))
                throw verification_error("nnccm witness failed re-verification");
            witness = run_to_json(*run);
        }
    } else if (problem == "shuffle") {
        ShuffleInstance inst = shuffle_from_json(in);
        auto w = shuffle_dp(inst);
        answer = w ? "yes" : "no";
        if (w) {
            if (!verify_witness(inst, *w))
                throw verification_error("shuffle witness failed re-verification");
            witness = witness_to_json(*w);
        }
    } else if (problem == "bandwidth") {
        if (limit < 0) throw std::invalid_argument("bandwidth: --limit is required");
        Digraph g = digraph_from_json(in);
        BandwidthDecision d = exact_bandwidth(g, limit, budget);
        answer = d.feasible() ? "yes" : d.timed_out() ? "timeout" : "no";
        if (d.feasible()) {
            if (bandwidth_of(g, *d.witness) > limit)
                throw verification_error("bandwidth witness failed re-verification");
            witness = ordering_to_json(*d.witness);
        }
    } else if (problem == "sched") {
        SchedInstance inst = sched_from_json(in);
        if (deadline > 0) inst.deadline = deadline;
        SchedDecision d = feasible(inst, budget);
        answer = d.feasible() ? "yes" : d.timed_out() ? "timeout" : "no";
        if (d.feasible()) {
            if (!verify_schedule(inst, *d.witness))
                throw verification_error("schedule failed re-verification");
            witness = schedule_to_json(*d.witness);
        }
    } else if (problem == "binpack") {
        BinPackingInstance bp = binpack_from_json(in);
        auto p = binpack_feasible(bp);
        answer = p ? "yes" : "no";
        if (p) {
            if (!verify_packing(bp, *p))
                throw verification_error("packing failed re-verification");
            witness = packing_to_json(*p);
        }
    } else {
        std::cerr << "unknown problem '" << problem << "'\n";
        return kExitParse;
    }
    std::cout << answer << "\n";
    if (!witness_path.empty() && !witness.is_null())
        write_json_file(witness_path, witness);
    return kExitOk;
}

int cmd_verify(const std::string& suite, const SweepBounds& bounds, std::uint64_t seed,
               std::uint64_t budget, const std::string& out_path, bool timings) {
    VerificationReport report = run_verification_suite(suite, bounds, seed, budget);
    std::cout << report.suite << ": " << report.total() << " cases, "
              << report.disagreements() << " disagreements, "
              << report.timeouts.size() << " timeouts\n";
    for (const VerificationRecord& r : report.records)
        if (!r.agree)
            std::cout << "  disagree " << r.id << ": " << r.left << " vs " << r.right
                      << "\n";
    if (!out_path.empty()) write_json_file(out_path, report.to_json(timings));
    if (!report.all_agree()) return kExitVerification;
    return kExitOk;
}

int cmd_gen(const std::string& type, int n, int extra, double density,
            std::uint64_t seed, const std::string& out_path) {
    Rng rng(seed);
    Json out;
    if (type == "dag") {
        out = digraph_to_json(gen_random_dag(n, density, rng));
    } else if (type == "tree") {
        out = digraph_to_json(gen_random_tree(n, rng));
    } else if (type == "caterpillar") {
        out = digraph_to_json(gen_caterpillar(n, std::max(1, extra)));
    } else if (type == "nnccm") {
        out = nnccm_to_json(gen_random_nnccm(std::max(1, extra), 1, n, rng));
    } else if (type == "shuffle") {
        out = shuffle_to_json(gen_random_shuffle(3, n, 3, rng));
    } else if (type == "binpack") {
        out = binpack_to_json(gen_random_binpack(std::max(1, extra), 4, n, rng));
    } else {
        std::cerr << "unknown generator '" << type << "'\n";
        return kExitParse;
    }
    write_json_file(out_path, out);
    return kExitOk;
}

int cmd_export_dot(const std::string& in_path, const std::string& out_path) {
    Digraph g = digraph_from_json(load_json_file(in_path));
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    export_dot(g, out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solvers, reductions and cross-checks for shuffle product, "
                 "directed bandwidth, precedence-delay scheduling and unary bin packing"};
    app.require_subcommand(1);

    std::string kind, problem, suite, type;
    std::string in_path, out_path, meta_path, witness_path, report_path;
    int limit = -1, deadline = -1, n = 8, extra = 1;
    double density = 0.3;
    std::uint64_t seed = 1;
    std::uint64_t budget = 0;
    bool timings = false;
    SweepBounds bounds;

    CLI::App* reduce = app.add_subcommand("reduce", "translate an instance");
    reduce->add_option("kind", kind,
                       "nnccm-to-shuffle | nnccm-to-dag | nnccm-to-tree | "
                       "bandwidth-to-sched | sched-to-bandwidth | parallel-to-mindelay | "
                       "binpack-to-chains | chains-to-binpack")
        ->required();
    reduce->add_option("input", in_path, "instance JSON")->required();
    reduce->add_option("output", out_path, "reduced instance JSON")->required();
    reduce->add_option("-b,--limit", limit, "bandwidth limit (bandwidth-to-sched)");
    reduce->add_option("--meta", meta_path, "reduction metadata JSON");

    CLI::App* solve = app.add_subcommand("solve", "decide an instance");
    solve->add_option("problem", problem, "nnccm | shuffle | bandwidth | sched | binpack")
        ->required();
    solve->add_option("input", in_path, "instance JSON")->required();
    solve->add_option("-b,--limit", limit, "bandwidth limit");
    solve->add_option("--budget", budget, "search budget in node expansions");
    solve->add_option("--deadline", deadline, "override the scheduling deadline");
    solve->add_option("--witness", witness_path, "write the re-verified witness here");

    CLI::App* verify = app.add_subcommand("verify", "run a cross-validation sweep");
    verify->add_option("suite", suite,
                       "shuffle-reduction | dag-reduction | tree-construction | "
                       "sched-equivalence | binpack-equivalence | oracle-agreement")
        ->required();
    verify->add_option("--seed", seed, "sweep seed");
    verify->add_option("--budget", budget, "search budget in node expansions");
    verify->add_option("--out", report_path, "write the report JSON here");
    verify->add_flag("--timings", timings, "include wall times in the report");
    verify->add_option("--max-counters", bounds.max_counters);
    verify->add_option("--max-value", bounds.max_value);
    verify->add_option("--max-rounds", bounds.max_rounds);
    verify->add_option("--samples", bounds.samples);
    verify->add_option("--max-vertices", bounds.max_vertices);
    verify->add_option("--max-jobs", bounds.max_jobs);
    verify->add_option("--max-bins", bounds.max_bins);
    verify->add_option("--max-capacity", bounds.max_capacity);
    verify->add_option("--max-items", bounds.max_items);
    verify->add_option("--max-deadline", bounds.max_deadline);
    verify->add_option("--max-delay", bounds.max_delay);
    verify->add_option("--max-chains", bounds.max_chains);
    verify->add_option("--threads", bounds.threads);

    CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
    gen->add_option("type", type, "dag | tree | caterpillar | nnccm | shuffle | binpack")
        ->required();
    gen->add_option("output", out_path, "instance JSON")->required();
    gen->add_option("-n,--size", n, "size parameter");
    gen->add_option("--extra", extra, "secondary size (hair length, counters, bins)");
    gen->add_option("--density", density, "arc probability for dag");
    gen->add_option("--seed", seed);

    CLI::App* dot = app.add_subcommand("export-dot", "graph JSON to Graphviz DOT");
    dot->add_option("input", in_path, "graph JSON")->required();
    dot->add_option("output", out_path, "DOT file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitParse;
    }

    try {
        if (budget == 0) budget = default_budget();
        if (reduce->parsed()) return cmd_reduce(kind, in_path, out_path, limit, meta_path);
        if (solve->parsed())
            return cmd_solve(problem, in_path, limit, budget, deadline, witness_path);
        if (verify->parsed())
            return cmd_verify(suite, bounds, seed, budget, report_path, timings);
        if (gen->parsed()) return cmd_gen(type, n, extra, density, seed, out_path);
        if (dot->parsed()) return cmd_export_dot(in_path, out_path);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const verification_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
