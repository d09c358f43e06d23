#include "xnlplab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "xnlplab/bandwidth.hpp"
#include "xnlplab/binpack.hpp"
#include "xnlplab/generate.hpp"
#include "xnlplab/hardness.hpp"
#include "xnlplab/json_io.hpp"
#include "xnlplab/nnccm.hpp"
#include "xnlplab/scheduling.hpp"
#include "xnlplab/shuffle.hpp"

namespace xnlplab {

int VerificationReport::disagreements() const {
    int d = 0;
    for (const VerificationRecord& r : records)
        if (!r.agree) ++d;
    return d;
}

nlohmann::json VerificationReport::to_json(bool with_timings) const {
    nlohmann::json recs = nlohmann::json::array();
    for (const VerificationRecord& r : records) {
        nlohmann::json one{{"id", r.id},
                           {"left", r.left},
                           {"right", r.right},
                           {"agree", r.agree},
                           {"timeout", r.timeout}};
        if (with_timings) one["wall_ms"] = r.wall_ms;
        recs.push_back(one);
    }
    return nlohmann::json{{"suite", suite},
                          {"seed", seed},
                          {"budget", budget},
                          {"total", total()},
                          {"disagreements", disagreements()},
                          {"timeouts", timeouts},
                          {"records", recs}};
}

namespace {

struct Task {
    std::string id;
    std::function<VerificationRecord()> run;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

VerificationRecord record(std::string id, std::string left, std::string right,
                          bool timeout = false) {
    VerificationRecord r;
    r.id = std::move(id);
    r.left = std::move(left);
    r.right = std::move(right);
    r.agree = r.left == r.right || timeout;
    r.timeout = timeout;
    return r;
}

// Timed wrapper so sweeps can fan out and keep per-case wall time.
Task make_task(std::string id, std::function<VerificationRecord(const std::string&)> f) {
    Task t;
    t.id = id;
    t.run = [id, f = std::move(f)]() {
        auto t0 = std::chrono::steady_clock::now();
        VerificationRecord r = f(id);
        auto t1 = std::chrono::steady_clock::now();
        r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        return r;
    };
    return t;
}

std::vector<VerificationRecord> run_tasks(std::vector<Task>& tasks, int threads) {
    if (threads <= 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<int>(threads, static_cast<int>(tasks.size()) == 0
                                         ? 1
                                         : static_cast<int>(tasks.size()));
    std::vector<VerificationRecord> out(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            try {
                out[i] = tasks[i].run();
            } catch (const std::exception& e) {
                out[i] = record(tasks[i].id, std::string("error: ") + e.what(), "ok");
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    std::sort(out.begin(), out.end(),
              [](const VerificationRecord& a, const VerificationRecord& b) {
                  return a.id < b.id;
              });
    return out;
}

std::string instance_tag(int k, int n, int r, long long index) {
    std::ostringstream os;
    os << "k" << k << "_n" << n << "_r" << r << "_" << std::setw(6) << std::setfill('0')
       << index;
    return os.str();
}

// ---------------------------------------------------------- the suites

std::vector<Task> shuffle_reduction_tasks(const SweepBounds& b) {
    std::vector<Task> tasks;
    for (int k = 1; k <= b.max_counters; ++k) {
        for (int r = 0; r <= b.max_rounds; ++r) {
            long long index = 0;
            for (const NnccmInstance& m : enumerate_instances(k, b.max_value, r)) {
                std::string id = instance_tag(k, b.max_value, r, index++);
                tasks.push_back(make_task(id, [m](const std::string& tag) {
                    bool left = accepts(m);
                    if (m.rounds() == 0)  // degenerate: trivially accepting upstream
                        return record(tag, yes_no(left), yes_no(true));
                    ShuffleReduction red = reduce_nnccm_to_shuffle(m);
                    auto witness = shuffle_dp(red.instance);
                    bool right = witness.has_value();
                    if (right) {
                        Run back = run_from_witness(m, red.instance, red.meta, *witness);
                        if (!validate_run(m, back))
                            return record(tag, yes_no(left), "bad-extracted-run");
                    }
                    if (left) {
                        Run run = *find_run(m);
                        InterleavingWitness w = witness_from_run(m, run);
                        if (!verify_witness(red.instance, w))
                            return record(tag, yes_no(left), "bad-constructed-witness");
                        Run back = run_from_witness(m, red.instance, red.meta, w);
                        if (back.values != run.values)
                            return record(tag, yes_no(left), "round-trip-mismatch");
                    }
                    return record(tag, yes_no(left), yes_no(right));
                }));
            }
        }
    }
    return tasks;
}

std::vector<Task> dag_reduction_tasks(const SweepBounds& b, std::uint64_t budget) {
    std::vector<Task> tasks;
    const int k = 1, n = std::max(1, b.max_value);
    for (int r = 1; r <= b.max_rounds; ++r) {
        long long index = 0;
        for (const NnccmInstance& m : enumerate_instances(k, n, r)) {
            std::string id = instance_tag(k, n, r, index++);
            tasks.push_back(make_task(id, [m, budget](const std::string& tag) {
                bool left = accepts(m);
                GadgetDag dag = build_dag(m);
                if (left) {
                    Run run = *find_run(m);
                    TopOrdering f = layout_from_run(dag, run);
                    int bw = bandwidth_of(dag.graph, f);
                    if (bw > dag.params.target)
                        return record(tag, "yes", "layout-too-wide");
                    Run back = run_from_layout(m, dag, f);
                    if (back.values != run.values)
                        return record(tag, "yes", "round-trip-mismatch");
                    return record(tag, "yes", "yes");
                }
                BandwidthDecision d = exact_bandwidth(dag.graph, dag.params.target, budget);
                if (d.feasible()) {
                    // would contradict the counting argument; surface loudly
                    Run back = run_from_layout(m, dag, *d.witness);
                    return record(tag, "no", validate_run(m, back) ? "feasible-validating"
                                                                   : "feasible");
                }
                if (d.timed_out()) return record(tag, "no", "timeout", true);
                return record(tag, "no", "no");
            }));
        }
    }
    return tasks;
}

std::vector<Task> tree_construction_tasks(const SweepBounds& b) {
    std::vector<Task> tasks;
    const int k = 1, n = std::max(1, b.max_value);
    for (int r = 1; r <= b.max_rounds; ++r) {
        long long index = 0;
        for (const NnccmInstance& m : enumerate_instances(k, n, r)) {
            std::string id = instance_tag(k, n, r, index++);
            tasks.push_back(make_task(id, [m](const std::string& tag) {
                GadgetTree tree = build_tree(m);  // structural asserts inside
                if (!accepts(m)) return record(tag, "skip", "skip");
                Run run = *find_run(m);
                TopOrdering f = tree_layout_from_run(tree, run);
                bool ok = bandwidth_of(tree.graph, f) <= tree.params.target;
                return record(tag, "yes", ok ? "yes" : "layout-too-wide");
            }));
        }
    }
    return tasks;
}

std::vector<Task> sched_equivalence_tasks(const SweepBounds& b, std::uint64_t seed,
                                          std::uint64_t budget) {
    std::vector<Task> tasks;
    Rng rng(seed);
    for (int i = 0; i < b.samples; ++i) {
        std::uniform_int_distribution<int> size(1, b.max_vertices);
        std::uniform_real_distribution<double> dens(0.1, 0.7);
        Digraph g = gen_random_dag(size(rng), dens(rng), rng);
        int bw = brute_bandwidth(g, b.max_vertices);
        std::uniform_int_distribution<int> pick(std::max(1, bw - 1), bw + 1);
        int limit = pick(rng);
        std::ostringstream id;
        id << "bandwidth_sched_" << std::setw(4) << std::setfill('0') << i;
        tasks.push_back(make_task(id.str(), [g, bw, limit, budget](const std::string& tag) {
            SchedInstance inst = bandwidth_to_sched(g, limit);
            auto [back, limit_back] = sched_to_bandwidth(inst);
            if (limit_back != (inst.prec.empty() ? 1 : limit) ||
                back.vertex_count() != g.vertex_count() ||
                back.arcs() != g.arcs())
                return record(tag, "round-trip", "broken");
            SchedDecision d = feasible(inst, budget);
            if (d.timed_out()) return record(tag, yes_no(bw <= limit), "timeout", true);
            return record(tag, yes_no(bw <= limit), yes_no(d.feasible()));
        }));
    }

    // exhaustive three-machine sweep over triangular DAG representatives
    long long index = 0;
    for (int n = 0; n <= b.max_jobs; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint32_t arcs = 0; arcs < (1u << pairs); ++arcs) {
            for (std::uint32_t sizes = 0; sizes < (1u << n); ++sizes) {
                for (int d = 1; d <= std::max(1, n); ++d) {
                    SchedInstance p3;
                    p3.machines = 3;
                    p3.deadline = d;
                    for (int j = 0; j < n; ++j)
                        p3.jobs.push_back({1, (sizes >> j & 1) ? 2 : 1});
                    int bit = 0;
                    for (int u = 0; u < n; ++u)
                        for (int v = u + 1; v < n; ++v, ++bit)
                            if (arcs >> bit & 1)
                                p3.prec.push_back({u, v, DelayKind::none, 0});
                    std::ostringstream id;
                    id << "p3_mindelay_" << std::setw(8) << std::setfill('0') << index++;
                    tasks.push_back(
                        make_task(id.str(), [p3, budget](const std::string& tag) {
                            SchedDecision left = feasible(p3, budget);
                            SchedInstance single = parallel_to_min_delay(p3);
                            SchedDecision right = feasible(single, budget);
                            if (left.timed_out() || right.timed_out())
                                return record(tag, "timeout", "timeout", true);
                            return record(tag, yes_no(left.feasible()),
                                          yes_no(right.feasible()));
                        }));
                }
            }
        }
    }
    return tasks;
}

std::vector<Task> binpack_equivalence_tasks(const SweepBounds& b, std::uint64_t budget) {
    std::vector<Task> tasks;
    long long index = 0;
    // forward: every instance with bins <= max_bins, capacity <= max_capacity,
    // items of sizes in [1, capacity + 1] (one above exercises the short-circuit)
    for (int bins = 1; bins <= b.max_bins; ++bins)
        for (int cap = 1; cap <= b.max_capacity; ++cap)
            for (int count = 0; count <= b.max_items; ++count) {
                std::vector<int> items(count, 1);
                while (true) {
                    BinPackingInstance bp{cap, bins, items};
                    std::ostringstream id;
                    id << "binpack_fwd_" << std::setw(8) << std::setfill('0') << index++;
                    tasks.push_back(make_task(id.str(), [bp, budget](const std::string& tag) {
                        bool left = binpack_feasible(bp).has_value();
                        SchedDecision d = feasible(binpack_to_chains(bp), budget);
                        if (d.timed_out()) return record(tag, yes_no(left), "timeout", true);
                        return record(tag, yes_no(left), yes_no(d.feasible()));
                    }));
                    int i = count - 1;
                    while (i >= 0 && items[i] == cap + 1) items[i--] = 1;
                    if (i < 0) break;
                    ++items[i];
                }
            }

    // reverse: chain instances with deadline <= max_deadline, delay <= max_delay
    index = 0;
    for (int d = 1; d <= b.max_deadline; ++d)
        for (int l = 0; l <= b.max_delay; ++l)
            for (int chains = 0; chains <= b.max_chains; ++chains) {
                std::vector<int> lengths(chains, 1);
                while (true) {
                    SchedInstance inst;
                    inst.machines = 1;
                    inst.deadline = d;
                    inst.structure = PrecStructure::chains;
                    for (int len : lengths) {
                        int first = inst.job_count();
                        for (int q = 0; q < len; ++q) inst.jobs.push_back({1, 1});
                        for (int q = 1; q < len; ++q)
                            inst.prec.push_back(
                                {first + q - 1, first + q, DelayKind::exact, l});
                    }
                    std::ostringstream id;
                    id << "binpack_rev_" << std::setw(8) << std::setfill('0') << index++;
                    tasks.push_back(
                        make_task(id.str(), [inst, budget](const std::string& tag) {
                            SchedDecision left = feasible(inst, budget);
                            BinPackingInstance bp = chains_to_binpack(inst);
                            auto packing = binpack_feasible(bp);
                            if (packing) {
                                // fill items must separate, one per bin
                                std::vector<int> fills(bp.bins, 0);
                                std::size_t nfill = bp.bins;
                                for (std::size_t i = bp.items.size() - nfill;
                                     i < bp.items.size(); ++i)
                                    ++fills[packing->assign[i] - 1];
                                for (int f : fills)
                                    if (f != 1)
                                        return record(tag, "one-fill-per-bin", "violated");
                            }
                            if (left.timed_out())
                                return record(tag, "timeout", yes_no(packing.has_value()),
                                              true);
                            return record(tag, yes_no(left.feasible()),
                                          yes_no(packing.has_value()));
                        }));
                    int i = chains - 1;
                    while (i >= 0 && lengths[i] == d) lengths[i--] = 1;
                    if (i < 0) break;
                    ++lengths[i];
                }
            }
    return tasks;
}

std::vector<Task> oracle_agreement_tasks(const SweepBounds& b, std::uint64_t seed,
                                         std::uint64_t budget) {
    std::vector<Task> tasks;
    Rng rng(seed);
    const int shuffle_cases = std::max(b.samples, 500);
    for (int i = 0; i < shuffle_cases; ++i) {
        ShuffleInstance inst = gen_random_shuffle(3, 14, 3, rng);
        std::ostringstream id;
        id << "shuffle_" << std::setw(4) << std::setfill('0') << i;
        tasks.push_back(make_task(id.str(), [inst](const std::string& tag) {
            bool left = brute_shuffle(inst);
            auto w = shuffle_dp(inst);
            if (w && !verify_witness(inst, *w))
                return record(tag, yes_no(left), "bad-witness");
            return record(tag, yes_no(left), yes_no(w.has_value()));
        }));
    }
    for (int i = 0; i < b.samples; ++i) {
        std::uniform_int_distribution<int> size(1, b.max_vertices);
        std::uniform_real_distribution<double> dens(0.1, 0.7);
        Digraph g = gen_random_dag(size(rng), dens(rng), rng);
        std::ostringstream id;
        id << "bandwidth_" << std::setw(4) << std::setfill('0') << i;
        int cap = b.max_vertices;
        tasks.push_back(make_task(id.str(), [g, budget, cap](const std::string& tag) {
            int exact = brute_bandwidth(g, cap);
            BandwidthDecision at = exact_bandwidth(g, exact, budget);
            BandwidthDecision below =
                exact == 0 ? BandwidthDecision::make_infeasible()
                           : exact_bandwidth(g, exact - 1, budget);
            if (at.timed_out() || below.timed_out())
                return record(tag, "exact", "timeout", true);
            bool ok = at.feasible() && !below.feasible();
            if (ok && bandwidth_of(g, *at.witness) > exact) ok = false;
            return record(tag, "exact", ok ? "exact" : "mismatch");
        }));
    }
    for (int i = 0; i < b.samples; ++i) {
        std::uniform_int_distribution<int> size(1, 12);
        std::uniform_real_distribution<double> dens(0.1, 0.7);
        Digraph g = gen_random_dag(size(rng), dens(rng), rng);
        std::ostringstream id;
        id << "width_" << std::setw(4) << std::setfill('0') << i;
        tasks.push_back(make_task(id.str(), [g](const std::string& tag) {
            return record(tag, std::to_string(width(g)),
                          std::to_string(brute_width(g, 12)));
        }));
    }
    return tasks;
}

}  // namespace

std::vector<std::string> verification_suite_names() {
    return {"shuffle-reduction", "dag-reduction",        "tree-construction",
            "sched-equivalence", "binpack-equivalence", "oracle-agreement"};
}

VerificationReport run_verification_suite(const std::string& suite,
                                          const SweepBounds& bounds,
                                          std::uint64_t seed, std::uint64_t budget) {
    std::vector<Task> tasks;
    if (suite == "shuffle-reduction") tasks = shuffle_reduction_tasks(bounds);
    else if (suite == "dag-reduction") tasks = dag_reduction_tasks(bounds, budget);
    else if (suite == "tree-construction") tasks = tree_construction_tasks(bounds);
    else if (suite == "sched-equivalence")
        tasks = sched_equivalence_tasks(bounds, seed, budget);
    else if (suite == "binpack-equivalence")
        tasks = binpack_equivalence_tasks(bounds, budget);
    else if (suite == "oracle-agreement")
        tasks = oracle_agreement_tasks(bounds, seed, budget);
    else
        throw std::invalid_argument("unknown verification suite '" + suite + "'");

    VerificationReport report;
    report.suite = suite;
    report.seed = seed;
    report.budget = budget;
    report.records = run_tasks(tasks, bounds.threads);
    for (const VerificationRecord& r : report.records)
        if (r.timeout) report.timeouts.push_back(r.id);
    return report;
}

}  // namespace xnlplab
