#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xnlplab/bandwidth.hpp"
#include "xnlplab/generate.hpp"
#include "xnlplab/scheduling.hpp"

using namespace xnlplab;

namespace {

SchedInstance unit_chain(int n, int deadline) {
    SchedInstance inst;
    inst.machines = 1;
    inst.deadline = deadline;
    inst.jobs.assign(n, SchedJob{1, 1});
    for (int i = 0; i + 1 < n; ++i) inst.prec.push_back({i, i + 1, DelayKind::none, 0});
    return inst;
}

Digraph path(int n) {
    Digraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_arc(i, i + 1);
    return g;
}

Digraph star(int leaves) {
    Digraph g(leaves + 1);
    for (int l = 1; l <= leaves; ++l) g.add_arc(0, l);
    return g;
}

SchedInstance p3(int n, int deadline, std::vector<std::pair<int, int>> arcs,
                 std::vector<int> wide = {}) {
    SchedInstance inst;
    inst.machines = 3;
    inst.deadline = deadline;
    inst.jobs.assign(n, SchedJob{1, 1});
    for (int j : wide) inst.jobs[j].size = 2;
    for (auto [u, v] : arcs) inst.prec.push_back({u, v, DelayKind::none, 0});
    return inst;
}

}  // namespace

TEST_CASE("verify_schedule delay kinds") {
    SchedInstance two = unit_chain(2, 2);
    CHECK(verify_schedule(two, Schedule{{0, 1}}));

    two.prec[0].kind = DelayKind::max;
    two.prec[0].delay = 0;
    CHECK(verify_schedule(two, Schedule{{0, 1}}));
    two.deadline = 3;
    CHECK_FALSE(verify_schedule(two, Schedule{{0, 2}}));

    two.prec[0].kind = DelayKind::exact;
    two.prec[0].delay = 1;
    CHECK(verify_schedule(two, Schedule{{0, 2}}));
    CHECK_FALSE(verify_schedule(two, Schedule{{0, 1}}));

    two.prec[0].kind = DelayKind::min;
    two.prec[0].delay = 1;
    CHECK(verify_schedule(two, Schedule{{0, 2}}));
    CHECK_FALSE(verify_schedule(two, Schedule{{0, 1}}));

    CHECK_THROWS_AS(verify_schedule(two, Schedule{{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(verify_schedule(two, Schedule{{0}}), std::invalid_argument);

    // capacity: two unit jobs on one machine cannot overlap
    SchedInstance par = unit_chain(2, 2);
    par.prec.clear();
    CHECK_FALSE(verify_schedule(par, Schedule{{0, 0}}));
}

TEST_CASE("feasible on chains") {
    CHECK(feasible(unit_chain(3, 3)).feasible());
    CHECK(feasible(unit_chain(3, 2)).infeasible());

    auto d = feasible(unit_chain(3, 3));
    REQUIRE(d.feasible());
    CHECK(verify_schedule(unit_chain(3, 3), *d.witness));
}

TEST_CASE("bandwidth_to_sched examples") {
    SchedInstance p4 = bandwidth_to_sched(path(4), 1);
    CHECK(p4.deadline == 4);
    CHECK(p4.prec[0].kind == DelayKind::max);
    CHECK(p4.prec[0].delay == 0);
    CHECK(feasible(p4).feasible());

    CHECK(feasible(bandwidth_to_sched(star(3), 2)).infeasible());

    Digraph family(5);
    family.add_arc(0, 1);
    family.add_arc(1, 2);
    family.add_arc(2, 3);
    family.add_arc(0, 4);
    family.add_arc(4, 3);
    CHECK(feasible(bandwidth_to_sched(family, 2)).feasible());

    CHECK_THROWS_AS(bandwidth_to_sched(path(3), 0), std::invalid_argument);
}

TEST_CASE("sched_to_bandwidth inverts the image and rejects the rest") {
    Digraph g = star(2);
    SchedInstance inst = bandwidth_to_sched(g, 2);
    auto [back, limit] = sched_to_bandwidth(inst);
    CHECK(limit == 2);
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.arcs() == g.arcs());

    SchedInstance long_deadline = inst;
    long_deadline.deadline += 1;
    CHECK_THROWS_AS(sched_to_bandwidth(long_deadline), std::invalid_argument);

    SchedInstance mixed = inst;
    mixed.prec[1].delay = 5;
    CHECK_THROWS_AS(sched_to_bandwidth(mixed), std::invalid_argument);

    SchedInstance min_kind = inst;
    min_kind.prec[0].kind = DelayKind::min;
    CHECK_THROWS_AS(sched_to_bandwidth(min_kind), std::invalid_argument);
}

TEST_CASE("scheduling matches the bandwidth oracle on random DAGs") {
    Rng rng(23);
    for (int i = 0; i < 60; ++i) {
        std::uniform_int_distribution<int> size(1, 7);
        std::uniform_real_distribution<double> dens(0.1, 0.6);
        Digraph g = gen_random_dag(size(rng), dens(rng), rng);
        int bw = brute_bandwidth(g);
        for (int b = std::max(1, bw - 1); b <= bw + 1; ++b) {
            SchedDecision d = feasible(bandwidth_to_sched(g, b));
            REQUIRE_FALSE(d.timed_out());
            CHECK(d.feasible() == (bw <= b));
        }
    }
}

TEST_CASE("parallel_to_min_delay fragment checks") {
    CHECK_THROWS_AS(parallel_to_min_delay(unit_chain(2, 2)), std::invalid_argument);

    SchedInstance bad_size = p3(2, 2, {{0, 1}});
    bad_size.jobs[0].size = 3;
    CHECK_THROWS_AS(parallel_to_min_delay(bad_size), std::invalid_argument);

    SchedInstance delayed = p3(2, 2, {{0, 1}});
    delayed.prec[0].kind = DelayKind::min;
    delayed.prec[0].delay = 1;
    CHECK_THROWS_AS(parallel_to_min_delay(delayed), std::invalid_argument);
}

TEST_CASE("parallel_to_min_delay structure and base cases") {
    SchedInstance empty = p3(0, 1, {});
    SchedInstance empty_out = parallel_to_min_delay(empty);
    CHECK(empty_out.jobs.empty());
    CHECK(feasible(empty_out).feasible());

    SchedInstance two = p3(2, 1, {});
    SchedInstance out = parallel_to_min_delay(two);
    CHECK(out.machines == 1);
    CHECK(out.deadline == 6 * 1 + 1);
    CHECK(out.jobs.size() == 2 + 3);  // two real jobs, three anchors
    CHECK(feasible(two).feasible());
    CHECK(feasible(out).feasible());

    // real arcs become minimum delays of three; durations follow sizes
    SchedInstance wide = p3(2, 2, {{0, 1}}, {0});
    SchedInstance wout = parallel_to_min_delay(wide);
    CHECK(wout.jobs[0].duration == 2);
    CHECK(wout.jobs[1].duration == 1);
    CHECK(wout.prec[0].kind == DelayKind::min);
    CHECK(wout.prec[0].delay == 3);
}

TEST_CASE("parallel_to_min_delay preserves feasibility on dense cases") {
    // three unit jobs all preceding three others fits in two time units
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) arcs.push_back({u, v});
    SchedInstance bipartite = p3(6, 2, arcs);
    CHECK(feasible(bipartite).feasible());
    CHECK(feasible(parallel_to_min_delay(bipartite)).feasible());

    SchedInstance tight = p3(6, 1, arcs);
    CHECK(feasible(tight).infeasible());
    CHECK(feasible(parallel_to_min_delay(tight)).infeasible());
}

TEST_CASE("parallel_to_min_delay equivalence on an exhaustive mini sweep") {
    for (int n = 0; n <= 3; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint32_t arcs = 0; arcs < (1u << pairs); ++arcs)
            for (std::uint32_t sizes = 0; sizes < (1u << n); ++sizes)
                for (int d = 1; d <= std::max(1, n); ++d) {
                    SchedInstance inst;
                    inst.machines = 3;
                    inst.deadline = d;
                    for (int j = 0; j < n; ++j)
                        inst.jobs.push_back({1, (sizes >> j & 1) ? 2 : 1});
                    int bit = 0;
                    for (int u = 0; u < n; ++u)
                        for (int v = u + 1; v < n; ++v, ++bit)
                            if (arcs >> bit & 1)
                                inst.prec.push_back({u, v, DelayKind::none, 0});
                    bool left = feasible(inst).feasible();
                    bool right = feasible(parallel_to_min_delay(inst)).feasible();
                    CHECK(left == right);
                }
    }
}
