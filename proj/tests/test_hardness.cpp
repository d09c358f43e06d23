#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xnlplab/bandwidth.hpp"
#include "xnlplab/hardness.hpp"

using namespace xnlplab;

namespace {

NnccmInstance machine(int k, int n, std::vector<NnccmCheck> checks) {
    NnccmInstance m;
    m.counters = k;
    m.max_value = n;
    m.checks = std::move(checks);
    return m;
}

}  // namespace

TEST_CASE("gadget parameters") {
    GadgetParams p = GadgetParams::from(machine(1, 1, {{1, 0, 1, 0}}));
    CHECK(p.target == 7);
    CHECK(p.check_stride == 3);
    CHECK(p.floor_len == 6);
    CHECK(p.vertex_total == 43);

    CHECK_THROWS_AS(GadgetParams::from(machine(1, 0, {{1, 0, 1, 0}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(GadgetParams::from(machine(1, 1, {})), std::invalid_argument);
}

TEST_CASE("build_dag postconditions across small machines") {
    // the k+5 width, unique source/sink, vertex count and acyclicity are
    // asserted inside build_dag; touching different shapes exercises them
    for (const NnccmInstance& m :
         {machine(1, 1, {{1, 0, 1, 0}}), machine(1, 1, {{1, 0, 1, 1}}),
          machine(2, 1, {{1, 1, 2, 0}}), machine(1, 2, {{1, 1, 1, 1}, {1, 0, 1, 2}}),
          machine(3, 2, {{1, 0, 2, 0}, {1, 1, 3, 0}})}) {
        GadgetDag dag = build_dag(m);
        CHECK(dag.graph.vertex_count() == dag.params.vertex_total);
        CHECK(width(dag.graph) == m.counters + 5);
    }
}

TEST_CASE("floor between counts") {
    GadgetDag dag = build_dag(machine(1, 1, {{1, 0, 1, 0}, {1, 1, 1, 1}}));
    // S = 3, L = 9, checks at batches 3 and 6
    CHECK(dag.floor_between[3].size() == 3);
    CHECK(dag.floor_between[4].size() == 4);
    CHECK(dag.floor_between[6].size() == 3);
    CHECK(dag.floor_between[7].size() == 4);
    for (int j : {1, 2, 5, 8, 9}) CHECK(dag.floor_between[j].size() == 2);
}

TEST_CASE("expanded runs place increases inside the windows") {
    NnccmInstance late = machine(1, 1, {{1, 1, 1, 1}});
    Run zero{{{0}}};
    ExpandedRun x = alternative_run(late, zero);
    CHECK(validate_expanded_run(late, zero, x));
    CHECK(x.value_at_step[0][3] == 0);  // counter still zero at the check
    CHECK(x.value_at_step[0][6] == 1);  // raised in the tail window

    NnccmInstance early = machine(1, 1, {{1, 0, 1, 0}});
    Run one{{{1}}};
    ExpandedRun y = alternative_run(early, one);
    CHECK(validate_expanded_run(early, one, y));
    CHECK(y.value_at_step[0][2] == 1);  // raised before the check window closes

    CHECK_THROWS_AS(alternative_run(early, zero), std::invalid_argument);
}

TEST_CASE("layout from run certifies the forward direction") {
    NnccmInstance m = machine(1, 1, {{1, 0, 1, 0}});
    GadgetDag dag = build_dag(m);
    Run run{{{1}}};
    TopOrdering f = layout_from_run(dag, run);
    CHECK(dag.graph.vertex_count() == 43);
    CHECK(bandwidth_of(dag.graph, f) <= 7);
    for (int i = 0; i <= dag.params.floor_len; ++i)
        CHECK(f.position[dag.floor_vertex[i]] == 7 * i);

    Run back = run_from_layout(m, dag, f);
    CHECK(back.values == run.values);
}

TEST_CASE("layouts handle multi-counter checks") {
    NnccmInstance m = machine(2, 1, {{1, 1, 2, 1}});
    GadgetDag dag = build_dag(m);
    Run run{{{0, 0}}};
    TopOrdering f = layout_from_run(dag, run);
    CHECK(bandwidth_of(dag.graph, f) <= dag.params.target);
    CHECK(run_from_layout(m, dag, f).values == run.values);

    Run other{{{0, 1}}};
    TopOrdering g = layout_from_run(dag, other);
    CHECK(run_from_layout(m, dag, g).values == other.values);
}

TEST_CASE("the full forward sweep round-trips") {
    for (int r = 1; r <= 2; ++r)
        for (const NnccmInstance& m : enumerate_instances(1, 1, r)) {
            if (!accepts(m)) continue;
            GadgetDag dag = build_dag(m);
            CHECK(dag.params.vertex_total >= 43);
            CHECK(dag.params.vertex_total <= 64);
            Run run = *find_run(m);
            TopOrdering f = layout_from_run(dag, run);
            CHECK(bandwidth_of(dag.graph, f) <= dag.params.target);
            CHECK(run_from_layout(m, dag, f).values == run.values);
        }
}

TEST_CASE("invalid runs are rejected before layout") {
    NnccmInstance m = machine(1, 1, {{1, 0, 1, 0}});
    CHECK_THROWS_AS(layout_from_run(m, Run{{{0}}}), std::invalid_argument);
    CHECK_THROWS_AS(layout_from_run(m, Run{{{2}}}), std::invalid_argument);
}

TEST_CASE("tree construction counts") {
    NnccmInstance m = machine(1, 1, {{1, 0, 1, 0}});
    GadgetTree tree = build_tree(m);
    const int B = tree.params.target;
    CHECK(tree.tail_vertex_count() == (3 * 1 + 4) * B);
    CHECK(tree.counter_tail[0].size() == 4);  // 3k + 4 - 3i with k = i = 1
    for (const auto& leaves : tree.counter_tail_leaves[0])
        CHECK(leaves.size() == static_cast<std::size_t>(B - 3));
    CHECK(tree.graph.arc_count() == tree.graph.vertex_count() - 1);

    GadgetTree two = build_tree(machine(2, 1, {{1, 1, 2, 0}}));
    CHECK(two.tail_vertex_count() == (3 * 2 + 4) * two.params.target);
}

TEST_CASE("tree layout stays within the target and ends at the floor tail") {
    NnccmInstance m = machine(1, 1, {{1, 0, 1, 0}});
    GadgetTree tree = build_tree(m);
    Run run{{{1}}};
    TopOrdering f = tree_layout_from_run(tree, run);
    const int B = tree.params.target;
    CHECK(bandwidth_of(tree.graph, f) <= B);

    // the ordering ends with the floor tail terminus and then its leaves
    const int total = tree.graph.vertex_count();
    CHECK(f.position[tree.floor_tail.back()] == total - 1 - B);
    for (int leaf : tree.floor_tail_leaves) CHECK(f.position[leaf] > total - 1 - B);

    // tail batch one carries the four new leaves under the floor sink
    const int sink_pos = f.position[tree.base.floor_vertex[tree.params.floor_len]];
    for (int leaf : tree.sink_leaves) {
        CHECK(f.position[leaf] > sink_pos);
        CHECK(f.position[leaf] < sink_pos + B);
    }
}

TEST_CASE("tree layouts across the accepting sweep") {
    for (int r = 1; r <= 2; ++r)
        for (const NnccmInstance& m : enumerate_instances(1, 1, r)) {
            if (!accepts(m)) continue;
            GadgetTree tree = build_tree(m);
            TopOrdering f = tree_layout_from_run(tree, *find_run(m));
            CHECK(bandwidth_of(tree.graph, f) <= tree.params.target);
        }
}
