#ifndef XNLPLAB_HARDNESS_HPP
#define XNLPLAB_HARDNESS_HPP

#include <vector>

#include "xnlplab/digraph.hpp"
#include "xnlplab/nnccm.hpp"

namespace xnlplab {

// Gadget dimensions derived from a machine with k counters, maximum
// value n and r checks. Invariant: vertex_total = floor_len * target + 1.
struct GadgetParams {
    int counters = 0;      // k
    int max_value = 0;     // n
    int rounds = 0;        // r
    int target = 0;        // B = k + 6, the bandwidth limit
    int check_stride = 0;  // S = (k + 2) * n; check j happens at step j*S
    int floor_len = 0;     // L = (r + 1) * S
    int vertex_total = 0;  // N = L * B + 1
    int filler_len = 0;    // Q, closes the vertex count to exactly N

    static GadgetParams from(const NnccmInstance& m);
    bool operator==(const GadgetParams&) const = default;
};

// The bandwidth-hardness DAG together with its vertex index maps. The
// graph has one source (floor[0]), one sink (floor[floor_len]), exactly
// vertex_total vertices and width counters + 5.
struct GadgetDag {
    Digraph graph;
    GadgetParams params;
    NnccmInstance machine;

    std::vector<int> floor_vertex;                  // [0 .. L]
    std::vector<std::vector<int>> counter_vertex;   // [k][L+n], path order
    std::vector<int> filler_vertex;                 // [Q], path order
    std::vector<std::vector<int>> floor_between;    // per batch 1..L
    struct CounterBetween {
        int round;    // 1-based check index
        int counter;  // 1-based counter id
        int value;    // checked value q; attaches after v_{c, round*S + q}
        int vertex;
        int twin;     // 0 or 1; twin 1 is chained after twin 0 when the
                      // check names the same (counter, value) twice
    };
    std::vector<CounterBetween> counter_between;

    int counter_path_vertex(int counter, int path_index) const;  // 1-based
};

GadgetDag build_dag(const NnccmInstance& m);

// Per-step counter values over the L gadget steps: at most one counter
// increases by one per step, increases confined to per-round windows,
// every counter reaches max_value by step L.
struct ExpandedRun {
    std::vector<std::vector<int>> value_at_step;  // [k][0 .. L]
};

ExpandedRun alternative_run(const NnccmInstance& m, const Run& run);
bool validate_expanded_run(const NnccmInstance& m, const Run& run,
                           const ExpandedRun& x);

// Topological ordering of bandwidth <= target built from an accepting
// run: floor vertex i at position B*i, batch interiors filled slot-wise
// (two early star slots, a filler slot, k counter slots, two late star
// slots), flexible vertices assigned earliest-deadline-first.
TopOrdering layout_from_run(const GadgetDag& dag, const Run& run);
TopOrdering layout_from_run(const NnccmInstance& m, const Run& run);

// Reads counter i's value at check j as the largest q with counter path
// vertex j*S + q inside batch j*S; the result validates against m.
Run run_from_layout(const NnccmInstance& m, const GadgetDag& dag,
                    const TopOrdering& f);

// Tree variant: the DAG with between-vertex out-arcs and path-end arcs
// into the floor sink removed, plus tail paths and tail leaves pinning
// the end of any bandwidth-<=B ordering.
struct GadgetTree {
    Digraph graph;
    GadgetParams params;
    NnccmInstance machine;
    GadgetDag base;  // same vertex ids for the shared prefix

    std::vector<int> sink_leaves;                    // 4 leaves under floor sink
    std::vector<int> floor_tail;                     // [3k+3]
    std::vector<int> floor_tail_leaves;              // B under the last
    std::vector<int> filler_tail;                    // [3k+3]
    std::vector<std::vector<int>> filler_tail_leaves;  // last two, B-2 each
    std::vector<std::vector<int>> counter_tail;        // [k][3k+4-3i]
    // leaves[i][j] for the three leaf-bearing tail vertices of counter i
    std::vector<std::vector<std::vector<int>>> counter_tail_leaves;

    int tail_vertex_count() const;  // equals (3k+4) * B
};

GadgetTree build_tree(const NnccmInstance& m);

TopOrdering tree_layout_from_run(const GadgetTree& tree, const Run& run);
TopOrdering tree_layout_from_run(const NnccmInstance& m, const Run& run);

}  // namespace xnlplab

#endif
