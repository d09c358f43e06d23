#include "xnlplab/hardness.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "xnlplab/bandwidth.hpp"

namespace xnlplab {

GadgetParams GadgetParams::from(const NnccmInstance& m) {
    m.validate();
    if (m.max_value < 1 || m.rounds() < 1)
        throw std::invalid_argument("gadget: requires max_value >= 1 and a check");
    GadgetParams p;
    p.counters = m.counters;
    p.max_value = m.max_value;
    p.rounds = m.rounds();
    p.target = m.counters + 6;
    p.check_stride = (m.counters + 2) * m.max_value;
    p.floor_len = (p.rounds + 1) * p.check_stride;
    p.vertex_total = p.floor_len * p.target + 1;
    p.filler_len = 0;  // set by build_dag
    return p;
}

int GadgetDag::counter_path_vertex(int counter, int path_index) const {
    return counter_vertex.at(counter - 1).at(path_index - 1);
}

namespace {

// Floor-between count for batch j in [1, L]: three at the check batches
// j = round*S, four right after them, two otherwise.
int floor_between_count(const GadgetParams& p, int batch) {
    const int s = p.check_stride;
    if (batch % s == 0 && batch / s >= 1 && batch / s <= p.rounds) return 3;
    if (batch % s == 1 && (batch - 1) / s >= 1 && (batch - 1) / s <= p.rounds) return 4;
    return 2;
}

}  // namespace

GadgetDag build_dag(const NnccmInstance& m) {
    GadgetDag dag;
    dag.params = GadgetParams::from(m);
    dag.machine = m;
    GadgetParams& p = dag.params;
    const int k = p.counters, n = p.max_value, r = p.rounds;
    const int s = p.check_stride, len = p.floor_len;

    Digraph& g = dag.graph;
    auto label = [&](int v, GadgetLabel lab) { g.labels.emplace(v, lab); };

    dag.floor_vertex.resize(len + 1);
    for (int i = 0; i <= len; ++i) {
        dag.floor_vertex[i] = g.add_vertex();
        label(dag.floor_vertex[i],
              {GadgetLabel::Role::floor_path, -1, i, GadgetLabel::TailKind::floor});
        if (i > 0) g.add_arc(dag.floor_vertex[i - 1], dag.floor_vertex[i]);
    }
    dag.floor_between.assign(len + 1, {});
    for (int j = 1; j <= len; ++j) {
        for (int c = 0; c < floor_between_count(p, j); ++c) {
            int w = g.add_vertex();
            label(w, {GadgetLabel::Role::floor_between, -1, j,
                      GadgetLabel::TailKind::floor});
            g.add_arc(dag.floor_vertex[j - 1], w);
            g.add_arc(w, dag.floor_vertex[j]);
            dag.floor_between[j].push_back(w);
        }
    }

    dag.counter_vertex.assign(k, {});
    for (int i = 1; i <= k; ++i) {
        auto& path = dag.counter_vertex[i - 1];
        path.resize(len + n);
        for (int q = 1; q <= len + n; ++q) {
            path[q - 1] = g.add_vertex();
            label(path[q - 1], {GadgetLabel::Role::counter_path, i, q,
                                GadgetLabel::TailKind::counter});
            if (q > 1) g.add_arc(path[q - 2], path[q - 1]);
        }
        g.add_arc(dag.floor_vertex[0], path.front());
        g.add_arc(path.back(), dag.floor_vertex[len]);
    }

    // Counter-between vertices: the half (c, q) of check `round` attaches
    // after counter path vertex round*S + q, where it collides with the
    // check batch exactly when counter c has value q at the check. A
    // check naming the same (counter, value) twice gets a chained pair so
    // both crowd the same two batches without widening the graph.
    for (int round = 1; round <= r; ++round) {
        const NnccmCheck& c = m.checks[round - 1];
        const bool twin_pair = (c.c1 == c.c2 && c.n1 == c.n2);
        auto attach = [&](int counter, int value, int twin) {
            int idx = round * s + value;
            int before = dag.counter_path_vertex(counter, idx);
            int after = dag.counter_path_vertex(counter, idx + 1);
            int w = g.add_vertex();
            label(w, {GadgetLabel::Role::counter_between, counter, round,
                      GadgetLabel::TailKind::counter});
            g.add_arc(before, w);
            g.add_arc(w, after);
            dag.counter_between.push_back({round, counter, value, w, twin});
            return w;
        };
        if (twin_pair) {
            int w1 = attach(c.c1, c.n1, 0);
            int w2 = attach(c.c1, c.n1, 1);
            g.add_arc(w1, w2);  // keeps the pair a chain in the closure
        } else {
            attach(c.c1, c.n1, 0);
            attach(c.c2, c.n2, 0);
        }
    }

    p.filler_len = p.vertex_total - g.vertex_count();
    if (p.filler_len < 1)
        throw std::logic_error("build_dag: filler length not positive");
    dag.filler_vertex.resize(p.filler_len);
    for (int q = 0; q < p.filler_len; ++q) {
        dag.filler_vertex[q] = g.add_vertex();
        label(dag.filler_vertex[q], {GadgetLabel::Role::filler_path, -1, q + 1,
                                     GadgetLabel::TailKind::filler});
        if (q > 0) g.add_arc(dag.filler_vertex[q - 1], dag.filler_vertex[q]);
    }
    g.add_arc(dag.floor_vertex[0], dag.filler_vertex.front());
    g.add_arc(dag.filler_vertex.back(), dag.floor_vertex[len]);

    // construction postconditions
    if (g.vertex_count() != p.vertex_total)
        throw std::logic_error("build_dag: vertex count mismatch");
    int sources = 0, sinks = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.in_degree(v) == 0) ++sources;
        if (g.out_degree(v) == 0) ++sinks;
    }
    if (sources != 1 || g.in_degree(dag.floor_vertex[0]) != 0)
        throw std::logic_error("build_dag: source is not unique");
    if (sinks != 1 || g.out_degree(dag.floor_vertex[len]) != 0)
        throw std::logic_error("build_dag: sink is not unique");
    if (!g.is_acyclic()) throw std::logic_error("build_dag: cycle");
    if (width(g) != k + 5) throw std::logic_error("build_dag: width is not k + 5");
    return dag;
}

// ------------------------------------------------------- expanded runs

namespace {

// Increase window of round alpha in [1, r + 1]; round r + 1 is the tail
// phase raising every counter to n.
std::pair<int, int> increase_window(const GadgetParams& p, int alpha) {
    int start = (alpha - 1) * p.check_stride + p.max_value + 1;
    return {start, start + p.counters * p.max_value - 1};
}

}  // namespace

ExpandedRun alternative_run(const NnccmInstance& m, const Run& run) {
    if (!validate_run(m, run))
        throw std::invalid_argument("alternative_run: run does not validate");
    GadgetParams p = GadgetParams::from(m);
    const int k = p.counters, n = p.max_value, r = p.rounds, len = p.floor_len;

    ExpandedRun x;
    x.value_at_step.assign(k, std::vector<int>(len + 1, 0));
    std::vector<int> value(k, 0);
    auto value_after_round = [&](int alpha, int i) {
        return alpha <= r ? run.values[alpha - 1][i] : n;
    };
    int step = 0;
    auto advance_to = [&](int target) {
        while (step < target) {
            ++step;
            for (int i = 0; i < k; ++i) x.value_at_step[i][step] = value[i];
        }
    };
    for (int alpha = 1; alpha <= r + 1; ++alpha) {
        auto [lo, hi] = increase_window(p, alpha);
        advance_to(lo - 1);
        // pending unit increases, scheduled earliest-first by counter id
        for (int i = 0; i < k; ++i) {
            int need = value_after_round(alpha, i) - value[i];
            if (need < 0) throw std::logic_error("alternative_run: decreasing value");
            for (int u = 0; u < need; ++u) {
                if (step >= hi) throw std::logic_error("alternative_run: window overflow");
                ++step;
                ++value[i];
                for (int ii = 0; ii < k; ++ii) x.value_at_step[ii][step] = value[ii];
            }
        }
        advance_to(alpha <= r ? alpha * p.check_stride : len);
    }
    if (!validate_expanded_run(m, run, x))
        throw std::logic_error("alternative_run: expansion does not validate");
    return x;
}

bool validate_expanded_run(const NnccmInstance& m, const Run& run,
                           const ExpandedRun& x) {
    GadgetParams p = GadgetParams::from(m);
    const int k = p.counters, n = p.max_value, r = p.rounds, len = p.floor_len;
    if (static_cast<int>(x.value_at_step.size()) != k) return false;
    for (const auto& row : x.value_at_step)
        if (static_cast<int>(row.size()) != len + 1) return false;

    for (int i = 0; i < k; ++i)
        if (x.value_at_step[i][0] != 0 || x.value_at_step[i][len] != n) return false;
    for (int t = 1; t <= len; ++t) {
        int increases = 0;
        bool in_window = false;
        for (int alpha = 1; alpha <= r + 1; ++alpha) {
            auto [lo, hi] = increase_window(p, alpha);
            if (t >= lo && t <= hi) in_window = true;
        }
        for (int i = 0; i < k; ++i) {
            int d = x.value_at_step[i][t] - x.value_at_step[i][t - 1];
            if (d < 0 || d > 1) return false;
            if (x.value_at_step[i][t] > n) return false;
            increases += d;
        }
        if (increases > 1) return false;
        if (increases == 1 && !in_window) return false;
    }
    for (int j = 1; j <= r; ++j)
        for (int i = 0; i < k; ++i)
            if (x.value_at_step[i][j * p.check_stride] != run.values[j - 1][i])
                return false;
    return true;
}

// --------------------------------------------------------- DAG layout

namespace {

// Batch interior slots, 1-based relative to the preceding floor vertex:
// 1, 2 early stars; 3 filler anchor; 3 + i counter i; k + 4, k + 5 late
// stars. Flexible vertices go to star slots, earliest deadline first.
struct SlotAssigner {
    const GadgetDag& dag;
    const int B;
    std::vector<int> position;   // vertex -> position or -1
    std::vector<bool> occupied;  // position taken

    struct Item {
        int vertex;
        std::vector<int> preds;  // in-neighbors inside the gadget
        std::vector<int> succs;  // fixed successors bounding the deadline
        int batch_hint;          // for diagnostics
    };
    std::vector<Item> items;

    explicit SlotAssigner(const GadgetDag& d)
        : dag(d), B(d.params.target) {
        position.assign(dag.graph.vertex_count(), -1);
        occupied.assign(dag.params.vertex_total, false);
    }

    void fix(int vertex, int pos) {
        if (position[vertex] >= 0 || occupied[pos])
            throw std::logic_error("layout: slot collision");
        position[vertex] = pos;
        occupied[pos] = true;
    }

    bool placed(int v) const { return position[v] >= 0; }

    int release(const Item& it) const {
        int lo = 0;
        for (int u : it.preds) lo = std::max(lo, position[u] + 1);
        for (int w : it.succs)
            if (placed(w)) lo = std::max(lo, position[w] - B);
        return lo;
    }

    int deadline(const Item& it) const {
        int hi = dag.params.vertex_total;
        for (int u : it.preds) hi = std::min(hi, position[u] + B);
        for (int w : it.succs)
            if (placed(w)) hi = std::min(hi, position[w] - 1);
        return hi;
    }

    bool ready(const Item& it) const {
        for (int u : it.preds)
            if (!placed(u)) return false;
        return true;
    }

    // star positions in increasing order; batch j in [1, L]
    std::vector<int> star_positions() const {
        std::vector<int> out;
        const int k = dag.params.counters;
        for (int j = 1; j <= dag.params.floor_len; ++j) {
            int base = B * (j - 1);
            out.push_back(base + 1);
            out.push_back(base + 2);
            out.push_back(base + k + 4);
            out.push_back(base + k + 5);
        }
        return out;
    }

    void assign_items() {
        std::vector<bool> done(items.size(), false);
        std::size_t remaining = items.size();
        for (int pos : star_positions()) {
            if (remaining == 0) break;
            if (occupied[pos]) continue;
            int pick = -1, pick_deadline = 0;
            for (std::size_t i = 0; i < items.size(); ++i) {
                if (done[i] || !ready(items[i])) continue;
                int lo = release(items[i]), hi = deadline(items[i]);
                if (hi < pos)
                    throw std::runtime_error(
                        "layout: slot overflow near batch " +
                        std::to_string(items[i].batch_hint) +
                        " (check rejected by the run?)");
                if (lo > pos) continue;
                if (pick < 0 || hi < pick_deadline ||
                    (hi == pick_deadline && items[i].vertex < items[pick].vertex)) {
                    pick = static_cast<int>(i);
                    pick_deadline = hi;
                }
            }
            if (pick < 0) continue;  // slot stays free for the filler
            fix(items[pick].vertex, pos);
            done[pick] = true;
            --remaining;
        }
        if (remaining != 0)
            throw std::runtime_error("layout: unplaced between vertices remain");
    }
};

}  // namespace

TopOrdering layout_from_run(const GadgetDag& dag, const Run& run) {
    const NnccmInstance& m = dag.machine;
    ExpandedRun x = alternative_run(m, run);
    const GadgetParams& p = dag.params;
    const int k = p.counters, len = p.floor_len, B = p.target;

    SlotAssigner slots(dag);
    for (int i = 0; i <= len; ++i) slots.fix(dag.floor_vertex[i], B * i);
    // batch j's counter slot holds the path vertex j + value-before-step-j
    for (int j = 1; j <= len; ++j)
        for (int i = 1; i <= k; ++i) {
            int idx = j + x.value_at_step[i - 1][j - 1];
            slots.fix(dag.counter_path_vertex(i, idx), B * (j - 1) + 3 + i);
        }

    // flexible items: unit-increase vertices, counter betweens, floor betweens
    auto add_item = [&](int v, int batch_hint) {
        SlotAssigner::Item it;
        it.vertex = v;
        for (int u : dag.graph.in(v)) it.preds.push_back(u);
        for (int w : dag.graph.out(v)) it.succs.push_back(w);
        it.batch_hint = batch_hint;
        slots.items.push_back(std::move(it));
    };
    for (int j = 1; j <= len; ++j)
        for (int i = 1; i <= k; ++i)
            if (x.value_at_step[i - 1][j] == x.value_at_step[i - 1][j - 1] + 1)
                add_item(dag.counter_path_vertex(i, j + x.value_at_step[i - 1][j]), j);
    for (const auto& cb : dag.counter_between) add_item(cb.vertex, cb.round * p.check_stride);
    for (int j = 1; j <= len; ++j)
        for (int w : dag.floor_between[j]) add_item(w, j);
    slots.assign_items();

    // the filler path takes every remaining position in order; the
    // reserved third slot of each batch keeps consecutive gaps within B
    std::vector<int> free_pos;
    for (int q = 0; q < p.vertex_total; ++q)
        if (!slots.occupied[q]) free_pos.push_back(q);
    if (static_cast<int>(free_pos.size()) != p.filler_len)
        throw std::logic_error("layout: free slot count mismatch");
    for (int q = 0; q < p.filler_len; ++q) slots.fix(dag.filler_vertex[q], free_pos[q]);

    TopOrdering f;
    f.position = slots.position;
    if (bandwidth_of(dag.graph, f) > B)
        throw std::logic_error("layout_from_run: bandwidth exceeds target");
    return f;
}

TopOrdering layout_from_run(const NnccmInstance& m, const Run& run) {
    return layout_from_run(build_dag(m), run);
}

Run run_from_layout(const NnccmInstance& m, const GadgetDag& dag,
                    const TopOrdering& f) {
    const GadgetParams& p = dag.params;
    if (bandwidth_of(dag.graph, f) > p.target)
        throw std::invalid_argument("run_from_layout: ordering exceeds the target");
    for (int i = 0; i <= p.floor_len; ++i)
        if (f.position[dag.floor_vertex[i]] != p.target * i)
            throw std::runtime_error("run_from_layout: floor vertex off its forced slot");

    const int s = p.check_stride;
    Run run;
    run.values.assign(p.rounds, std::vector<int>(p.counters, 0));
    for (int j = 1; j <= p.rounds; ++j) {
        int batch = j * s;
        int lo = p.target * (batch - 1), hi = p.target * batch;  // exclusive bounds
        for (int i = 1; i <= p.counters; ++i) {
            int best = -1;
            for (int q = 0; q <= p.max_value; ++q) {
                int v = dag.counter_path_vertex(i, batch + q);
                int pos = f.position[v];
                if (pos > lo && pos < hi) best = q;
            }
            if (best < 0)
                throw std::runtime_error(
                    "run_from_layout: no vertex of counter " + std::to_string(i) +
                    " in batch " + std::to_string(batch));
            run.values[j - 1][i - 1] = best;
        }
    }
    if (!validate_run(m, run))
        throw std::runtime_error("run_from_layout: extracted run does not validate");
    return run;
}

// ---------------------------------------------------------------- tree

GadgetTree build_tree(const NnccmInstance& m) {
    GadgetTree tree;
    tree.base = build_dag(m);
    tree.params = tree.base.params;
    tree.machine = m;
    const GadgetParams& p = tree.params;
    const int k = p.counters, len = p.floor_len, B = p.target;

    Digraph& g = tree.graph;
    g = Digraph(tree.base.graph.vertex_count());
    g.labels = tree.base.graph.labels;

    // keep every base arc except between-vertex out-arcs and the path-end
    // arcs into the floor sink
    const int sink = tree.base.floor_vertex[len];
    auto is_between = [&](int v) {
        auto it = g.labels.find(v);
        return it != g.labels.end() &&
               (it->second.role == GadgetLabel::Role::floor_between ||
                it->second.role == GadgetLabel::Role::counter_between);
    };
    for (auto [u, v] : tree.base.graph.arcs()) {
        if (is_between(u)) continue;
        if (v == sink && u != tree.base.floor_vertex[len - 1]) continue;
        g.add_arc(u, v);
    }

    auto add_labeled = [&](GadgetLabel lab) {
        int v = g.add_vertex();
        g.labels.emplace(v, lab);
        return v;
    };
    using TK = GadgetLabel::TailKind;

    for (int i = 0; i < 4; ++i) {
        int leaf = add_labeled({GadgetLabel::Role::tail_leaf, -1, i + 1, TK::floor});
        g.add_arc(sink, leaf);
        tree.sink_leaves.push_back(leaf);
    }

    tree.floor_tail.resize(3 * k + 3);
    for (int i = 1; i <= 3 * k + 3; ++i) {
        tree.floor_tail[i - 1] =
            add_labeled({GadgetLabel::Role::tail_path, -1, i, TK::floor});
        g.add_arc(i == 1 ? sink : tree.floor_tail[i - 2], tree.floor_tail[i - 1]);
    }
    for (int i = 0; i < B; ++i) {
        int leaf = add_labeled({GadgetLabel::Role::tail_leaf, -1, i + 1, TK::floor});
        g.add_arc(tree.floor_tail.back(), leaf);
        tree.floor_tail_leaves.push_back(leaf);
    }

    tree.filler_tail.resize(3 * k + 3);
    for (int i = 1; i <= 3 * k + 3; ++i) {
        tree.filler_tail[i - 1] =
            add_labeled({GadgetLabel::Role::tail_path, -1, i, TK::filler});
        g.add_arc(i == 1 ? tree.base.filler_vertex.back() : tree.filler_tail[i - 2],
                  tree.filler_tail[i - 1]);
    }
    tree.filler_tail_leaves.assign(2, {});
    for (int which = 0; which < 2; ++which) {
        int parent = tree.filler_tail[3 * k + 1 + which];
        for (int i = 0; i < B - 2; ++i) {
            int leaf = add_labeled({GadgetLabel::Role::tail_leaf, -1, i + 1, TK::filler});
            g.add_arc(parent, leaf);
            tree.filler_tail_leaves[which].push_back(leaf);
        }
    }

    tree.counter_tail.assign(k, {});
    tree.counter_tail_leaves.assign(k, {});
    for (int i = 1; i <= k; ++i) {
        const int tail_len = 3 * k + 4 - 3 * i;
        auto& path = tree.counter_tail[i - 1];
        path.resize(tail_len);
        for (int q = 1; q <= tail_len; ++q) {
            path[q - 1] = add_labeled({GadgetLabel::Role::tail_path, i, q, TK::counter});
            g.add_arc(q == 1 ? tree.base.counter_vertex[i - 1].back() : path[q - 2],
                      path[q - 1]);
        }
        tree.counter_tail_leaves[i - 1].assign(3, {});
        for (int which = 0; which < 3; ++which) {
            int parent = path[tail_len - 3 + which];
            for (int l = 0; l < B - 2 - i; ++l) {
                int leaf =
                    add_labeled({GadgetLabel::Role::tail_leaf, i, l + 1, TK::counter});
                g.add_arc(parent, leaf);
                tree.counter_tail_leaves[i - 1][which].push_back(leaf);
            }
        }
    }

    // postconditions: downward directed tree, tail total (3k + 4) * B
    if (tree.tail_vertex_count() != (3 * k + 4) * B)
        throw std::logic_error("build_tree: tail vertex count mismatch");
    if (g.arc_count() != g.vertex_count() - 1)
        throw std::logic_error("build_tree: arc count is not n - 1");
    int roots = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.in_degree(v) == 0) ++roots;
        else if (g.in_degree(v) != 1)
            throw std::logic_error("build_tree: in-degree above one");
    }
    if (roots != 1 || g.in_degree(tree.base.floor_vertex[0]) != 0)
        throw std::logic_error("build_tree: root is not unique");
    if (!g.is_acyclic()) throw std::logic_error("build_tree: cycle");
    return tree;
}

int GadgetTree::tail_vertex_count() const {
    return graph.vertex_count() - base.graph.vertex_count();
}

TopOrdering tree_layout_from_run(const GadgetTree& tree, const Run& run) {
    const GadgetParams& p = tree.params;
    const int k = p.counters, B = p.target, len = p.floor_len;
    TopOrdering base = layout_from_run(tree.base, run);

    TopOrdering f;
    f.position.assign(tree.graph.vertex_count(), -1);
    std::copy(base.position.begin(), base.position.end(), f.position.begin());

    int cursor = p.vertex_total;  // first tail position
    auto put = [&](int v) {
        if (f.position[v] != -1) throw std::logic_error("tree layout: double placement");
        f.position[v] = cursor++;
    };
    for (int i = 1; i <= 3 * k + 3; ++i) {
        // tail batch i: filler tail vertex, live counter tail vertices,
        // the four sink leaves in batch one, then the leaves of the last
        // placed tail vertex; the floor tail vertex closes the batch
        put(tree.filler_tail[i - 1]);
        for (int j = 1; j <= k; ++j)
            if (static_cast<int>(tree.counter_tail[j - 1].size()) >= i)
                put(tree.counter_tail[j - 1][i - 1]);
        if (i == 1)
            for (int leaf : tree.sink_leaves) put(leaf);
        for (int j = 1; j <= k; ++j) {
            int tail_len = 3 * k + 4 - 3 * j;
            int which = i - (tail_len - 2);
            if (which >= 0 && which < 3)
                for (int leaf : tree.counter_tail_leaves[j - 1][which]) put(leaf);
        }
        if (i >= 3 * k + 2)
            for (int leaf : tree.filler_tail_leaves[i - (3 * k + 2)]) put(leaf);
        if (cursor != p.vertex_total + B * i - 1)
            throw std::logic_error("tree layout: tail batch " + std::to_string(i) +
                                   " is not exactly full");
        put(tree.floor_tail[i - 1]);
    }
    for (int leaf : tree.floor_tail_leaves) put(leaf);
    if (cursor != tree.graph.vertex_count())
        throw std::logic_error("tree layout: positions left over");

    if (bandwidth_of(tree.graph, f) > B)
        throw std::logic_error("tree_layout_from_run: bandwidth exceeds target");
    return f;
}

TopOrdering tree_layout_from_run(const NnccmInstance& m, const Run& run) {
    return tree_layout_from_run(build_tree(m), run);
}

}  // namespace xnlplab
