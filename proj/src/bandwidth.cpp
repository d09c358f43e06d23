#include "xnlplab/bandwidth.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace xnlplab {

int bandwidth_of(const Digraph& g, const TopOrdering& f) {
    if (!is_topological(g, f))
        throw std::invalid_argument("bandwidth_of: ordering is not topological");
    int bw = 0;
    for (auto [u, v] : g.arcs()) bw = std::max(bw, f.position[v] - f.position[u]);
    return bw;
}

// ----------------------------------------------------- branch and bound

namespace {

struct BandwidthSearch {
    const Digraph& g;
    const int n;
    const int b;
    const std::uint64_t budget;
    std::uint64_t expansions = 0;
    bool out_of_budget = false;

    std::vector<int> pos;        // vertex -> position or -1
    std::vector<int> order;      // positions filled so far
    std::vector<int> placed_in;  // vertex -> number of placed in-neighbors
    std::vector<int> twin_prev;  // same-neighborhood twin with next-lower id
    std::unordered_set<std::string> failed;

    BandwidthSearch(const Digraph& graph, int limit, std::uint64_t max_expansions)
        : g(graph), n(graph.vertex_count()), b(limit), budget(max_expansions) {
        pos.assign(n, -1);
        placed_in.assign(n, 0);
        order.reserve(n);
        find_twins();
    }

    // Vertices with identical in- and out-neighborhoods are interchangeable;
    // demand ascending ids among unplaced twins.
    void find_twins() {
        twin_prev.assign(n, -1);
        std::vector<std::pair<std::vector<int>, std::vector<int>>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v] = {g.in(v), g.out(v)};
            std::sort(sig[v].first.begin(), sig[v].first.end());
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        for (int v = 0; v < n; ++v)
            for (int u = v - 1; u >= 0; --u)
                if (sig[u] == sig[v]) {
                    twin_prev[v] = u;
                    break;
                }
    }

    std::string state_key() const {
        std::string key;
        key.reserve((n + 7) / 8 + std::min<int>(b, n) * 2 + 2);
        std::string mask((n + 7) / 8, '\0');
        for (int v = 0; v < n; ++v)
            if (pos[v] >= 0) mask[v >> 3] |= static_cast<char>(1 << (v & 7));
        key += mask;
        int from = std::max(0, static_cast<int>(order.size()) - b);
        for (std::size_t i = from; i < order.size(); ++i) {
            key.push_back(static_cast<char>(order[i] & 0xff));
            key.push_back(static_cast<char>((order[i] >> 8) & 0xff));
        }
        return key;
    }

    bool placeable(int v, int p) const {
        if (pos[v] >= 0 || placed_in[v] != g.in_degree(v)) return false;
        for (int u : g.in(v))
            if (p - pos[u] > b) return false;
        if (twin_prev[v] >= 0 && pos[twin_prev[v]] < 0) return false;
        return true;
    }

    // Earliest-deadline feasibility of the pending successors of the
    // placed window; also extracts a forced vertex for position p.
    bool deadlines_ok(int p, int& forced) {
        forced = -1;
        std::vector<std::pair<int, int>> pending;  // (deadline, vertex)
        int from = std::max(0, static_cast<int>(order.size()) - b);
        for (std::size_t i = from; i < order.size(); ++i) {
            int u = order[i];
            int deadline = pos[u] + b;
            for (int w : g.out(u))
                if (pos[w] < 0) pending.push_back({deadline, w});
        }
        if (pending.empty()) return true;
        std::sort(pending.begin(), pending.end());
        // deduplicate, keeping each vertex's tightest deadline
        std::vector<std::pair<int, int>> uniq;
        std::vector<bool> seen(n, false);
        for (auto [d, w] : pending) {
            if (seen[w]) continue;
            seen[w] = true;
            uniq.push_back({d, w});
        }
        for (std::size_t i = 0; i < uniq.size(); ++i) {
            if (uniq[i].first < p + static_cast<int>(i)) return false;
            if (uniq[i].first == p + static_cast<int>(i) && i == 0) forced = uniq[i].second;
        }
        int at_p = 0;
        for (auto& [d, w] : uniq)
            if (d == p) ++at_p;
        if (at_p > 1) return false;
        return true;
    }

    // true = feasible found; false = exhausted (or budget, flagged)
    bool search() {
        const int p = static_cast<int>(order.size());
        if (p == n) return true;
        if (++expansions > budget) {
            out_of_budget = true;
            return false;
        }
        // the vertex leaving the window must have all successors placed
        if (p > b) {
            int u = order[p - b - 1];
            for (int w : g.out(u))
                if (pos[w] < 0) return false;
        }
        int forced = -1;
        if (!deadlines_ok(p, forced)) return false;

        std::string key = state_key();
        if (failed.count(key)) return false;

        std::vector<int> candidates;
        if (forced >= 0) {
            // unplaced twins of a forced vertex share its deadline and
            // would already have failed the count above
            candidates.push_back(forced);
        } else {
            for (int v = 0; v < n; ++v)
                if (placeable(v, p)) candidates.push_back(v);
        }
        for (int v : candidates) {
            if (!placeable(v, p)) continue;
            place(v, p);
            bool ok = search();
            unplace(v);
            if (ok) return true;
            if (out_of_budget) return false;
        }
        if (failed.size() < 4'000'000) failed.insert(std::move(key));
        return false;
    }

    void place(int v, int p) {
        pos[v] = p;
        order.push_back(v);
        for (int w : g.out(v)) ++placed_in[w];
    }

    void unplace(int v) {
        for (int w : g.out(v)) --placed_in[w];
        order.pop_back();
        pos[v] = -1;
    }
};

}  // namespace

BandwidthDecision exact_bandwidth(const Digraph& g, int limit, std::uint64_t budget) {
    if (limit < 0) throw std::invalid_argument("exact_bandwidth: negative limit");
    if (!g.is_acyclic()) throw std::invalid_argument("exact_bandwidth: cyclic input");
    const int n = g.vertex_count();
    if (n == 0) return BandwidthDecision::make_feasible(TopOrdering{});

    // an arc's endpoints sit within `limit` positions, so degrees bound limit
    for (int v = 0; v < n; ++v)
        if (g.in_degree(v) > limit || g.out_degree(v) > limit)
            return BandwidthDecision::make_infeasible();

    BandwidthSearch search(g, limit, budget);
    bool found = search.search();
    if (found) {
        TopOrdering f;
        f.position = search.pos;
        if (bandwidth_of(g, f) > limit)
            throw std::logic_error("exact_bandwidth: certificate exceeds limit");
        return BandwidthDecision::make_feasible(std::move(f));
    }
    if (search.out_of_budget) return BandwidthDecision::make_timeout();
    return BandwidthDecision::make_infeasible();
}

// ------------------------------------------------------------- oracles

namespace {

void all_orderings(const Digraph& g, std::vector<int>& indeg, std::vector<int>& pos,
                   std::vector<bool>& placed, int depth, int current, int& best) {
    const int n = g.vertex_count();
    if (depth == n) {
        best = std::min(best, current);
        return;
    }
    for (int v = 0; v < n; ++v) {
        if (placed[v] || indeg[v] != 0) continue;
        int stretch = 0;
        for (int u : g.in(v)) stretch = std::max(stretch, depth - pos[u]);
        placed[v] = true;
        pos[v] = depth;
        for (int w : g.out(v)) --indeg[w];
        all_orderings(g, indeg, pos, placed, depth + 1, std::max(current, stretch), best);
        for (int w : g.out(v)) ++indeg[w];
        placed[v] = false;
    }
}

}  // namespace

int brute_bandwidth(const Digraph& g, int cap) {
    if (!g.is_acyclic()) throw std::invalid_argument("brute_bandwidth: cyclic input");
    if (g.vertex_count() > cap)
        throw std::invalid_argument("brute_bandwidth: vertex count above cap");
    if (g.vertex_count() == 0) return 0;
    std::vector<int> indeg(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) indeg[v] = g.in_degree(v);
    std::vector<int> pos(g.vertex_count(), -1);
    std::vector<bool> placed(g.vertex_count(), false);
    int best = std::numeric_limits<int>::max();
    all_orderings(g, indeg, pos, placed, 0, 0, best);
    return best;
}

// --------------------------------------------------------------- width

namespace {

bool kuhn_augment(int u, const std::vector<std::vector<int>>& adj,
                  std::vector<int>& match_left, std::vector<int>& match_right,
                  std::vector<bool>& visited) {
    for (int v : adj[u]) {
        if (visited[v]) continue;
        visited[v] = true;
        if (match_right[v] < 0 ||
            kuhn_augment(match_right[v], adj, match_left, match_right, visited)) {
            match_left[u] = v;
            match_right[v] = u;
            return true;
        }
    }
    return false;
}

}  // namespace

int width(const Digraph& g) {
    if (!g.is_acyclic()) throw std::invalid_argument("width: cyclic input");
    const int n = g.vertex_count();
    if (n == 0) return 0;
    auto reach = g.reachability();
    std::vector<std::vector<int>> adj(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (reach[u][v]) adj[u].push_back(v);
    std::vector<int> match_left(n, -1), match_right(n, -1);
    int matching = 0;
    for (int u = 0; u < n; ++u) {
        std::vector<bool> visited(n, false);
        if (kuhn_augment(u, adj, match_left, match_right, visited)) ++matching;
    }
    // minimum path cover of the closure = n - matching = maximum antichain
    return n - matching;
}

int brute_width(const Digraph& g, int cap) {
    if (!g.is_acyclic()) throw std::invalid_argument("brute_width: cyclic input");
    const int n = g.vertex_count();
    if (n > cap)
        throw std::invalid_argument("brute_width: vertex count above cap");
    if (n == 0) return 0;
    auto reach = g.reachability();
    int best = 0;
    for (std::uint32_t set = 1; set < (1u << n); ++set) {
        bool antichain = true;
        for (int u = 0; u < n && antichain; ++u) {
            if (!(set >> u & 1)) continue;
            for (int v = 0; v < n && antichain; ++v) {
                if (u == v || !(set >> v & 1)) continue;
                if (reach[u][v]) antichain = false;
            }
        }
        if (antichain) best = std::max(best, __builtin_popcount(set));
    }
    return best;
}

// -------------------------------------------------------- tree layouts

namespace {

// root of a downward directed tree; throws unless exactly one root,
// every other vertex has in-degree one and all are reachable
int tree_root(const Digraph& g) {
    const int n = g.vertex_count();
    int root = -1;
    for (int v = 0; v < n; ++v) {
        if (g.in_degree(v) == 0) {
            if (root >= 0) throw std::invalid_argument("tree: multiple roots");
            root = v;
        } else if (g.in_degree(v) != 1) {
            throw std::invalid_argument("tree: vertex with in-degree above one");
        }
    }
    if (root < 0) throw std::invalid_argument("tree: no root");
    if (g.arc_count() != n - 1) throw std::invalid_argument("tree: arc count");
    return root;
}

}  // namespace

TopOrdering depth_layout(const Digraph& tree) {
    const int n = tree.vertex_count();
    if (n == 0) return TopOrdering{};
    int root = tree_root(tree);

    std::vector<int> depth(n, -1);
    std::queue<int> bfs;
    depth[root] = 0;
    bfs.push(root);
    int seen = 0;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        ++seen;
        for (int w : tree.out(v)) {
            depth[w] = depth[v] + 1;
            bfs.push(w);
        }
    }
    if (seen != n) throw std::invalid_argument("tree: not connected");

    std::vector<int> verts(n);
    std::iota(verts.begin(), verts.end(), 0);
    std::stable_sort(verts.begin(), verts.end(),
                     [&](int a, int bb) { return depth[a] < depth[bb]; });
    TopOrdering f;
    f.position.assign(n, -1);
    for (int p = 0; p < n; ++p) f.position[verts[p]] = p;
    return f;
}

Digraph gen_caterpillar(int spine_len, int hair_len) {
    if (spine_len < 1 || hair_len < 1)
        throw std::invalid_argument("gen_caterpillar: lengths must be positive");
    Digraph g(spine_len * (1 + hair_len));
    // spine first, then hair paths hanging from each spine vertex
    for (int i = 0; i + 1 < spine_len; ++i) g.add_arc(i, i + 1);
    int next = spine_len;
    for (int i = 0; i < spine_len; ++i) {
        int prev = i;
        for (int h = 0; h < hair_len; ++h) {
            g.add_arc(prev, next);
            prev = next++;
        }
    }
    return g;
}

}  // namespace xnlplab
