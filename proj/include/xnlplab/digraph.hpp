#ifndef XNLPLAB_DIGRAPH_HPP
#define XNLPLAB_DIGRAPH_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace xnlplab {

// Role annotation for vertices of reduction-built graphs.
struct GadgetLabel {
    enum class Role {
        floor_path,
        floor_between,
        counter_path,
        counter_between,
        filler_path,
        tail_path,
        tail_leaf,
    };
    enum class TailKind { floor, filler, counter };

    Role role = Role::floor_path;
    int index1 = -1;  // counter id where applicable
    int index2 = -1;  // position along the path where applicable
    TailKind tail = TailKind::floor;

    std::string to_string() const;
    static std::optional<GadgetLabel> parse(const std::string& s);
    bool operator==(const GadgetLabel&) const = default;
};

// Simple digraph on vertices [0, n). No self-loops, arcs deduplicated.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    int add_vertex();  // returns the new vertex id
    void add_arc(int u, int v);
    bool has_arc(int u, int v) const;
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    const std::vector<int>& out(int v) const { return out_.at(v); }
    const std::vector<int>& in(int v) const { return in_.at(v); }
    int out_degree(int v) const { return static_cast<int>(out_.at(v).size()); }
    int in_degree(int v) const { return static_cast<int>(in_.at(v).size()); }

    bool is_acyclic() const;
    Digraph reversed() const;

    // vertex -> vertex reachability closure (reach[u][v] true iff a
    // directed path u -> v with u != v exists)
    std::vector<std::vector<bool>> reachability() const;

    std::map<int, GadgetLabel> labels;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> arcs_;
    std::set<std::pair<int, int>> arc_set_;
    std::vector<std::vector<int>> out_, in_;
};

// Bijective vertex -> position map over [0, n).
struct TopOrdering {
    std::vector<int> position;

    // inverse permutation: order()[p] = vertex at position p
    std::vector<int> order() const;
    bool operator==(const TopOrdering&) const = default;
};

bool is_permutation(const TopOrdering& f, int n);
bool is_topological(const Digraph& g, const TopOrdering& f);

}  // namespace xnlplab

#endif
