#include "xnlplab/digraph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace xnlplab {

namespace {

const char* role_tag(GadgetLabel::Role r) {
    switch (r) {
        case GadgetLabel::Role::floor_path: return "floor_path";
        case GadgetLabel::Role::floor_between: return "floor_between";
        case GadgetLabel::Role::counter_path: return "counter_path";
        case GadgetLabel::Role::counter_between: return "counter_between";
        case GadgetLabel::Role::filler_path: return "filler_path";
        case GadgetLabel::Role::tail_path: return "tail_path";
        case GadgetLabel::Role::tail_leaf: return "tail_leaf";
    }
    return "?";
}

const char* tail_tag(GadgetLabel::TailKind t) {
    switch (t) {
        case GadgetLabel::TailKind::floor: return "floor";
        case GadgetLabel::TailKind::filler: return "filler";
        case GadgetLabel::TailKind::counter: return "counter";
    }
    return "?";
}

}  // namespace

std::string GadgetLabel::to_string() const {
    std::ostringstream os;
    os << role_tag(role);
    if (role == Role::tail_path || role == Role::tail_leaf) {
        os << ':' << tail_tag(tail);
    }
    if (index1 >= 0) os << ':' << index1;
    if (index2 >= 0) os << ':' << index2;
    return os.str();
}

std::optional<GadgetLabel> GadgetLabel::parse(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    if (parts.empty()) return std::nullopt;

    GadgetLabel lab;
    const std::string& tag = parts[0];
    if (tag == "floor_path") lab.role = Role::floor_path;
    else if (tag == "floor_between") lab.role = Role::floor_between;
    else if (tag == "counter_path") lab.role = Role::counter_path;
    else if (tag == "counter_between") lab.role = Role::counter_between;
    else if (tag == "filler_path") lab.role = Role::filler_path;
    else if (tag == "tail_path") lab.role = Role::tail_path;
    else if (tag == "tail_leaf") lab.role = Role::tail_leaf;
    else return std::nullopt;

    std::size_t next = 1;
    if (lab.role == Role::tail_path || lab.role == Role::tail_leaf) {
        if (next >= parts.size()) return std::nullopt;
        const std::string& t = parts[next++];
        if (t == "floor") lab.tail = TailKind::floor;
        else if (t == "filler") lab.tail = TailKind::filler;
        else if (t == "counter") lab.tail = TailKind::counter;
        else return std::nullopt;
    }
    try {
        if (next < parts.size()) lab.index1 = std::stoi(parts[next++]);
        if (next < parts.size()) lab.index2 = std::stoi(parts[next++]);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (next != parts.size()) return std::nullopt;
    return lab;
}

Digraph::Digraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("digraph: negative vertex count");
    out_.resize(n);
    in_.resize(n);
}

int Digraph::add_vertex() {
    out_.emplace_back();
    in_.emplace_back();
    return n_++;
}

void Digraph::add_arc(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("digraph: arc endpoint out of range");
    if (u == v) throw std::invalid_argument("digraph: self-loop");
    if (!arc_set_.insert({u, v}).second) return;  // deduplicate
    arcs_.push_back({u, v});
    out_[u].push_back(v);
    in_[v].push_back(u);
}

bool Digraph::has_arc(int u, int v) const {
    return arc_set_.count({u, v}) > 0;
}

bool Digraph::is_acyclic() const {
    // Kahn's algorithm: every vertex must be popped.
    std::vector<int> indeg(n_);
    for (int v = 0; v < n_; ++v) indeg[v] = in_degree(v);
    std::vector<int> stack;
    for (int v = 0; v < n_; ++v)
        if (indeg[v] == 0) stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (int w : out_[v])
            if (--indeg[w] == 0) stack.push_back(w);
    }
    return seen == n_;
}

Digraph Digraph::reversed() const {
    Digraph r(n_);
    for (auto [u, v] : arcs_) r.add_arc(v, u);
    r.labels = labels;
    return r;
}

std::vector<std::vector<bool>> Digraph::reachability() const {
    std::vector<std::vector<bool>> reach(n_, std::vector<bool>(n_, false));
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        stack.assign(out_[s].begin(), out_[s].end());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (reach[s][v]) continue;
            reach[s][v] = true;
            for (int w : out_[v])
                if (!reach[s][w]) stack.push_back(w);
        }
        reach[s][s] = false;
    }
    return reach;
}

std::vector<int> TopOrdering::order() const {
    std::vector<int> ord(position.size(), -1);
    for (std::size_t v = 0; v < position.size(); ++v) {
        int p = position[v];
        if (p < 0 || p >= static_cast<int>(position.size()) || ord[p] != -1)
            throw std::invalid_argument("ordering: position map is not a bijection");
        ord[p] = static_cast<int>(v);
    }
    return ord;
}

bool is_permutation(const TopOrdering& f, int n) {
    if (static_cast<int>(f.position.size()) != n) return false;
    std::vector<bool> used(n, false);
    for (int p : f.position) {
        if (p < 0 || p >= n || used[p]) return false;
        used[p] = true;
    }
    return true;
}

bool is_topological(const Digraph& g, const TopOrdering& f) {
    if (!is_permutation(f, g.vertex_count())) return false;
    for (auto [u, v] : g.arcs())
        if (f.position[u] >= f.position[v]) return false;
    return true;
}

}  // namespace xnlplab
