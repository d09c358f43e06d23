#include "xnlplab/dot_export.hpp"

#include <ostream>
#include <sstream>

namespace xnlplab {

namespace {

struct RoleStyle {
    const char* color;
    const char* prefix;
};

RoleStyle style_of(const GadgetLabel& lab) {
    using R = GadgetLabel::Role;
    switch (lab.role) {
        case R::floor_path: return {"lightblue", "Fl"};
        case R::floor_between: return {"gold", "FB"};
        case R::counter_path: return {"palegreen", "C"};
        case R::counter_between: return {"salmon", "CB"};
        case R::filler_path: return {"lightgray", "Fil"};
        case R::tail_path: return {"plum", "T"};
        case R::tail_leaf: return {"white", "leaf"};
    }
    return {"white", "?"};
}

std::string node_label(const GadgetLabel& lab) {
    std::ostringstream os;
    RoleStyle st = style_of(lab);
    os << st.prefix;
    if (lab.role == GadgetLabel::Role::tail_path ||
        lab.role == GadgetLabel::Role::tail_leaf) {
        switch (lab.tail) {
            case GadgetLabel::TailKind::floor: os << "f"; break;
            case GadgetLabel::TailKind::filler: os << "fi"; break;
            case GadgetLabel::TailKind::counter: os << "c"; break;
        }
    }
    if (lab.index1 >= 0) os << lab.index1;
    if (lab.index2 >= 0) os << "." << lab.index2;
    return os.str();
}

}  // namespace

void export_dot(const Digraph& g, std::ostream& out, const std::string& name) {
    out << "digraph " << name << " {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle, style=filled, fillcolor=white];\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto it = g.labels.find(v);
        if (it == g.labels.end()) {
            out << "  " << v << ";\n";
            continue;
        }
        RoleStyle st = style_of(it->second);
        out << "  " << v << " [fillcolor=" << st.color << ", label=\""
            << node_label(it->second) << "\"];\n";
    }
    for (auto [u, v] : g.arcs()) out << "  " << u << " -> " << v << ";\n";
    out << "}\n";
}

std::string to_dot(const Digraph& g, const std::string& name) {
    std::ostringstream os;
    export_dot(g, os, name);
    return os.str();
}

}  // namespace xnlplab
