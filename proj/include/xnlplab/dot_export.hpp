#ifndef XNLPLAB_DOT_EXPORT_HPP
#define XNLPLAB_DOT_EXPORT_HPP

#include <iosfwd>
#include <string>

#include "xnlplab/digraph.hpp"

namespace xnlplab {

// Graphviz text output with one color and short label per gadget role.
void export_dot(const Digraph& g, std::ostream& out,
                const std::string& name = "g");
std::string to_dot(const Digraph& g, const std::string& name = "g");

}  // namespace xnlplab

#endif
