#pragma once

// Graphviz DOT output. Horizontal (monic) legs are solid edges, vertical
// (epic) legs dashed with an open arrowhead; homology is shaded.

#include <sstream>
#include <string>

#include "acgw/homology.hpp"
#include "acgw/snake.hpp"

namespace acgw {

namespace detail {

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

inline const char* kHorEdge = "style=solid, arrowhead=normal, arrowtail=odot, dir=both";
inline const char* kVerEdge = "style=dashed, arrowhead=onormal";

}  // namespace detail

/// One column per degree: X_i on the top row, transition objects below.
template <AcgwInstance I>
std::string render_complex_dot(const ChainComplex<I>& x, const std::string& name = "X") {
    using detail::dot_escape;
    std::ostringstream os;
    os << "digraph \"" << dot_escape(name) << "\" {\n  rankdir=LR;\n  node [shape=box, fontname=\"monospace\"];\n";
    for (int i = x.hi(); i >= x.lo; --i) {
        const auto h = homology_at(x, i);
        const bool nonzero = !x.inst.is_zero(h);
        os << "  x" << i << " [label=\"" << dot_escape(name) << '_' << i << " = " << dot_escape(x.inst.describe(x.object(i)))
           << "\\nH_" << i << " = " << dot_escape(x.inst.describe(h)) << '"';
        if (nonzero) os << ", style=filled, fillcolor=\"#ffd27f\"";
        os << "];\n";
    }
    for (int i = x.hi(); i > x.lo; --i) {
        const auto& t = x.transition(i);
        os << "  t" << i << " [shape=ellipse, label=\"" << dot_escape(name) << "bar_" << i << " = "
           << dot_escape(x.inst.describe(t.bar)) << "\"];\n";
        os << "  t" << i << " -> x" << i << " [" << detail::kVerEdge << "];\n";
        os << "  t" << i << " -> x" << i - 1 << " [" << detail::kHorEdge << "];\n";
    }
    os << "}\n";
    return os.str();
}

template <AcgwInstance I>
std::string render_zigzag_dot(const ExactZigzag<I>& z, const std::string& name = "zigzag") {
    using detail::dot_escape;
    std::ostringstream os;
    os << "digraph \"" << dot_escape(name) << "\" {\n  rankdir=LR;\n  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t j = 0; j < z.objects.size(); ++j) {
        const auto label = j < z.labels.size() ? z.labels[j] : "O" + std::to_string(j);
        os << "  o" << j << " [label=\"" << dot_escape(label) << " = " << dot_escape(z.inst.describe(z.objects[j]))
           << '"';
        if (!z.inst.is_zero(z.objects[j])) os << ", style=filled, fillcolor=\"#ffd27f\"";
        os << "];\n";
    }
    for (std::size_t j = 0; j < z.transitions.size(); ++j) {
        const auto label = j < z.transition_labels.size() ? z.transition_labels[j] : "T" + std::to_string(j);
        os << "  t" << j << " [shape=ellipse, label=\"" << dot_escape(label) << " = "
           << dot_escape(z.inst.describe(z.transitions[j].bar)) << "\"];\n";
        os << "  t" << j << " -> o" << j << " [" << detail::kVerEdge << "];\n";
        os << "  t" << j << " -> o" << j + 1 << " [" << detail::kHorEdge << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace acgw
