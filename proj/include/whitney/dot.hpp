#pragma once

// Graphviz DOT export of Hasse diagrams. Edges point from the covered
// element to the covering one; rankdir=BT draws them upward.

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "whitney/poset.hpp"

namespace whitney {

inline std::string label_text(const std::string& s) { return s; }

template <class T>
    requires std::is_integral_v<T>
std::string label_text(T v) {
    return std::to_string(v);
}

namespace detail {
inline std::string dot_quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}
}  // namespace detail

/// Byte-deterministic DOT text. Nodes and edges follow insertion order; each
/// level becomes a `rank=same` group. Without explicit `levels`, the rank
/// function is used when the poset is graded, otherwise no groups are emitted.
template <class Label>
std::string to_dot(const FinitePoset<Label>& p,
                   std::optional<std::vector<std::int64_t>> levels = std::nullopt,
                   std::string_view graph_name = "poset") {
    if (!levels && !p.empty()) {
        try {
            levels = rank_function(p).rank;
        } catch (const not_graded&) {
        }
    }
    std::vector<std::string> names;
    names.reserve(p.size());
    for (const Label& label : p.elements()) {
        using whitney::label_text;
        names.push_back(detail::dot_quote(label_text(label)));
    }

    std::ostringstream out;
    out << "digraph " << detail::dot_quote(graph_name) << " {\n";
    out << "  rankdir=BT;\n";
    for (const auto& name : names) out << "  " << name << ";\n";
    for (auto [x, y] : p.covers()) out << "  " << names[x] << " -> " << names[y] << ";\n";
    if (levels) {
        std::map<std::int64_t, std::vector<std::size_t>> groups;
        for (std::size_t i = 0; i < p.size(); ++i) groups[levels->at(i)].push_back(i);
        for (const auto& [level, members] : groups) {
            out << "  { rank=same;";
            for (std::size_t i : members) out << ' ' << names[i] << ';';
            out << " }\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace whitney
