#pragma once

// Minimal reader for the DOT subset the exporter writes: quoted node
// statements, quoted edge statements, and rank=same groups.

#include <regex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

struct ParsedDot {
    std::vector<std::string> nodes;
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::vector<std::string>> groups;
    bool well_formed = false;
};

inline ParsedDot parse_dot(const std::string& text)
{
    static const std::regex quoted(R"re("((?:[^"\\]|\\.)*)")re");
    static const std::regex node_line(R"re(^\s*("(?:[^"\\]|\\.)*");\s*$)re");
    static const std::regex edge_line(R"re(^\s*("(?:[^"\\]|\\.)*") -> ("(?:[^"\\]|\\.)*");\s*$)re");
    static const std::regex group_line(R"re(^\s*\{ rank=same;(.*)\}\s*$)re");

    auto unquote = [](const std::string& q) {
        std::string out;
        for (std::size_t i = 1; i + 1 < q.size(); ++i) {
            if (q[i] == '\\' && i + 2 < q.size()) ++i;
            out += q[i];
        }
        return out;
    };

    ParsedDot dot;
    std::istringstream in(text);
    std::string line;
    bool opened = false;
    while (std::getline(in, line)) {
        std::smatch m;
        if (line.rfind("digraph ", 0) == 0 && line.back() == '{') {
            opened = true;
        } else if (line == "}") {
            dot.well_formed = opened;
        } else if (std::regex_match(line, m, edge_line)) {
            dot.edges.emplace_back(unquote(m[1]), unquote(m[2]));
        } else if (std::regex_match(line, m, node_line)) {
            dot.nodes.push_back(unquote(m[1]));
        } else if (std::regex_match(line, m, group_line)) {
            std::vector<std::string> members;
            const std::string body = m[1];
            for (auto it = std::sregex_iterator(body.begin(), body.end(), quoted); it != std::sregex_iterator(); ++it)
                members.push_back(unquote((*it)[0]));
            dot.groups.push_back(members);
        }
    }
    return dot;
}
