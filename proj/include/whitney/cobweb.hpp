#pragma once

// Cobweb posets: level s holds F_s vertices and every vertex of level s is
// covered by every vertex of level s+1. Levels are 1-based; the layer
// <Phi_k -> Phi_n> is the inclusive slice of levels k..n.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "whitney/bigint.hpp"
#include "whitney/errors.hpp"
#include "whitney/fseq.hpp"
#include "whitney/layer_poset.hpp"
#include "whitney/poset.hpp"

namespace whitney {

struct CobwebVertex {
    std::int64_t s = 1;  // level
    std::int64_t j = 1;  // position within the level, 1..F_s

    friend bool operator==(const CobwebVertex&, const CobwebVertex&) = default;
};

inline std::string label_text(const CobwebVertex& v) {
    return std::to_string(v.s) + ":" + std::to_string(v.j);
}

inline constexpr std::int64_t cobweb_vertex_budget = 10'000;

struct CobwebPoset {
    FSequence seq;
    std::int64_t level_max = 0;
    std::vector<std::int64_t> widths;  // widths[s-1] = F_s
    FinitePoset<CobwebVertex> poset;

    /// Level of every vertex, in element order (for DOT grouping).
    std::vector<std::int64_t> levels() const {
        std::vector<std::int64_t> out;
        out.reserve(poset.size());
        for (const auto& v : poset.elements()) out.push_back(v.s);
        return out;
    }
};

inline CobwebPoset build_cobweb(const FSequence& seq, std::int64_t level_max) {
    if (level_max < 1) throw invalid_bounds("cobweb needs level_max >= 1, got " + std::to_string(level_max));
    std::vector<std::int64_t> widths;
    BigInt total;
    for (std::int64_t s = 1; s <= level_max; ++s) {
        const BigInt w = seq.value(s);
        total += w;
        if (total > cobweb_vertex_budget)
            throw budget_exceeded("cobweb over '" + seq.id() + "' with " + std::to_string(level_max) +
                                  " levels exceeds " + std::to_string(cobweb_vertex_budget) + " vertices");
        widths.push_back(w.convert_to<std::int64_t>());
    }

    std::vector<CobwebVertex> vertices;
    std::vector<std::size_t> level_start;
    for (std::int64_t s = 1; s <= level_max; ++s) {
        level_start.push_back(vertices.size());
        for (std::int64_t j = 1; j <= widths[static_cast<std::size_t>(s - 1)]; ++j) vertices.push_back({s, j});
    }
    level_start.push_back(vertices.size());

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t lv = 0; lv + 2 < level_start.size(); ++lv)
        for (std::size_t x = level_start[lv]; x < level_start[lv + 1]; ++x)
            for (std::size_t y = level_start[lv + 1]; y < level_start[lv + 2]; ++y) edges.emplace_back(x, y);

    return CobwebPoset{seq, level_max, std::move(widths),
                       FinitePoset<CobwebVertex>::from_pairs(std::move(vertices), edges)};
}

namespace detail {
inline void check_layer_bounds(const CobwebPoset& c, std::int64_t k, std::int64_t n) {
    if (k < 1 || k >= n || n > c.level_max)
        throw invalid_bounds("layer (" + std::to_string(k) + ", " + std::to_string(n) +
                             ") needs 1 <= k < n <= " + std::to_string(c.level_max));
}
}  // namespace detail

/// Induced subposet on the levels k..n.
inline FinitePoset<CobwebVertex> layer_subposet(const CobwebPoset& c, std::int64_t k, std::int64_t n) {
    detail::check_layer_bounds(c, k, n);
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < c.poset.size(); ++i) {
        const auto s = c.poset.label(i).s;
        if (s >= k && s <= n) subset.push_back(i);
    }
    return c.poset.induced(subset);
}

/// Closed form is the product of level widths F_k ... F_n.
inline BigInt layer_chain_count(const CobwebPoset& c, std::int64_t k, std::int64_t n, CountMethod method) {
    detail::check_layer_bounds(c, k, n);
    if (method == CountMethod::brute) return count_maximal_chains(layer_subposet(c, k, n));
    BigInt product(1);
    for (std::int64_t s = k; s <= n; ++s) product *= c.widths[static_cast<std::size_t>(s - 1)];
    return product;
}

}  // namespace whitney
