#pragma once

// The poset of layers p_{l,m} ordered componentwise, bounded above by
// p_{k,n}. Two element sets are supported:
//
//   strict: {(l,m) : 0 <= l <= k, l < m <= n}   bottom (0,1), rank l+m-1
//   weak:   {(l,m) : 0 <= l <= k, l <= m <= n}  bottom (0,0)
//
// The size, rank and slant-count formulas hold for the strict set; maximal
// chains of the weak set are the ballot lattice paths.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "whitney/bigint.hpp"
#include "whitney/errors.hpp"
#include "whitney/fnomial.hpp"
#include "whitney/poset.hpp"

namespace whitney {

struct GridElement {
    std::int64_t l = 0;
    std::int64_t m = 0;

    friend bool operator==(const GridElement&, const GridElement&) = default;
};

/// Definition-1 order: componentwise.
inline bool grid_leq(const GridElement& a, const GridElement& b) { return a.l <= b.l && a.m <= b.m; }

inline std::string label_text(const GridElement& e) {
    return "p(" + std::to_string(e.l) + "," + std::to_string(e.m) + ")";
}

enum class GridMode { strict, weak };

inline const char* to_string(GridMode mode) { return mode == GridMode::strict ? "strict" : "weak"; }

struct GridPoset {
    std::int64_t k = 0;
    std::int64_t n = 0;
    GridMode mode = GridMode::strict;
    FinitePoset<GridElement> poset;
};

namespace detail {
inline void check_grid_bounds(std::int64_t k, std::int64_t n, GridMode mode) {
    const bool ok = k >= 0 && k <= n && (mode == GridMode::weak || k < n);
    if (!ok)
        throw invalid_bounds("grid (" + std::to_string(k) + ", " + std::to_string(n) + ") in " +
                             to_string(mode) + " mode needs 0 <= k " + (mode == GridMode::strict ? "<" : "<=") +
                             " n");
}
}  // namespace detail

/// Elements in row-major order of (l, m).
inline std::vector<GridElement> grid_elements(std::int64_t k, std::int64_t n, GridMode mode) {
    detail::check_grid_bounds(k, n, mode);
    std::vector<GridElement> out;
    for (std::int64_t l = 0; l <= k; ++l)
        for (std::int64_t m = (mode == GridMode::strict ? l + 1 : l); m <= n; ++m) out.push_back({l, m});
    return out;
}

inline GridPoset build_grid(std::int64_t k, std::int64_t n, GridMode mode) {
    return GridPoset{k, n, mode, FinitePoset<GridElement>::from_relation(grid_elements(k, n, mode), grid_leq)};
}

/// (n-k)(k+1) + k(k+1)/2, the strict-grid size.
inline std::int64_t size_formula(std::int64_t k, std::int64_t n) {
    if (k < 0 || k > n)
        throw invalid_bounds("size formula needs 0 <= k <= n, got (" + std::to_string(k) + ", " +
                             std::to_string(n) + ")");
    return (n - k) * (k + 1) + k * (k + 1) / 2;
}

/// l + m - 1, defined on strict elements only.
inline std::int64_t grid_rank(const GridElement& e) {
    if (e.l < 0 || e.m <= e.l)
        throw undefined_rank("rank l+m-1 is defined only for l < m, got " + label_text(e));
    return e.l + e.m - 1;
}

namespace detail {
inline void check_strict(std::int64_t l, std::int64_t m) { check_grid_bounds(l, m, GridMode::strict); }
}  // namespace detail

/// Number of strict-grid points of P_{l,m} at rank k_rank, counted along the
/// anti-diagonal a + b = k_rank + 1.
inline std::int64_t stirling2_grid(std::int64_t k_rank, std::int64_t l, std::int64_t m) {
    detail::check_strict(l, m);
    if (k_rank < 0) return 0;
    std::int64_t count = 0;
    const std::int64_t slant = k_rank + 1;
    for (std::int64_t a = 0; a <= l; ++a) {
        const std::int64_t b = slant - a;
        if (b > a && b <= m) ++count;
    }
    return count;
}

/// max(0, min(l, ceil((k+1)/2) - 1) - max(0, k+1-m) + 1).
inline std::int64_t stirling2_closed(std::int64_t k_rank, std::int64_t l, std::int64_t m) {
    detail::check_strict(l, m);
    if (k_rank < 0) return 0;
    const std::int64_t slant = k_rank + 1;
    const std::int64_t hi = std::min(l, (slant + 1) / 2 - 1);
    const std::int64_t lo = std::max<std::int64_t>(0, slant - m);
    return std::max<std::int64_t>(0, hi - lo + 1);
}

/// Row of first-kind numbers sum_{r(pi)=k} mu((0,1), pi) for k = 0..l+m-1.
inline std::vector<std::int64_t> stirling1_grid_row(std::int64_t l, std::int64_t m) {
    detail::check_strict(l, m);
    return whitney(build_grid(l, m, GridMode::strict).poset, WhitneyKind::first).values;
}

inline std::int64_t stirling1_grid(std::int64_t k_rank, std::int64_t l, std::int64_t m) {
    const auto row = stirling1_grid_row(l, m);
    if (k_rank < 0 || k_rank >= static_cast<std::int64_t>(row.size())) return 0;
    return row[static_cast<std::size_t>(k_rank)];
}

inline std::int64_t bell_grid(std::int64_t l, std::int64_t m) {
    detail::check_strict(l, m);
    std::int64_t total = 0;
    for (std::int64_t k = 0; k <= l + m - 1; ++k) total += stirling2_grid(k, l, m);
    return total;
}

enum class CountMethod { brute, closed };

/// Closed forms: weak -> ballot(k, n); strict -> (n-k)/n * C(n+k-1, k), which
/// is ballot(k, n-1) after shifting m by one.
inline BigInt grid_chain_count(std::int64_t k, std::int64_t n, GridMode mode, CountMethod method) {
    detail::check_grid_bounds(k, n, mode);
    if (method == CountMethod::brute) return count_maximal_chains(build_grid(k, n, mode).poset);
    if (mode == GridMode::weak) return ballot(k, n).count;
    return binomial(n + k - 1, k) * (n - k) / n;
}

}  // namespace whitney
