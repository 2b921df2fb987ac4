#pragma once

// Finite posets over opaque labels: transitive closure, Hasse covers, rank
// function, maximal chains, Möbius function and Whitney numbers.
//
// Elements are addressed by insertion index. Every derived list (covers,
// minimal/maximal elements, enumerated chains) is ordered by that index so
// outputs are reproducible.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "whitney/bigint.hpp"
#include "whitney/errors.hpp"

namespace whitney {

using Bitset = boost::dynamic_bitset<std::uint64_t>;
using Chain = std::vector<std::size_t>;

template <class Label>
class FinitePoset {
public:
    FinitePoset() = default;

    /// Builds the order generated by `leq_pairs` (indices into `elements`):
    /// the reflexive-transitive closure. Fails on a cycle.
    static FinitePoset from_pairs(std::vector<Label> elements,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& leq_pairs) {
        const std::size_t n = elements.size();
        std::vector<std::vector<std::size_t>> succ(n);
        for (auto [x, y] : leq_pairs) {
            if (x >= n || y >= n)
                throw invalid_bounds("pair (" + std::to_string(x) + ", " + std::to_string(y) +
                                     ") references an element outside 0.." + std::to_string(n));
            if (x != y) succ[x].push_back(y);
        }
        for (auto& s : succ) {
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
        }
        FinitePoset p;
        p.labels_ = std::move(elements);
        p.order_ = topological_order(succ);
        p.up_ = closure_of(succ, p.order_);
        p.finish();
        return p;
    }

    /// Builds a poset from an explicit relation `leq(a, b)` evaluated on every
    /// ordered pair of labels. Checks reflexivity, antisymmetry and
    /// transitivity, reporting the first offending pair.
    template <class Leq>
    static FinitePoset from_relation(std::vector<Label> elements, Leq leq) {
        const std::size_t n = elements.size();
        std::vector<Bitset> rel(n, Bitset(n));
        std::vector<std::size_t> below(n, 0);
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                if (std::invoke(leq, elements[x], elements[y])) {
                    rel[x].set(y);
                    ++below[y];
                }
            }
        }
        for (std::size_t x = 0; x < n; ++x) {
            if (!rel[x].test(x))
                throw not_a_partial_order(x, x, "relation is not reflexive at element " + std::to_string(x));
            for (std::size_t y = x + 1; y < n; ++y) {
                if (rel[x].test(y) && rel[y].test(x))
                    throw not_a_partial_order(x, y, "elements " + std::to_string(x) + " and " +
                                                        std::to_string(y) + " are mutually related");
            }
        }

        // For a partial order, sorting by down-set size gives a linear
        // extension and the greedy minimal-element pass yields the covers.
        std::vector<std::size_t> by_height(n);
        for (std::size_t i = 0; i < n; ++i) by_height[i] = i;
        std::stable_sort(by_height.begin(), by_height.end(),
                         [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
        std::vector<std::vector<std::size_t>> candidate = minimal_successors(rel, by_height);

        std::vector<std::size_t> order;
        try {
            order = topological_order(candidate);
        } catch (const not_a_partial_order& e) {
            auto [x, y] = e.witness();
            throw not_a_partial_order(x, y, "relation is not transitive around elements " +
                                                std::to_string(x) + " and " + std::to_string(y));
        }
        std::vector<Bitset> generated = closure_of(candidate, order);
        for (std::size_t x = 0; x < n; ++x) {
            if (generated[x] == rel[x]) continue;
            Bitset diff = generated[x] ^ rel[x];
            const std::size_t y = diff.find_first();
            throw not_a_partial_order(x, y, "relation is not transitive: element " + std::to_string(x) +
                                                " reaches " + std::to_string(y) +
                                                " through intermediate elements but is not related to it");
        }

        FinitePoset p;
        p.labels_ = std::move(elements);
        p.order_ = std::move(order);
        p.up_ = std::move(rel);
        p.finish();
        return p;
    }

    /// Induced subposet on `subset` (indices into this poset), keeping the
    /// given order of the subset as the new insertion order.
    FinitePoset induced(const std::vector<std::size_t>& subset) const {
        const std::size_t n = subset.size();
        FinitePoset p;
        p.labels_.reserve(n);
        for (std::size_t i : subset) p.labels_.push_back(labels_.at(i));
        p.up_.assign(n, Bitset(n));
        std::vector<std::vector<std::size_t>> succ(n);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                if (leq(subset[a], subset[b])) {
                    p.up_[a].set(b);
                    if (a != b) succ[a].push_back(b);
                }
            }
        }
        p.order_ = topological_order(succ);
        p.finish();
        return p;
    }

    std::size_t size() const noexcept { return labels_.size(); }
    bool empty() const noexcept { return labels_.empty(); }
    const std::vector<Label>& elements() const noexcept { return labels_; }
    const Label& label(std::size_t i) const { return labels_.at(i); }

    bool leq(std::size_t x, std::size_t y) const { return up_.at(x).test(y); }
    bool less(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }

    /// Elements covering x, ascending by index.
    const std::vector<std::size_t>& upper_covers(std::size_t x) const { return upper_.at(x); }
    /// Elements covered by x, ascending by index.
    const std::vector<std::size_t>& lower_covers(std::size_t x) const { return lower_.at(x); }

    /// All cover pairs (x, y), x covered by y, ordered by x then y.
    std::vector<std::pair<std::size_t, std::size_t>> covers() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t x = 0; x < size(); ++x)
            for (std::size_t y : upper_[x]) out.emplace_back(x, y);
        return out;
    }

    std::size_t cover_count() const {
        std::size_t c = 0;
        for (const auto& u : upper_) c += u.size();
        return c;
    }

    const std::vector<std::size_t>& minimal() const noexcept { return minimal_; }
    const std::vector<std::size_t>& maximal() const noexcept { return maximal_; }

    /// A fixed linear extension (x < y implies x appears first).
    const std::vector<std::size_t>& linear_extension() const noexcept { return order_; }

    const Bitset& up_set(std::size_t x) const { return up_.at(x); }
    const Bitset& down_set(std::size_t x) const { return down_.at(x); }

private:
    // Kahn's algorithm, smallest index first. On a cycle, walks predecessors
    // inside the leftover set to report two distinct elements on it.
    static std::vector<std::size_t> topological_order(const std::vector<std::vector<std::size_t>>& succ) {
        const std::size_t n = succ.size();
        std::vector<std::size_t> indegree(n, 0);
        for (const auto& s : succ)
            for (std::size_t y : s) ++indegree[y];
        std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
        for (std::size_t x = 0; x < n; ++x)
            if (indegree[x] == 0) ready.push(x);
        std::vector<std::size_t> order;
        order.reserve(n);
        while (!ready.empty()) {
            const std::size_t x = ready.top();
            ready.pop();
            order.push_back(x);
            for (std::size_t y : succ[x])
                if (--indegree[y] == 0) ready.push(y);
        }
        if (order.size() == n) return order;

        std::vector<std::vector<std::size_t>> pred(n);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y : succ[x])
                if (indegree[x] > 0 && indegree[y] > 0) pred[y].push_back(x);
        std::size_t start = 0;
        while (indegree[start] == 0) ++start;
        std::vector<int> seen(n, -1);
        std::size_t cur = start;
        int step = 0;
        while (seen[cur] < 0) {
            seen[cur] = step++;
            cur = pred[cur].front();
        }
        const std::size_t y = cur;
        const std::size_t x = pred[cur].front();
        throw not_a_partial_order(x, y, "cycle through elements " + std::to_string(x) + " and " +
                                            std::to_string(y) + " violates antisymmetry");
    }

    static std::vector<Bitset> closure_of(const std::vector<std::vector<std::size_t>>& succ,
                                          const std::vector<std::size_t>& order) {
        const std::size_t n = succ.size();
        std::vector<Bitset> up(n, Bitset(n));
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const std::size_t x = *it;
            up[x].set(x);
            for (std::size_t y : succ[x]) up[x] |= up[y];
        }
        return up;
    }

    // For each x, the minimal elements of the strict up-set, found by scanning
    // in `order` and discarding everything above an element already taken.
    static std::vector<std::vector<std::size_t>> minimal_successors(const std::vector<Bitset>& up,
                                                                    const std::vector<std::size_t>& order) {
        const std::size_t n = up.size();
        std::vector<std::vector<std::size_t>> result(n);
        Bitset removed(n);
        for (std::size_t x = 0; x < n; ++x) {
            if (up[x].count() <= 1) continue;
            removed.reset();
            for (std::size_t z : order) {
                if (z == x || !up[x].test(z) || removed.test(z)) continue;
                result[x].push_back(z);
                removed |= up[z];
            }
            std::sort(result[x].begin(), result[x].end());
        }
        return result;
    }

    void finish() {
        const std::size_t n = labels_.size();
        down_.assign(n, Bitset(n));
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = up_[x].find_first(); y != Bitset::npos; y = up_[x].find_next(y))
                down_[y].set(x);
        upper_ = minimal_successors(up_, order_);
        lower_.assign(n, {});
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y : upper_[x]) lower_[y].push_back(x);
        minimal_.clear();
        maximal_.clear();
        for (std::size_t x = 0; x < n; ++x) {
            if (lower_[x].empty()) minimal_.push_back(x);
            if (upper_[x].empty()) maximal_.push_back(x);
        }
    }

    std::vector<Label> labels_;
    std::vector<Bitset> up_;
    std::vector<Bitset> down_;
    std::vector<std::size_t> order_;
    std::vector<std::vector<std::size_t>> upper_;
    std::vector<std::vector<std::size_t>> lower_;
    std::vector<std::size_t> minimal_;
    std::vector<std::size_t> maximal_;
};

struct RankLabels {
    std::vector<std::int64_t> rank;
    std::int64_t max_rank = 0;

    std::int64_t operator[](std::size_t i) const { return rank.at(i); }
};

/// Rank with every minimal element at 0 and every cover a unit step.
template <class Label>
RankLabels rank_function(const FinitePoset<Label>& p) {
    if (p.empty()) throw invalid_bounds("rank of an empty poset");
    RankLabels r;
    r.rank.assign(p.size(), -1);
    for (std::size_t y : p.linear_extension()) {
        const auto& below = p.lower_covers(y);
        if (below.empty()) {
            r.rank[y] = 0;
            continue;
        }
        r.rank[y] = r.rank[below.front()] + 1;
        for (std::size_t x : below) {
            if (r.rank[x] + 1 != r.rank[y])
                throw not_graded(x, y, "cover " + std::to_string(x) + " -> " + std::to_string(y) +
                                           " is not a unit rank step");
        }
        r.max_rank = std::max(r.max_rank, r.rank[y]);
    }
    return r;
}

inline constexpr std::size_t chain_count_budget = 10'000;
inline constexpr std::size_t chain_enumerate_budget = 64;
inline constexpr std::size_t chain_list_budget = 1'000'000;

/// Number of saturated chains from a minimal to a maximal element.
template <class Label>
BigInt count_maximal_chains(const FinitePoset<Label>& p) {
    if (p.size() > chain_count_budget)
        throw budget_exceeded(std::to_string(p.size()) + " elements exceed the chain-count budget of " +
                              std::to_string(chain_count_budget));
    std::vector<BigInt> ways(p.size());
    const auto& order = p.linear_extension();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto& above = p.upper_covers(*it);
        if (above.empty()) {
            ways[*it] = 1;
            continue;
        }
        for (std::size_t y : above) ways[*it] += ways[y];
    }
    BigInt total;
    for (std::size_t x : p.minimal()) total += ways[x];
    return total;
}

/// Lists maximal chains depth first, in lexicographic order of element index.
template <class Label>
std::vector<Chain> enumerate_maximal_chains(const FinitePoset<Label>& p,
                                            std::size_t max_chains = chain_list_budget) {
    if (p.size() > chain_enumerate_budget)
        throw budget_exceeded(std::to_string(p.size()) + " elements exceed the enumeration budget of " +
                              std::to_string(chain_enumerate_budget));
    std::vector<Chain> chains;
    Chain path;
    std::function<void(std::size_t)> walk = [&](std::size_t x) {
        path.push_back(x);
        const auto& above = p.upper_covers(x);
        if (above.empty()) {
            if (chains.size() == max_chains)
                throw budget_exceeded("more than " + std::to_string(max_chains) + " maximal chains");
            chains.push_back(path);
        }
        for (std::size_t y : above) walk(y);
        path.pop_back();
    };
    for (std::size_t x : p.minimal()) walk(x);
    return chains;
}

enum class ChainMode { count, enumerate };

template <class Label>
std::variant<BigInt, std::vector<Chain>> maximal_chains(const FinitePoset<Label>& p, ChainMode mode) {
    if (mode == ChainMode::count) return count_maximal_chains(p);
    return enumerate_maximal_chains(p);
}

namespace detail {
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("Möbius value overflows int64");
    return out;
}
}  // namespace detail

/// mu(x, .) for one fixed x: mu(x,x) = 1, mu(x,y) = -sum_{x <= z < y} mu(x,z),
/// and 0 where x is not below y.
template <class Label>
std::vector<std::int64_t> mobius_row(const FinitePoset<Label>& p, std::size_t x) {
    std::vector<std::int64_t> mu(p.size(), 0);
    mu.at(x) = 1;
    const Bitset& above_x = p.up_set(x);
    for (std::size_t y : p.linear_extension()) {
        if (y == x || !above_x.test(y)) continue;
        Bitset interval = above_x & p.down_set(y);
        interval.reset(y);
        std::int64_t sum = 0;
        for (std::size_t z = interval.find_first(); z != Bitset::npos; z = interval.find_next(z))
            sum = detail::checked_add(sum, mu[z]);
        mu[y] = -sum;
    }
    return mu;
}

class MobiusMatrix {
public:
    MobiusMatrix() = default;
    explicit MobiusMatrix(std::vector<std::vector<std::int64_t>> rows) : rows_(std::move(rows)) {}

    std::size_t size() const noexcept { return rows_.size(); }
    std::int64_t operator()(std::size_t x, std::size_t y) const { return rows_.at(x).at(y); }
    const std::vector<std::int64_t>& row(std::size_t x) const { return rows_.at(x); }

private:
    std::vector<std::vector<std::int64_t>> rows_;
};

template <class Label>
MobiusMatrix mobius(const FinitePoset<Label>& p) {
    std::vector<std::vector<std::int64_t>> rows;
    rows.reserve(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) rows.push_back(mobius_row(p, x));
    return MobiusMatrix(std::move(rows));
}

enum class WhitneyKind { first, second };

struct WhitneyVector {
    WhitneyKind kind = WhitneyKind::second;
    std::vector<std::int64_t> values;  // indexed by rank
};

/// The unique minimal element, or no_unique_minimum.
template <class Label>
std::size_t bottom_element(const FinitePoset<Label>& p) {
    if (p.minimal().size() != 1)
        throw no_unique_minimum("poset has " + std::to_string(p.minimal().size()) + " minimal elements");
    return p.minimal().front();
}

template <class Label>
WhitneyVector whitney(const FinitePoset<Label>& p, WhitneyKind kind) {
    const RankLabels r = rank_function(p);
    WhitneyVector w{kind, std::vector<std::int64_t>(static_cast<std::size_t>(r.max_rank) + 1, 0)};
    if (kind == WhitneyKind::second) {
        for (std::size_t x = 0; x < p.size(); ++x) ++w.values[static_cast<std::size_t>(r[x])];
        return w;
    }
    const std::vector<std::int64_t> mu = mobius_row(p, bottom_element(p));
    for (std::size_t x = 0; x < p.size(); ++x)
        w.values[static_cast<std::size_t>(r[x])] = detail::checked_add(w.values[static_cast<std::size_t>(r[x])], mu[x]);
    return w;
}

}  // namespace whitney
