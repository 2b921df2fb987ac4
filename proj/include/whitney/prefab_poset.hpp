#pragma once

// Whitney numbers of P(n,F) as F-nomials, W_k = (n-k over k)_F, and the
// Bell-like diagonal sums B_n(F) = sum_k W_k. The k = n/2 term is included.

#include <cstdint>
#include <vector>

#include "whitney/bigint.hpp"
#include "whitney/fnomial.hpp"

namespace whitney {

inline BigInt whitney_prefab(const FNomialTable& table, std::int64_t n, std::int64_t k) {
    if (n < 0) throw invalid_bounds("prefab Whitney number with n = " + std::to_string(n));
    if (k < 0 || 2 * k > n) return BigInt(0);
    return table.fnomial(n - k, k);
}

struct PrefabWhitneyRow {
    std::int64_t n = 0;
    std::vector<BigInt> values;  // k = 0 .. n/2
};

inline PrefabWhitneyRow whitney_prefab_row(const FNomialTable& table, std::int64_t n) {
    PrefabWhitneyRow row{n, {}};
    for (std::int64_t k = 0; 2 * k <= n; ++k) row.values.push_back(whitney_prefab(table, n, k));
    return row;
}

inline BigInt bell_f(const FNomialTable& table, std::int64_t n) {
    BigInt total;
    for (const BigInt& w : whitney_prefab_row(table, n).values) total += w;
    return total;
}

// One-shot forms; prefer passing a shared table for batches.
inline BigInt whitney_prefab(const FSequence& seq, std::int64_t n, std::int64_t k) {
    return whitney_prefab(FNomialTable(seq), n, k);
}

inline BigInt bell_f(const FSequence& seq, std::int64_t n) { return bell_f(FNomialTable(seq), n); }

struct BellSequence {
    std::vector<BigInt> values;  // index n
};

inline BellSequence bell_f_table(const FNomialTable& table, std::int64_t n_max) {
    if (n_max < 0) throw invalid_bounds("bell table with n_max = " + std::to_string(n_max));
    BellSequence out;
    out.values.reserve(static_cast<std::size_t>(n_max) + 1);
    for (std::int64_t n = 0; n <= n_max; ++n) out.values.push_back(bell_f(table, n));
    return out;
}

}  // namespace whitney
