#pragma once

// Test-only reference computations. None of these call into the library's
// counting routines; each takes a different route to the same quantity.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Pascal's triangle rows 0..n_max by repeated addition.
inline std::vector<std::vector<Int>> pascal(int n_max) {
    std::vector<std::vector<Int>> rows(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        rows[n].assign(n + 1, Int(1));
        for (int k = 1; k < n; ++k) rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
    }
    return rows;
}

/// Fib(1) = Fib(2) = 1 by plain iteration.
inline Int fibonacci(int s) {
    Int a = 0, b = 1;
    for (int i = 0; i < s; ++i) {
        Int t = a + b;
        a = b;
        b = t;
    }
    return a;
}

/// Lattice paths from (0,0) adding a zero or a one, never letting ones
/// outnumber zeros; counts strings with `zeros` zeros and `ones` ones.
inline Int dominated_paths(int ones, int zeros) {
    std::vector<std::vector<Int>> ways(zeros + 1, std::vector<Int>(ones + 1, Int(0)));
    ways[0][0] = 1;
    for (int z = 0; z <= zeros; ++z)
        for (int o = 0; o <= ones; ++o) {
            if (z == 0 && o == 0) continue;
            if (o > z) continue;
            Int w = 0;
            if (z > 0) w += ways[z - 1][o];
            if (o > 0) w += ways[z][o - 1];
            ways[z][o] = w;
        }
    return ways[zeros][ones];
}

/// Monotone unit-step walks in the layer grid from its bottom to (k, n),
/// recursing on the last step. `strict` selects l < m, otherwise l <= m.
inline Int grid_walks(int k, int n, bool strict) {
    const int offset = strict ? 1 : 0;
    std::function<Int(int, int)> walks = [&](int l, int m) -> Int {
        if (l < 0 || m < l + offset) return 0;
        if (l == 0 && m == offset) return 1;
        return walks(l - 1, m) + walks(l, m - 1);
    };
    return walks(k, n);
}

/// Element count of the strict grid by scanning the full rectangle.
inline std::int64_t strict_grid_size(int k, int n) {
    std::int64_t count = 0;
    for (int l = 0; l <= n; ++l)
        for (int m = 0; m <= n; ++m)
            if (l <= k && l < m) ++count;
    return count;
}

/// F_n!/(F_k! F_{n-k}!) as a rational from the raw terms F[1..n].
inline Rational fnomial_rational(const std::vector<Int>& f, int n, int k) {
    Rational r = 1;
    for (int i = 1; i <= n; ++i) r *= f[i];
    for (int i = 1; i <= k; ++i) r /= f[i];
    for (int i = 1; i <= n - k; ++i) r /= f[i];
    return r;
}

/// Möbius matrix as the inverse of the zeta matrix, solved from the right:
/// mu(x,y) = -sum_{x < z <= y} zeta(x,z) mu(z,y). `leq[x][y]` must be a
/// partial order whose indices already form a linear extension.
inline std::vector<std::vector<std::int64_t>> mobius_by_inversion(const std::vector<std::vector<bool>>& leq) {
    const int n = static_cast<int>(leq.size());
    std::vector<std::vector<std::int64_t>> mu(n, std::vector<std::int64_t>(n, 0));
    for (int y = 0; y < n; ++y) {
        mu[y][y] = 1;
        for (int x = y - 1; x >= 0; --x) {
            if (!leq[x][y]) continue;
            std::int64_t s = 0;
            for (int z = x + 1; z <= y; ++z)
                if (leq[x][z] && leq[z][y]) s += mu[z][y];
            mu[x][y] = -s;
        }
    }
    return mu;
}

/// Deterministic case generator for property tests.
class Cases {
public:
    explicit Cases(std::uint64_t seed) : rng_(seed) {}
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }

private:
    std::mt19937_64 rng_;
};

}  // namespace oracle
