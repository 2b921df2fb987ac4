#pragma once

// F-factorials, F-nomial coefficients, and ballot / Catalan path counts.

#include <bit>
#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

#include "whitney/bigint.hpp"
#include "whitney/errors.hpp"
#include "whitney/fseq.hpp"

namespace whitney {

/// Memoized F_n! = F_1 F_2 ... F_n over one sequence. The memo only grows;
/// extension is serialized so concurrent readers always see the same values.
class FNomialTable {
public:
    explicit FNomialTable(FSequence seq) : seq_(std::move(seq)), factorials_{BigInt(1)} {}

    FNomialTable(const FNomialTable&) = delete;
    FNomialTable& operator=(const FNomialTable&) = delete;

    const FSequence& sequence() const noexcept { return seq_; }

    BigInt f_factorial(std::int64_t n) const {
        if (n < 0)
            throw invalid_bounds("F-factorial of negative index " + std::to_string(n));
        std::lock_guard lock(mutex_);
        extend_to(static_cast<std::size_t>(n));
        return factorials_[static_cast<std::size_t>(n)];
    }

    /// F_n! / (F_k! F_{n-k}!), or 0 outside 0 <= k <= n. Raises non_integral
    /// when the quotient leaves a remainder.
    BigInt fnomial(std::int64_t n, std::int64_t k) const {
        if (n < 0)
            throw invalid_bounds("F-nomial with negative n = " + std::to_string(n));
        if (k < 0 || k > n) return BigInt(0);
        BigInt numerator;
        BigInt denominator;
        {
            std::lock_guard lock(mutex_);
            extend_to(static_cast<std::size_t>(n));
            numerator = factorials_[static_cast<std::size_t>(n)];
            denominator = factorials_[static_cast<std::size_t>(k)] *
                          factorials_[static_cast<std::size_t>(n - k)];
        }
        BigInt quotient;
        BigInt remainder;
        boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
        if (remainder != 0) throw non_integral(numerator.str(), denominator.str());
        return quotient;
    }

private:
    void extend_to(std::size_t n) const {
        while (factorials_.size() <= n) {
            const auto s = static_cast<std::int64_t>(factorials_.size());
            factorials_.push_back(factorials_.back() * seq_.value(s));
        }
    }

    FSequence seq_;
    mutable std::mutex mutex_;
    mutable std::vector<BigInt> factorials_;
};

/// Ordinary binomial coefficient, 0 outside 0 <= k <= n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt result(1);
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

inline BigInt catalan(std::int64_t n) {
    if (n < 0) throw invalid_bounds("catalan of negative index " + std::to_string(n));
    return binomial(2 * n, n) / (n + 1);
}

struct BallotCount {
    std::int64_t k = 0;  // ones
    std::int64_t n = 0;  // zeros
    BigInt count;
};

/// Binary strings with n zeros and k ones in which every prefix has at
/// least as many zeros as ones: (n-k+1)/(n+1) * C(n+k, k) for k <= n.
inline BallotCount ballot(std::int64_t k, std::int64_t n) {
    if (k < 0 || n < 0)
        throw invalid_bounds("ballot(" + std::to_string(k) + ", " + std::to_string(n) + ")");
    if (k > n) return BallotCount{k, n, BigInt(0)};
    return BallotCount{k, n, binomial(n + k, k) * (n - k + 1) / (n + 1)};
}

inline constexpr std::int64_t dominated_strings_budget = 28;

/// Exhaustive count of 0-dominated strings with n zeros and k ones. Walks
/// every (n+k)-bit word with exactly k set bits (Gosper's hack).
inline BigInt dominated_strings_brute(std::int64_t k, std::int64_t n) {
    if (k < 0 || n < 0)
        throw invalid_bounds("dominated strings with negative counts");
    const std::int64_t length = n + k;
    if (length > dominated_strings_budget)
        throw budget_exceeded("string length " + std::to_string(length) + " exceeds " +
                              std::to_string(dominated_strings_budget));

    auto dominated = [length](std::uint64_t word) {
        std::int64_t balance = 0;
        for (std::int64_t i = 0; i < length; ++i) {
            balance += (word >> i) & 1U ? -1 : 1;
            if (balance < 0) return false;
        }
        return true;
    };

    if (k == 0) return BigInt(1);
    const std::uint64_t limit = std::uint64_t{1} << length;
    std::uint64_t word = (std::uint64_t{1} << k) - 1;
    std::uint64_t count = 0;
    while (word < limit) {
        if (dominated(word)) ++count;
        const std::uint64_t t = word | (word - 1);
        word = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(word) + 1));
    }
    return BigInt(count);
}

}  // namespace whitney
