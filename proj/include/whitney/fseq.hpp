#pragma once

// Positive-integer sequences F_1, F_2, ... that set cobweb level widths and
// define F-factorials. Built-ins are pure rules; user data is a finite list.

#include <cstdint>
#include <fstream>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "whitney/bigint.hpp"
#include "whitney/errors.hpp"

namespace whitney {

class FSequence {
public:
    enum class Rule { naturals, odd, even1, div31, fibonacci, custom };

    static FSequence naturals() { return FSequence(Rule::naturals, "naturals"); }
    static FSequence odd() { return FSequence(Rule::odd, "odd"); }
    /// Even naturals with 1 prepended: 1, 2, 4, 6, 8, ...
    static FSequence even1() { return FSequence(Rule::even1, "even1"); }
    /// Multiples of 3 with 1 prepended: 1, 3, 6, 9, ...
    static FSequence div31() { return FSequence(Rule::div31, "div31"); }
    /// F_1 = F_2 = 1.
    static FSequence fibonacci() { return FSequence(Rule::fibonacci, "fibonacci"); }

    /// Finite user sequence; values[0] is F_1. Queries past the end fail.
    static FSequence from_values(std::string id, std::vector<BigInt> values) {
        if (values.empty())
            throw sequence_format_error("custom sequence '" + id + "' has no terms");
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (values[i] < 1)
                throw sequence_format_error("term " + std::to_string(i + 1) + " of '" + id +
                                            "' is not positive");
        }
        FSequence seq(Rule::custom, std::move(id));
        seq.values_ = std::make_shared<const std::vector<BigInt>>(std::move(values));
        return seq;
    }

    /// One positive decimal integer per line; line s holds F_s. Trailing
    /// blank lines are ignored, interior ones are rejected.
    static FSequence parse_text(std::string id, std::istream& in) {
        std::vector<BigInt> values;
        std::string line;
        std::size_t line_no = 0;
        std::size_t blank_run = 0;
        while (std::getline(in, line)) {
            ++line_no;
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
                line.pop_back();
            std::size_t start = line.find_first_not_of(" \t");
            if (start == std::string::npos) {
                ++blank_run;
                continue;
            }
            if (blank_run > 0)
                throw sequence_format_error("blank line before line " + std::to_string(line_no));
            std::string_view digits(line);
            digits.remove_prefix(start);
            for (char c : digits) {
                if (c < '0' || c > '9')
                    throw sequence_format_error("line " + std::to_string(line_no) +
                                                " is not a positive decimal integer");
            }
            values.emplace_back(std::string(digits));
        }
        return from_values(std::move(id), std::move(values));
    }

    static FSequence load(const std::string& path) {
        std::ifstream in(path);
        if (!in)
            throw sequence_format_error("cannot open '" + path + "'");
        return parse_text("file:" + path, in);
    }

    /// Accepts naturals|odd|even1|div31|fibonacci|file:<path>.
    static FSequence by_name(std::string_view name) {
        if (name == "naturals") return naturals();
        if (name == "odd") return odd();
        if (name == "even1") return even1();
        if (name == "div31") return div31();
        if (name == "fibonacci") return fibonacci();
        if (name.substr(0, 5) == "file:") return load(std::string(name.substr(5)));
        throw sequence_format_error("unknown sequence '" + std::string(name) + "'");
    }

    const std::string& id() const noexcept { return id_; }
    Rule rule() const noexcept { return rule_; }

    /// Largest valid index for custom sequences; built-ins are unbounded.
    std::optional<std::int64_t> bound() const {
        if (rule_ != Rule::custom) return std::nullopt;
        return static_cast<std::int64_t>(values_->size());
    }

    BigInt value(std::int64_t s) const {
        if (s < 1)
            throw index_out_of_domain("index " + std::to_string(s) + " of '" + id_ + "' is below 1");
        switch (rule_) {
        case Rule::naturals:
            return BigInt(s);
        case Rule::odd:
            return BigInt(2) * s - 1;
        case Rule::even1:
            return s == 1 ? BigInt(1) : BigInt(2) * (s - 1);
        case Rule::div31:
            return s == 1 ? BigInt(1) : BigInt(3) * (s - 1);
        case Rule::fibonacci:
            return fibonacci_pair(static_cast<std::uint64_t>(s)).first;
        case Rule::custom:
            if (static_cast<std::size_t>(s) > values_->size())
                throw index_out_of_domain("index " + std::to_string(s) + " exceeds the " +
                                          std::to_string(values_->size()) + " terms of '" + id_ + "'");
            return (*values_)[static_cast<std::size_t>(s - 1)];
        }
        return BigInt(0);  // unreachable
    }

    BigInt operator()(std::int64_t s) const { return value(s); }

private:
    FSequence(Rule rule, std::string id) : rule_(rule), id_(std::move(id)) {}

    // Fast doubling: returns (Fib(s), Fib(s+1)) with Fib(0) = 0.
    static std::pair<BigInt, BigInt> fibonacci_pair(std::uint64_t s) {
        if (s == 0) return {BigInt(0), BigInt(1)};
        auto [a, b] = fibonacci_pair(s / 2);
        BigInt c = a * (2 * b - a);
        BigInt d = a * a + b * b;
        if (s % 2 == 0) return {c, d};
        return {d, c + d};
    }

    Rule rule_;
    std::string id_;
    std::shared_ptr<const std::vector<BigInt>> values_;
};

struct GcdViolation {
    std::int64_t n = 0;
    std::int64_t m = 0;
    BigInt gcd_of_values;  // GCD[F_n, F_m]
    BigInt value_at_gcd;   // F_{GCD[n, m]}
};

struct GcdMorphicReport {
    bool holds = true;
    std::optional<GcdViolation> witness;
};

/// Checks GCD[F_n, F_m] = F_{GCD[n,m]} over 1 <= n, m <= range_max and
/// reports the lexicographically smallest violating (n, m).
inline GcdMorphicReport is_gcd_morphic(const FSequence& seq, std::int64_t range_max) {
    if (range_max < 2)
        throw invalid_bounds("gcd-morphic check needs range_max >= 2, got " + std::to_string(range_max));
    std::vector<BigInt> f(static_cast<std::size_t>(range_max) + 1);
    for (std::int64_t s = 1; s <= range_max; ++s) f[static_cast<std::size_t>(s)] = seq.value(s);

    for (std::int64_t n = 1; n <= range_max; ++n) {
        for (std::int64_t m = 1; m <= range_max; ++m) {
            const std::int64_t g = std::gcd(n, m);
            BigInt lhs = gcd(f[static_cast<std::size_t>(n)], f[static_cast<std::size_t>(m)]);
            const BigInt& rhs = f[static_cast<std::size_t>(g)];
            if (lhs != rhs)
                return GcdMorphicReport{false, GcdViolation{n, m, std::move(lhs), rhs}};
        }
    }
    return GcdMorphicReport{};
}

}  // namespace whitney
