#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace whitney {

/// Base of every domain error raised by the library. `kind()` names the
/// error case so front ends can report it without RTTI string matching.
class error : public std::runtime_error {
public:
    error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class index_out_of_domain : public error {
public:
    explicit index_out_of_domain(const std::string& what)
        : error("IndexOutOfDomain", what) {}
};

class invalid_bounds : public error {
public:
    explicit invalid_bounds(const std::string& what)
        : error("InvalidBounds", what) {}
};

class budget_exceeded : public error {
public:
    explicit budget_exceeded(const std::string& what)
        : error("BudgetExceeded", what) {}
};

class undefined_rank : public error {
public:
    explicit undefined_rank(const std::string& what)
        : error("UndefinedRank", what) {}
};

class no_unique_minimum : public error {
public:
    explicit no_unique_minimum(const std::string& what)
        : error("NoUniqueMinimum", what) {}
};

class sequence_format_error : public error {
public:
    explicit sequence_format_error(const std::string& what)
        : error("SequenceFormat", what) {}
};

/// Quotient F_n!/(F_k! F_{n-k}!) left a remainder. Numerator and
/// denominator are kept as decimal strings so this header stays free of
/// the big-integer type.
class non_integral : public error {
public:
    non_integral(std::string numerator, std::string denominator)
        : error("NonIntegral", numerator + " / " + denominator + " is not an integer"),
          numerator_(std::move(numerator)), denominator_(std::move(denominator)) {}

    const std::string& numerator() const noexcept { return numerator_; }
    const std::string& denominator() const noexcept { return denominator_; }

private:
    std::string numerator_;
    std::string denominator_;
};

/// Witness is a pair of element indices (x, y).
class not_a_partial_order : public error {
public:
    not_a_partial_order(std::size_t x, std::size_t y, const std::string& what)
        : error("NotAPartialOrder", what), witness_(x, y) {}

    std::pair<std::size_t, std::size_t> witness() const noexcept { return witness_; }

private:
    std::pair<std::size_t, std::size_t> witness_;
};

/// Witness is a cover (lower, upper) whose rank step is not exactly one.
class not_graded : public error {
public:
    not_graded(std::size_t lower, std::size_t upper, const std::string& what)
        : error("NotGraded", what), witness_(lower, upper) {}

    std::pair<std::size_t, std::size_t> witness() const noexcept { return witness_; }

private:
    std::pair<std::size_t, std::size_t> witness_;
};

}  // namespace whitney
