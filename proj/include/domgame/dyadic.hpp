#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace domgame::cgt {

/// Exact dyadic rational num / 2^exp, kept reduced (num odd or exp == 0).
class Dyadic {
public:
    constexpr Dyadic() = default;
    Dyadic(std::int64_t num, int exp = 0);

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return std::int64_t{1} << exp_; }
    int exponent() const { return exp_; }
    bool is_integer() const { return exp_ == 0; }

    std::int64_t floor() const;
    std::int64_t ceil() const;

    Dyadic operator-() const { return Dyadic(-num_, exp_); }
    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

    friend bool operator==(const Dyadic&, const Dyadic&) = default;
    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

    /// "3", "-1/2", "3/4".
    std::string to_string() const;

    /// Inverse of to_string; the denominator must be a power of two.
    static std::optional<Dyadic> parse(std::string_view s);

private:
    std::int64_t num_ = 0;
    int exp_ = 0;
};

/// The simplest dyadic strictly between lo and hi; an absent bound is
/// unbounded on that side. Requires lo < hi when both are present.
Dyadic simplest_between(std::optional<Dyadic> lo, std::optional<Dyadic> hi);

} // namespace domgame::cgt
