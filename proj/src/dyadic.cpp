#include "domgame/dyadic.hpp"

#include <charconv>

#include "domgame/errors.hpp"

namespace domgame::cgt {

namespace {

constexpr int kMaxExponent = 40;

} // namespace

Dyadic::Dyadic(std::int64_t num, int exp) : num_(num), exp_(exp)
{
    if (exp_ < 0 || exp_ > kMaxExponent)
        throw InputError("dyadic exponent out of range");
    while (exp_ > 0 && num_ % 2 == 0) {
        num_ /= 2;
        --exp_;
    }
}

std::int64_t Dyadic::floor() const
{
    // Arithmetic shift rounds toward negative infinity.
    return num_ >> exp_;
}

std::int64_t Dyadic::ceil() const { return -((-num_) >> exp_); }

Dyadic operator+(const Dyadic& a, const Dyadic& b)
{
    const int e = std::max(a.exp_, b.exp_);
    return Dyadic((a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_)), e);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b)
{
    const int e = std::max(a.exp_, b.exp_);
    return (a.num_ << (e - a.exp_)) <=> (b.num_ << (e - b.exp_));
}

std::string Dyadic::to_string() const
{
    if (exp_ == 0)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(denominator());
}

std::optional<Dyadic> Dyadic::parse(std::string_view s)
{
    auto parse_int = [](std::string_view t) -> std::optional<std::int64_t> {
        std::int64_t v = 0;
        auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (t.empty() || ec != std::errc{} || end != t.data() + t.size())
            return std::nullopt;
        return v;
    };
    const auto slash = s.find('/');
    auto num = parse_int(s.substr(0, slash));
    if (!num)
        return std::nullopt;
    if (slash == std::string_view::npos)
        return Dyadic(*num);
    auto den = parse_int(s.substr(slash + 1));
    if (!den || *den <= 0 || (*den & (*den - 1)) != 0)
        return std::nullopt;
    int exp = 0;
    while ((std::int64_t{1} << exp) != *den)
        ++exp;
    if (exp > kMaxExponent)
        return std::nullopt;
    return Dyadic(*num, exp);
}

Dyadic simplest_between(std::optional<Dyadic> lo, std::optional<Dyadic> hi)
{
    if (lo && hi && !(*lo < *hi))
        throw InternalError("simplest_between: empty interval");
    const Dyadic zero;
    if ((!lo || *lo < zero) && (!hi || zero < *hi))
        return zero;
    // The interval lies on one side of zero; the integer nearest to zero
    // inside it is the simplest when one exists.
    if (!hi || (lo && zero <= *lo)) {
        const std::int64_t candidate = lo->floor() + 1;
        if (!hi || Dyadic(candidate) < *hi)
            return Dyadic(candidate);
    } else {
        const std::int64_t candidate = hi->ceil() - 1;
        if (!lo || *lo < Dyadic(candidate))
            return Dyadic(candidate);
    }
    // Both bounds present and no integer strictly between: take the
    // smallest denominator that fits. At that level the fit is unique.
    for (int e = 1; e <= kMaxExponent; ++e) {
        // floor(lo * 2^e) + 1 is the least multiple of 2^-e above lo.
        const int shift = lo->exponent() - e;
        const std::int64_t scaled_floor = shift <= 0 ? lo->numerator() << -shift : lo->numerator() >> shift;
        const Dyadic candidate(scaled_floor + 1, e);
        if (candidate < *hi)
            return candidate;
    }
    throw InternalError("simplest_between: precision exhausted");
}

} // namespace domgame::cgt
