#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace mqmine {

/// Exact base-10 number: sign, digit string and scale (count of fractional
/// digits). Always kept in canonical form: no leading zeros in the integer
/// part, no trailing fractional zeros, and zero is never negative.
class Decimal {
public:
    Decimal() = default;

    /// Accepts [+-]?digits[.digits] or [+-]?.digits; nothing else.
    static std::optional<Decimal> parse(std::string_view text);
    static Decimal from_int(long long v);

    bool negative() const noexcept { return negative_; }
    bool is_zero() const noexcept { return digits_ == "0"; }
    int scale() const noexcept { return scale_; }

    Decimal negated() const;
    Decimal abs() const;
    /// Multiplies by 10^k by moving the decimal point.
    Decimal shifted(int k) const;

    /// Plain positional rendering without exponent, e.g. "0.000013999".
    std::string to_string() const;
    /// Nearest double.
    double to_double() const;

    friend bool operator==(const Decimal&, const Decimal&) = default;
    friend std::strong_ordering operator<=>(const Decimal& a, const Decimal& b);

private:
    void canonicalize();

    bool negative_ = false;
    std::string digits_ = "0";  // unscaled magnitude
    int scale_ = 0;
};

}  // namespace mqmine
