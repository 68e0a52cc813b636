#pragma once

#include <optional>
#include <string_view>

#include "mqmine/decimal.hpp"
#include "mqmine/span.hpp"

namespace mqmine {

struct QuantityLiteral {
    std::optional<char> sign;  // '+' or '-' when written
    Decimal mantissa;          // magnitude, non-negative
    std::optional<Decimal> error;
    std::optional<int> exponent;

    friend bool operator==(const QuantityLiteral&, const QuantityLiteral&) = default;
};

struct StandardizedValue {
    Decimal value;
    std::optional<Decimal> error_abs;

    friend bool operator==(const StandardizedValue&, const StandardizedValue&) = default;
};

template <typename T>
struct Parsed {
    T value;
    Span span;
};

/// Signed decimal literal starting at `pos`: optional sign, digit groups
/// separated by ',' (2-3 digits) or ' ' (exactly 3 digits), optional fraction
/// with single interior spaces, or a leading-point form such as "-.98".
std::optional<Parsed<Decimal>> parse_number(std::string_view text, std::size_t pos);

/// "± e" error term (up to two spaces on either side of the '±').
std::optional<Parsed<Decimal>> parse_error(std::string_view text, std::size_t pos);

/// Scientific-notation exponent: "e-5", "E+3", "× 10^-5", "×105", "x 10 3".
std::optional<Parsed<int>> parse_sci(std::string_view text, std::size_t pos);

/// Collapses sign, mantissa, error and exponent into exact decimals.
/// Throws OverflowError for exponents beyond ±308.
StandardizedValue standardize(const QuantityLiteral& q);

}  // namespace mqmine
