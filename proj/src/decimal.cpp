#include "mqmine/decimal.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

namespace mqmine {

namespace {
bool is_digit(char c) { return c >= '0' && c <= '9'; }
}  // namespace

std::optional<Decimal> Decimal::parse(std::string_view text) {
    Decimal d;
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        d.negative_ = text[i] == '-';
        ++i;
    }
    std::string digits;
    int scale = 0;
    bool any = false, point = false;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (is_digit(c)) {
            digits.push_back(c);
            any = true;
            if (point) ++scale;
        } else if (c == '.' && !point) {
            point = true;
        } else {
            return std::nullopt;
        }
    }
    if (!any) return std::nullopt;
    d.digits_ = std::move(digits);
    d.scale_ = scale;
    d.canonicalize();
    return d;
}

Decimal Decimal::from_int(long long v) {
    Decimal d;
    d.negative_ = v < 0;
    unsigned long long mag = v < 0 ? 0ULL - static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
    d.digits_ = std::to_string(mag);
    d.canonicalize();
    return d;
}

void Decimal::canonicalize() {
    while (scale_ > 0 && digits_.size() > 1 && digits_.back() == '0') {
        digits_.pop_back();
        --scale_;
    }
    if (scale_ > 0 && digits_ == "0") scale_ = 0;
    if (scale_ < 0) {
        if (digits_ != "0") digits_.append(static_cast<std::size_t>(-scale_), '0');
        scale_ = 0;
    }
    const auto nz = digits_.find_first_not_of('0');
    digits_ = nz == std::string::npos ? "0" : digits_.substr(nz);
    if (digits_ == "0") {
        negative_ = false;
        scale_ = 0;
    }
}

Decimal Decimal::negated() const {
    Decimal d = *this;
    if (!d.is_zero()) d.negative_ = !d.negative_;
    return d;
}

Decimal Decimal::abs() const {
    Decimal d = *this;
    d.negative_ = false;
    return d;
}

Decimal Decimal::shifted(int k) const {
    Decimal d = *this;
    d.scale_ -= k;
    d.canonicalize();
    return d;
}

std::string Decimal::to_string() const {
    std::string out;
    if (negative_) out.push_back('-');
    if (scale_ == 0) {
        out += digits_;
    } else if (static_cast<std::size_t>(scale_) >= digits_.size()) {
        out += "0.";
        out.append(static_cast<std::size_t>(scale_) - digits_.size(), '0');
        out += digits_;
    } else {
        const auto split = digits_.size() - static_cast<std::size_t>(scale_);
        out += digits_.substr(0, split);
        out.push_back('.');
        out += digits_.substr(split);
    }
    return out;
}

double Decimal::to_double() const {
    const auto s = to_string();
    double v = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), v);
    return v;
}

std::strong_ordering operator<=>(const Decimal& a, const Decimal& b) {
    if (a.negative_ != b.negative_) return a.negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    // Compare magnitudes: integer-part length first, then digit by digit.
    auto int_len = [](const Decimal& d) {
        return static_cast<long long>(d.digits_.size()) - d.scale_;
    };
    std::strong_ordering mag = std::strong_ordering::equal;
    const long long la = a.is_zero() ? 0 : int_len(a), lb = b.is_zero() ? 0 : int_len(b);
    if (a.is_zero() || b.is_zero()) {
        mag = a.is_zero() == b.is_zero() ? std::strong_ordering::equal
              : a.is_zero()              ? std::strong_ordering::less
                                         : std::strong_ordering::greater;
    } else if (la != lb) {
        mag = la <=> lb;
    } else {
        const auto n = std::max(a.digits_.size(), b.digits_.size());
        for (std::size_t i = 0; i < n && mag == 0; ++i) {
            const char ca = i < a.digits_.size() ? a.digits_[i] : '0';
            const char cb = i < b.digits_.size() ? b.digits_[i] : '0';
            mag = ca <=> cb;
        }
    }
    if (a.negative_) {
        if (mag == std::strong_ordering::less) return std::strong_ordering::greater;
        if (mag == std::strong_ordering::greater) return std::strong_ordering::less;
    }
    return mag;
}

}  // namespace mqmine
