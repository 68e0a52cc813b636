#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>

namespace mqmine {

/// Half-open byte range [begin, end).
struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;

    constexpr std::size_t size() const noexcept { return end - begin; }
    constexpr bool empty() const noexcept { return end <= begin; }
    constexpr bool overlaps(const Span& o) const noexcept { return begin < o.end && o.begin < end; }
    constexpr bool contains(const Span& o) const noexcept { return begin <= o.begin && o.end <= end; }
    constexpr Span shifted(std::ptrdiff_t d) const noexcept {
        return {static_cast<std::size_t>(static_cast<std::ptrdiff_t>(begin) + d),
                static_cast<std::size_t>(static_cast<std::ptrdiff_t>(end) + d)};
    }

    friend constexpr bool operator==(const Span&, const Span&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Span& s) {
    return os << '[' << s.begin << ',' << s.end << ')';
}

}  // namespace mqmine
