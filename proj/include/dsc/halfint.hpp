#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace dsc {

// Exact element of (1/2)Z, stored as twice its value.
struct HalfInt {
    std::int64_t doubled = 0;

    static constexpr HalfInt whole(std::int64_t v) { return HalfInt{2 * v}; }
    static constexpr HalfInt from_doubled(std::int64_t d) { return HalfInt{d}; }
    // (a - 1) / 2, the top exponent of St(rho, a).
    static constexpr HalfInt top_of(std::int64_t a) { return HalfInt{a - 1}; }

    constexpr bool is_integer() const { return doubled % 2 == 0; }
    constexpr bool is_positive() const { return doubled > 0; }

    constexpr HalfInt operator+(HalfInt o) const { return HalfInt{doubled + o.doubled}; }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt{doubled - o.doubled}; }
    constexpr HalfInt operator-() const { return HalfInt{-doubled}; }
    constexpr HalfInt operator*(std::int64_t k) const { return HalfInt{doubled * k}; }
    constexpr HalfInt &operator+=(HalfInt o) { doubled += o.doubled; return *this; }
    constexpr HalfInt &operator-=(HalfInt o) { doubled -= o.doubled; return *this; }

    constexpr auto operator<=>(const HalfInt &) const = default;

    std::string str() const;
};

constexpr HalfInt abs(HalfInt h) { return h.doubled < 0 ? -h : h; }

// Accepts "3", "-2", "3/2", "-1/2", "1.5".
HalfInt parse_halfint(std::string_view text);

} // namespace dsc
