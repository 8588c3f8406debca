#pragma once

#include <string>

#include "nsfusion/rational.hpp"

namespace nsf {

/// Exact half-integer, stored as twice its value.
struct HalfInt {
    long tw = 0;  // the represented value is tw/2

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(long twice) : tw(twice) {}

    static constexpr HalfInt whole(long n) { return HalfInt(2 * n); }
    static constexpr HalfInt half(long n) { return HalfInt(n); }

    bool is_integer() const { return tw % 2 == 0; }
    long as_integer() const {
        if (!is_integer()) throw CalcError("half-integer is not integral: " + to_string());
        return tw / 2;
    }
    /// floor(tw/2) with correct behaviour for negatives.
    long floor() const { return tw >= 0 ? tw / 2 : (tw - 1) / 2; }

    Rational to_rational() const { return Rational(tw, 2); }

    HalfInt operator+(HalfInt o) const { return HalfInt(tw + o.tw); }
    HalfInt operator-(HalfInt o) const { return HalfInt(tw - o.tw); }
    HalfInt operator-() const { return HalfInt(-tw); }
    HalfInt& operator+=(HalfInt o) {
        tw += o.tw;
        return *this;
    }
    HalfInt& operator-=(HalfInt o) {
        tw -= o.tw;
        return *this;
    }

    auto operator<=>(const HalfInt&) const = default;

    std::string to_string() const {
        if (is_integer()) return std::to_string(tw / 2);
        return std::to_string(tw) + "/2";
    }
};

}  // namespace nsf
