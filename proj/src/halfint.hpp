#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>

namespace arthur {

// Element of (1/2)Z stored as twice its value, so arithmetic stays exact.
class HalfInt {
public:
    constexpr HalfInt() : twice_(0) {}
    constexpr HalfInt(int n) : twice_(2 * n) {}

    static constexpr HalfInt from_twice(int t) {
        HalfInt h;
        h.twice_ = t;
        return h;
    }
    static constexpr HalfInt half(int numerator) { return from_twice(numerator); }

    constexpr int twice() const { return twice_; }
    constexpr bool is_integral() const { return twice_ % 2 == 0; }

    // Only valid when integral.
    int as_int() const {
        if (!is_integral()) throw std::logic_error("HalfInt::as_int on " + str());
        return twice_ / 2;
    }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.twice_); }
    constexpr HalfInt& operator+=(HalfInt b) { twice_ += b.twice_; return *this; }
    constexpr HalfInt& operator-=(HalfInt b) { twice_ -= b.twice_; return *this; }

    friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

    constexpr HalfInt abs() const { return from_twice(twice_ < 0 ? -twice_ : twice_); }

    std::string str() const {
        if (is_integral()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

private:
    int twice_;
};

inline constexpr HalfInt operator*(int n, HalfInt h) { return HalfInt::from_twice(n * h.twice()); }

// {+1, -1} under multiplication.
class Sign {
public:
    constexpr Sign() : v_(1) {}
    explicit constexpr Sign(int v) : v_(v >= 0 ? 1 : -1) {}

    static constexpr Sign plus() { return Sign(1); }
    static constexpr Sign minus() { return Sign(-1); }
    static constexpr Sign pow_minus_one(long long exponent) {
        return Sign(exponent % 2 == 0 ? 1 : -1);
    }

    constexpr int value() const { return v_; }
    constexpr bool positive() const { return v_ > 0; }

    friend constexpr Sign operator*(Sign a, Sign b) { return Sign(a.v_ * b.v_); }
    constexpr Sign& operator*=(Sign b) { v_ *= b.v_; return *this; }
    friend constexpr bool operator==(Sign a, Sign b) = default;

    constexpr Sign pow(long long exponent) const {
        return v_ > 0 ? plus() : pow_minus_one(exponent);
    }

    // ζ-directed value ζ·h.
    constexpr HalfInt times(HalfInt h) const { return HalfInt::from_twice(v_ * h.twice()); }

    char ch() const { return v_ > 0 ? '+' : '-'; }
    std::string str() const { return v_ > 0 ? "+" : "-"; }

private:
    int v_;
};

} // namespace arthur

template <> struct std::hash<arthur::HalfInt> {
    size_t operator()(arthur::HalfInt h) const noexcept { return std::hash<int>()(h.twice()); }
};
