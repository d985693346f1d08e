#pragma once

#include <cstdint>
#include <compare>
#include <limits>
#include <ostream>

#include <boost/multiprecision/cpp_int.hpp>

#include "suspsplit/error.hpp"

namespace suspsplit {

using BigInt = boost::multiprecision::cpp_int;

/// 64-bit integer whose arithmetic throws OverflowError instead of wrapping.
class CheckedInt {
public:
    constexpr CheckedInt() = default;
    constexpr CheckedInt(std::int64_t v) : v_(v) {} // NOLINT(google-explicit-constructor)

    constexpr std::int64_t value() const { return v_; }

    friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
        std::int64_t r;
        if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError();
        return r;
    }
    friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowError();
        return r;
    }
    friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowError();
        return r;
    }
    friend CheckedInt operator/(CheckedInt a, CheckedInt b) {
        if (a.v_ == std::numeric_limits<std::int64_t>::min() && b.v_ == -1) throw OverflowError();
        return a.v_ / b.v_;
    }
    friend CheckedInt operator%(CheckedInt a, CheckedInt b) {
        if (b.v_ == -1) return 0;
        return a.v_ % b.v_;
    }
    CheckedInt operator-() const {
        if (v_ == std::numeric_limits<std::int64_t>::min()) throw OverflowError();
        return -v_;
    }
    CheckedInt& operator+=(CheckedInt o) { return *this = *this + o; }
    CheckedInt& operator-=(CheckedInt o) { return *this = *this - o; }
    CheckedInt& operator*=(CheckedInt o) { return *this = *this * o; }

    friend constexpr bool operator==(CheckedInt, CheckedInt) = default;
    friend constexpr auto operator<=>(CheckedInt, CheckedInt) = default;

    friend std::ostream& operator<<(std::ostream& os, CheckedInt c) { return os << c.v_; }

private:
    std::int64_t v_ = 0;
};

inline CheckedInt abs(CheckedInt c) { return c < 0 ? -c : c; }

template <class Int>
Int from_int64(std::int64_t v) { return Int(v); }

inline std::int64_t to_int64(CheckedInt v) { return v.value(); }

inline std::int64_t to_int64(const BigInt& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw OverflowError();
    return static_cast<std::int64_t>(v);
}

template <class Int>
Int int_abs(const Int& v) { return v < 0 ? Int(-v) : v; }

/// Floor-style remainder in [0, m) for m > 0.
inline std::int64_t mod_positive(std::int64_t v, std::int64_t m) {
    std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

/// Run `fn.template operator()<Int>()` with CheckedInt, falling back to BigInt on overflow.
template <class Fn>
auto with_overflow_fallback(Fn&& fn) {
    try {
        return fn.template operator()<CheckedInt>();
    } catch (const OverflowError&) {
        return fn.template operator()<BigInt>();
    }
}

} // namespace suspsplit
