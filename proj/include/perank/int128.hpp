#pragma once

// Checked 128-bit signed integer. Every arithmetic operation detects
// overflow and throws std::overflow_error instead of wrapping; exact
// results are a correctness requirement here, not a performance knob.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace perank {

class Int128 {
  public:
    constexpr Int128() = default;
    constexpr Int128(std::int64_t v) : v_(v) {}  // NOLINT: implicit by design
    constexpr Int128(int v) : v_(v) {}           // NOLINT

    static constexpr Int128 raw(__int128 v) {
        Int128 r;
        r.v_ = v;
        return r;
    }

    friend Int128 operator+(Int128 a, Int128 b) {
        __int128 r;
        if (__builtin_add_overflow(a.v_, b.v_, &r)) throw std::overflow_error("Int128: addition overflow");
        return raw(r);
    }
    friend Int128 operator-(Int128 a, Int128 b) {
        __int128 r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw std::overflow_error("Int128: subtraction overflow");
        return raw(r);
    }
    friend Int128 operator*(Int128 a, Int128 b) {
        __int128 r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw std::overflow_error("Int128: multiplication overflow");
        return raw(r);
    }
    Int128 operator-() const {
        __int128 r;
        if (__builtin_sub_overflow(static_cast<__int128>(0), v_, &r))
            throw std::overflow_error("Int128: negation overflow");
        return raw(r);
    }
    Int128& operator+=(Int128 o) { return *this = *this + o; }
    Int128& operator-=(Int128 o) { return *this = *this - o; }
    Int128& operator*=(Int128 o) { return *this = *this * o; }

    /// Division that requires exact divisibility; used by fraction-free
    /// elimination and monic polynomial division, where a nonzero
    /// remainder indicates a logic error.
    friend Int128 exact_div(Int128 a, Int128 b) {
        if (b.v_ == 0) throw std::domain_error("Int128: division by zero");
        if (a.v_ % b.v_ != 0) throw std::logic_error("Int128: inexact division");
        return raw(a.v_ / b.v_);
    }

    /// Truncating quotient.
    friend Int128 quot(Int128 a, Int128 b) {
        if (b.v_ == 0) throw std::domain_error("Int128: division by zero");
        if (b.v_ == -1) return -a;  // sidesteps the one undefined case, min / -1
        return raw(a.v_ / b.v_);
    }

    /// Remainder with the sign of a (truncating convention).
    friend Int128 rem(Int128 a, Int128 b) {
        if (b.v_ == 0) throw std::domain_error("Int128: division by zero");
        if (b.v_ == -1) return raw(0);
        return raw(a.v_ % b.v_);
    }

    friend bool operator==(Int128 a, Int128 b) { return a.v_ == b.v_; }
    friend bool operator!=(Int128 a, Int128 b) { return a.v_ != b.v_; }
    friend bool operator<(Int128 a, Int128 b) { return a.v_ < b.v_; }
    friend bool operator<=(Int128 a, Int128 b) { return a.v_ <= b.v_; }
    friend bool operator>(Int128 a, Int128 b) { return a.v_ > b.v_; }
    friend bool operator>=(Int128 a, Int128 b) { return a.v_ >= b.v_; }

    bool is_zero() const { return v_ == 0; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    std::int64_t to_int64() const {
        if (v_ > INT64_MAX || v_ < INT64_MIN) throw std::overflow_error("Int128: value does not fit in 64 bits");
        return static_cast<std::int64_t>(v_);
    }

    std::string str() const {
        if (v_ == 0) return "0";
        unsigned __int128 mag = v_ < 0 ? -static_cast<unsigned __int128>(v_) : static_cast<unsigned __int128>(v_);
        std::string s;
        while (mag > 0) {
            s.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
            mag /= 10;
        }
        if (v_ < 0) s.push_back('-');
        return {s.rbegin(), s.rend()};
    }

  private:
    __int128 v_ = 0;
};

}  // namespace perank
