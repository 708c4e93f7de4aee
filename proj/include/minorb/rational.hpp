#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace minorb {

/// Thrown when a rational value no longer fits in 64-bit numerator/denominator.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

namespace detail {

using int128 = __int128;

inline std::string to_string_i128(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    // Negate digit-by-digit to survive the most negative value.
    std::string digits;
    while (v != 0) {
        int d = static_cast<int>(v % 10);
        if (d < 0) d = -d;
        digits.push_back(static_cast<char>('0' + d));
        v /= 10;
    }
    if (neg) digits.push_back('-');
    return {digits.rbegin(), digits.rend()};
}

inline int128 gcd_i128(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace detail

/// Exact rational number on int64 numerator / positive int64 denominator,
/// always stored reduced. Intermediates run in 128-bit; any result that
/// does not reduce back into 64 bits throws OverflowError instead of
/// wrapping silently.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

    [[nodiscard]] std::int64_t num() const { return num_; }
    [[nodiscard]] std::int64_t den() const { return den_; }

    [[nodiscard]] bool is_zero() const { return num_ == 0; }
    [[nodiscard]] bool is_integer() const { return den_ == 1; }
    [[nodiscard]] bool is_negative() const { return num_ < 0; }

    [[nodiscard]] std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) {
            s += '/';
            s += std::to_string(den_);
        }
        return s;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        detail::int128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
        return make(n, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        detail::int128 n = i128(a.num_) * b.den_ - i128(b.num_) * a.den_;
        return make(n, i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    Rational operator-() const { return make(-i128(num_), den_); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    static detail::int128 i128(std::int64_t v) { return static_cast<detail::int128>(v); }

    static Rational make(detail::int128 n, detail::int128 d) {
        Rational r;
        r.assign_i128(n, d);
        return r;
    }

    void assign(std::int64_t n, std::int64_t d) { assign_i128(i128(n), i128(d)); }

    void assign_i128(detail::int128 n, detail::int128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n != 0) {
            detail::int128 g = detail::gcd_i128(n, d);
            n /= g;
            d /= g;
        } else {
            d = 1;
        }
        constexpr detail::int128 lo = INT64_MIN;
        constexpr detail::int128 hi = INT64_MAX;
        if (n < lo || n > hi || d > hi) {
            throw OverflowError("rational overflow: " + detail::to_string_i128(n) + "/" +
                                detail::to_string_i128(d) + " exceeds 64-bit storage");
        }
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
    }

    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace minorb
