#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lgv {

// Exact rational number on 64-bit numerator/denominator, normalized so that
// den > 0 and gcd(|num|, den) == 1. All intermediate products run through
// __int128; results that do not fit back into 64 bits throw.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) { assign(n, d); }

    static Rational from128(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > kMax || n < kMin || d > kMax)
            throw std::overflow_error("Rational: 64-bit overflow");
        Rational r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    long long as_integer() const {
        if (den_ != 1) throw std::domain_error("Rational: not an integer: " + str());
        return num_;
    }

    Rational operator-() const { return from128(-(__int128)num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                       (__int128)a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from128((__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_,
                       (__int128)a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return from128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Serialized form is always "numerator/denominator".
    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    static constexpr __int128 kMax = INT64_MAX;
    static constexpr __int128 kMin = INT64_MIN;

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a;
    }

    void assign(long long n, long long d) {
        Rational r = from128(n, d);
        num_ = r.num_;
        den_ = r.den_;
    }

    long long num_ = 0;
    long long den_ = 1;
};

inline long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    if (r > INT64_MAX) throw std::overflow_error("binomial: overflow");
    return static_cast<long long>(r);
}

}  // namespace lgv
