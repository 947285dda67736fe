// Exact rational arithmetic on 64-bit numerator/denominator.
// Used for branch probabilities, clock valuations and test oracles;
// intermediate products go through 128-bit to avoid silent overflow.

#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zonecheck {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t value) : num_(value), den_(1) {}
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator-() const { return Rational(-num_, den_, NoNormalize{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        __int128 num = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
        __int128 den = i128(a.den_) * b.den_;
        return from128(num, den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::invalid_argument("rational division by zero");
        return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
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
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "3", "-3", "9/10" and decimal notation "0.9".
    static std::optional<Rational> parse(std::string_view text) {
        if (text.empty()) return std::nullopt;
        auto slash = text.find('/');
        if (slash != std::string_view::npos) {
            auto n = parse_int(text.substr(0, slash));
            auto d = parse_int(text.substr(slash + 1));
            if (!n || !d || *d == 0) return std::nullopt;
            return Rational(*n, *d);
        }
        auto dot = text.find('.');
        if (dot != std::string_view::npos) {
            auto whole = text.substr(0, dot);
            auto frac = text.substr(dot + 1);
            if (frac.empty() || frac.size() > 15) return std::nullopt;
            bool neg = !whole.empty() && whole[0] == '-';
            auto w = whole.empty() || whole == "-" ? std::optional<std::int64_t>(0) : parse_int(whole);
            auto f = parse_int(frac);
            if (!w || !f || *f < 0) return std::nullopt;
            std::int64_t scale = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
            std::int64_t mag = (*w < 0 ? -*w : *w) * scale + *f;
            return Rational(neg ? -mag : mag, scale);
        }
        auto n = parse_int(text);
        if (!n) return std::nullopt;
        return Rational(*n);
    }

private:
    struct NoNormalize {};
    Rational(std::int64_t num, std::int64_t den, NoNormalize) : num_(num), den_(den) {}

    static __int128 i128(std::int64_t v) { return static_cast<__int128>(v); }

    static Rational from128(__int128 num, __int128 den) {
        if (den < 0) { num = -num; den = -den; }
        __int128 a = num < 0 ? -num : num;
        __int128 b = den;
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        if (a != 0) { num /= a; den /= a; }
        constexpr __int128 lo = std::numeric_limits<std::int64_t>::min();
        constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
        if (num < lo || num > hi || den > hi)
            throw std::overflow_error("rational overflow");
        return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den), NoNormalize{});
    }

    static std::optional<std::int64_t> parse_int(std::string_view s) {
        if (s.empty()) return std::nullopt;
        bool neg = s[0] == '-';
        std::size_t i = neg ? 1 : 0;
        if (i == s.size()) return std::nullopt;
        std::int64_t v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') return std::nullopt;
            if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10) return std::nullopt;
            v = v * 10 + (s[i] - '0');
        }
        return neg ? -v : v;
    }

    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num_;
    std::int64_t den_;
};

} // namespace zonecheck
