#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "constitution/errors.hpp"

namespace constitution {

/// Exact fraction over int64, always in lowest terms with positive
/// denominator. Every threshold comparison in the engine goes through this
/// type; there is no floating point anywhere on a decision path.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(std::int64_t value) : num_(value), den_(1) {}

    Rational(std::int64_t num, std::int64_t den) {
        if (den == 0) throw domain_error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        num_ = g ? num / g : 0;
        den_ = g ? den / g : 1;
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return cross(a) * b.den_ < cross(b) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

    /// Absolute value, used for closest-to-status-quo distances.
    Rational abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }

    /// "p/q" in lowest terms, or just "p" when q = 1.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "p/q" or an exact decimal like "0.6" (converted to 3/5).
    static Rational parse(std::string_view text);

private:
    // Intermediate products fit easily: all values in this engine have
    // denominators bounded by the community size.
    static __int128 cross(const Rational& r) { return static_cast<__int128>(r.num_); }

    std::int64_t num_;
    std::int64_t den_;
};

inline Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw parse_error("empty rational");
    const auto to_int = [](std::string_view s) -> std::int64_t {
        if (s.empty()) throw parse_error("empty integer in rational");
        std::size_t i = 0;
        bool neg = false;
        if (s[0] == '-' || s[0] == '+') {
            neg = s[0] == '-';
            i = 1;
            if (s.size() == 1) throw parse_error("sign without digits");
        }
        std::int64_t v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw parse_error("invalid digit in rational: " + std::string(s));
            v = v * 10 + (s[i] - '0');
        }
        return neg ? -v : v;
    };

    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        return Rational(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
    }
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const std::string_view whole = text.substr(0, dot);
        const std::string_view frac = text.substr(dot + 1);
        if (frac.empty()) throw parse_error("decimal without fractional digits");
        if (frac.size() > 15) throw parse_error("decimal too long for exact conversion");
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        const bool neg = !whole.empty() && whole[0] == '-';
        const std::int64_t w = whole.empty() || whole == "-" || whole == "+" ? 0 : to_int(whole);
        const std::int64_t f = to_int(frac);
        const std::int64_t scaled = (neg ? -1 : 1) * ((neg ? -w : w) * den + f);
        return Rational(scaled, den);
    }
    return Rational(to_int(text), 1);
}

}  // namespace constitution
