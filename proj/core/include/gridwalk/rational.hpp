#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "gridwalk/errors.hpp"

namespace gridwalk {

/// Exact rational arithmetic for anchor coordinates and generator
/// displacements. Always normalized: positive denominator, reduced terms.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw ValidationError("rational with zero denominator");
        normalize();
    }

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a) {
        Rational r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const auto lhs = static_cast<__int128>(a.num_) * b.den_;
        const auto rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

using RationalVec = std::vector<Rational>;

/// Parses "1/3", "-2/5", "0", "2". Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline bool is_integral(const Rational& r) { return r.denominator() == 1; }

}  // namespace gridwalk
