#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "chainloops/errors.hpp"

namespace chainloops {

/// Arbitrary-precision integer used throughout the library.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational number. Always stored in lowest terms with positive
/// denominator, so fieldwise comparison is value comparison.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(Integer n) : num_(std::move(n)), den_(1) {}
    Rational(Integer num, Integer den);

    const Integer& numerator() const { return num_; }
    const Integer& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws DomainError on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    std::strong_ordering operator<=>(const Rational& rhs) const;
    bool operator==(const Rational& rhs) const = default;

    /// Largest integer <= *this.
    Integer floor() const;

    /// Representative of *this modulo `modulus` in [0, modulus).
    /// `modulus` must be positive.
    Rational mod(const Rational& modulus) const;

    /// "p/q", or just "p" when the denominator is one.
    std::string str() const;

    /// Parses "p/q" or "p" with optional sign. Throws ParseError otherwise.
    static Rational parse(const std::string& text);

private:
    void normalize();

    Integer num_;
    Integer den_; // > 0
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

} // namespace chainloops
