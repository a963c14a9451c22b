#include "chainloops/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace chainloops {

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0)
        throw DomainError("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Integer g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0)
        den_ = 1;
}

Rational Rational::operator-() const {
    Rational result(*this);
    result.num_ = -result.num_;
    return result;
}

Rational& Rational::operator+=(const Rational& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0)
        throw DomainError("rational division by zero");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

std::strong_ordering Rational::operator<=>(const Rational& rhs) const {
    // Denominators are positive, so cross-multiplication preserves order.
    Integer lhs_scaled = num_ * rhs.den_;
    Integer rhs_scaled = rhs.num_ * den_;
    if (lhs_scaled < rhs_scaled)
        return std::strong_ordering::less;
    if (lhs_scaled > rhs_scaled)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Integer Rational::floor() const {
    Integer q = num_ / den_;
    if (num_ < 0 && q * den_ != num_)
        --q;
    return q;
}

Rational Rational::mod(const Rational& modulus) const {
    if (modulus.sign() <= 0)
        throw DomainError("modulus must be positive");
    Rational result = *this - modulus * Rational((*this / modulus).floor());
    detail::internal_check(result.sign() >= 0 && result < modulus, "mod out of range");
    return result;
}

std::string Rational::str() const {
    std::string text = num_.str();
    if (den_ != 1) {
        text += '/';
        text += den_.str();
    }
    return text;
}

Rational Rational::parse(const std::string& text) {
    auto is_integer_token = [](const std::string& token) {
        if (token.empty())
            return false;
        std::size_t start = (token[0] == '+' || token[0] == '-') ? 1 : 0;
        if (start == token.size())
            return false;
        for (std::size_t i = start; i < token.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(token[i])))
                return false;
        return true;
    };

    auto strip_plus = [](const std::string& token) {
        return token.size() > 1 && token[0] == '+' ? token.substr(1) : token;
    };

    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            if (!is_integer_token(text))
                throw ParseError("invalid rational literal: '" + text + "'");
            return Rational(Integer(strip_plus(text)));
        }
        std::string num_token = strip_plus(text.substr(0, slash));
        std::string den_token = strip_plus(text.substr(slash + 1));
        if (!is_integer_token(num_token) || !is_integer_token(den_token))
            throw ParseError("invalid rational literal: '" + text + "'");
        Integer den(den_token);
        if (den == 0)
            throw ParseError("invalid rational literal (zero denominator): '" + text + "'");
        return Rational(Integer(num_token), den);
    } catch (const std::runtime_error& err) {
        if (dynamic_cast<const ParseError*>(&err))
            throw;
        throw ParseError("invalid rational literal: '" + text + "'");
    }
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
    return os << value.str();
}

} // namespace chainloops
