#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <string>

#include "singulex/error.hpp"

namespace singulex {

using Integer = boost::multiprecision::cpp_int;

// Always reduced, denominator > 0, canonical zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// Accepts "p" or "p/q" with q > 0.
Rational parse_rational(const std::string& text);

// Largest integer <= r.
Integer rational_floor(const Rational& r);

// A positive rational or the distinguished value "inf" (the smooth case,
// where there is no reduced Bernstein-Sato root). "inf" is absorbing for
// min and larger than every finite value.
class ExponentValue {
public:
    ExponentValue(Rational v) : value_(std::move(v)) {}
    ExponentValue(long v) : value_(Rational(v)) {}

    static ExponentValue infinity() { return ExponentValue(); }

    bool is_infinite() const { return !value_.has_value(); }

    const Rational& value() const {
        if (!value_) throw Error("INFINITE_VALUE", "exponent value is infinite");
        return *value_;
    }

    std::string str() const { return value_ ? to_string(*value_) : "inf"; }

    friend bool operator==(const ExponentValue& a, const ExponentValue& b) = default;

    // inf compares greater than every finite value.
    friend bool operator<(const ExponentValue& a, const ExponentValue& b) {
        if (a.is_infinite()) return false;
        if (b.is_infinite()) return true;
        return *a.value_ < *b.value_;
    }
    friend bool operator>(const ExponentValue& a, const ExponentValue& b) { return b < a; }
    friend bool operator<=(const ExponentValue& a, const ExponentValue& b) { return !(b < a); }
    friend bool operator>=(const ExponentValue& a, const ExponentValue& b) { return !(a < b); }

private:
    ExponentValue() = default;
    std::optional<Rational> value_;
};

inline ExponentValue min(const ExponentValue& a, const ExponentValue& b) {
    return a < b ? a : b;
}

ExponentValue parse_exponent_value(const std::string& text);

} // namespace singulex
