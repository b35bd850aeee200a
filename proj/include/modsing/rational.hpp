#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "modsing/error.hpp"

namespace modsing {

using BigInt = boost::multiprecision::cpp_int;

/*
 * Arbitrary-precision rational number, always kept in lowest terms with a
 * positive denominator. Text form is "p/q" with the denominator always
 * present ("3/1", "-15/4", "0/1").
 */
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(const BigInt& value) : value_(value) {}

    Rational(const BigInt& num, const BigInt& den) {
        detail::require(den != 0, ErrorKind::invalid_argument, "zero denominator");
        // Boost rejects a negative denominator; move the sign to the numerator.
        value_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
    }

    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos) return Rational(BigInt(std::string(text)));
            return Rational(BigInt(std::string(text.substr(0, slash))),
                            BigInt(std::string(text.substr(slash + 1))));
        } catch (const std::runtime_error&) {
            throw Error(ErrorKind::invalid_argument, "malformed rational '" + std::string(text) + "'");
        }
    }

    BigInt num() const { return boost::multiprecision::numerator(value_); }
    BigInt den() const { return boost::multiprecision::denominator(value_); }

    int sign() const { return value_.sign(); }
    bool is_zero() const { return value_.is_zero(); }
    bool is_integer() const { return den() == 1; }

    std::string str() const { return num().str() + "/" + den().str(); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        detail::require(!o.is_zero(), ErrorKind::invalid_argument, "division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(-a.value_); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = a.value_.compare(b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}

    boost::multiprecision::cpp_rational value_;
};

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

}  // namespace modsing
