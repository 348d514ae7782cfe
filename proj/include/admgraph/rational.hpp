#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace admgraph {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator);
    explicit Rational(const mpz_class& integer) : value_(integer) {}
    explicit Rational(mpq_class value);

    static Rational from_fraction(const mpz_class& numerator, const mpz_class& denominator);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    Rational& operator+=(const Rational& other);
    Rational& operator-=(const Rational& other);
    Rational& operator*=(const Rational& other);
    Rational& operator/=(const Rational& other);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        int c = cmp(lhs.value_, rhs.value_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class value_{0};
};

Rational abs(const Rational& r);
Rational min(const Rational& a, const Rational& b);
Rational pow(const Rational& base, unsigned exponent);

/// Strict parser for "p", "-p", "p/q" and "-p/q" with q > 0. Returns nullopt on any other text.
std::optional<Rational> try_parse_rational(std::string_view text);

/// As try_parse_rational, but throws Error(BadRational).
Rational parse_rational(std::string_view text);

/// Either a finite rational or +infinity. Infinity only arises as the resistance across a bridge.
class ExtendedRational {
public:
    ExtendedRational(Rational value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
    static ExtendedRational infinity() { return ExtendedRational(); }

    bool is_infinite() const { return !value_.has_value(); }
    const Rational& value() const;
    std::string to_string() const { return is_infinite() ? "inf" : value_->to_string(); }

    friend bool operator==(const ExtendedRational&, const ExtendedRational&) = default;

private:
    ExtendedRational() = default;
    std::optional<Rational> value_;
};

}  // namespace admgraph
