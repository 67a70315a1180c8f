#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace heatjet {

/// Arbitrary-precision exact fraction. Always canonical: lowest terms,
/// denominator > 0, zero stored as 0/1. Equality is value equality.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
    Rational(int n) : value_(static_cast<signed long>(n)) {}   // NOLINT

    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    Rational(mpz_class num, mpz_class den) {
        if (den == 0) {
            throw std::domain_error("Rational: zero denominator");
        }
        value_ = mpq_class(std::move(num), std::move(den));
        value_.canonicalize();
    }

    explicit Rational(mpz_class n) : value_(std::move(n)) {}

    static Rational from_mpq(mpq_class q) {
        q.canonicalize();
        Rational r;
        r.value_ = std::move(q);
        return r;
    }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return value_ == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const { return from_mpq(mpq_class(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) {
            throw std::domain_error("Rational: division by zero");
        }
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string to_string() const { return value_.get_str(); }

    /// Strict inverse of to_string: accepts exactly the canonical spelling
    /// ("-3", "35/16", ...). Rejects zero denominators, non-lowest terms,
    /// signs on the denominator, leading zeros, and surrounding noise.
    static std::optional<Rational> parse(std::string_view text) {
        if (text.empty()) return std::nullopt;
        std::string s(text);
        for (char c : s) {
            if (c != '-' && c != '/' && (c < '0' || c > '9')) return std::nullopt;
        }
        mpq_class q;
        if (q.set_str(s, 10) != 0) return std::nullopt;
        if (q.get_den() == 0) return std::nullopt;
        mpq_class canonical(q);
        canonical.canonicalize();
        if (canonical.get_str() != s) return std::nullopt;  // enforce lowest terms
        return from_mpq(std::move(canonical));
    }

    double to_double() const { return value_.get_d(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.value_;
    }

private:
    mpq_class value_;
};

inline Rational pow(const Rational& base, unsigned long exp) {
    Rational r(1);
    Rational b = base;
    while (exp != 0) {
        if (exp & 1u) r *= b;
        exp >>= 1u;
        if (exp != 0) b *= b;
    }
    return r;
}

}  // namespace heatjet
