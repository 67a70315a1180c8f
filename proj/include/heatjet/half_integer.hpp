#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

#include "heatjet/rational.hpp"

namespace heatjet {

/// Exact element of (1/2)Z, stored as twice its value. Covers the
/// half-integer binomial arguments 3n + d/2 and j + d/2 without rounding.
class HalfInteger {
public:
    HalfInteger() : twice_(0) {}
    HalfInteger(long n) : twice_(2 * mpz_class(n)) {}  // NOLINT: implicit by design
    HalfInteger(int n) : HalfInteger(static_cast<long>(n)) {}  // NOLINT

    /// Value t/2 from t; the only way to build half-odd-integers.
    static HalfInteger halves(mpz_class t) {
        HalfInteger h;
        h.twice_ = std::move(t);
        return h;
    }
    static HalfInteger halves(long t) { return halves(mpz_class(t)); }

    const mpz_class& twice() const { return twice_; }

    bool is_integer() const { return mpz_even_p(twice_.get_mpz_t()) != 0; }
    bool is_nonnegative_integer() const { return twice_ >= 0 && is_integer(); }

    /// The value as an unsigned long; requires is_nonnegative_integer().
    unsigned long to_nonnegative_ulong() const {
        if (!is_nonnegative_integer()) {
            throw std::domain_error("HalfInteger: not a nonnegative integer: " + to_string());
        }
        mpz_class half = twice_ / 2;
        if (!half.fits_ulong_p()) {
            throw std::domain_error("HalfInteger: value out of range");
        }
        return half.get_ui();
    }

    Rational to_rational() const { return Rational(twice_, mpz_class(2)); }

    HalfInteger operator-() const { return halves(mpz_class(-twice_)); }

    friend HalfInteger operator+(const HalfInteger& a, const HalfInteger& b) {
        return halves(mpz_class(a.twice_ + b.twice_));
    }
    friend HalfInteger operator-(const HalfInteger& a, const HalfInteger& b) {
        return halves(mpz_class(a.twice_ - b.twice_));
    }
    friend HalfInteger operator+(const HalfInteger& a, long b) { return a + HalfInteger(b); }
    friend HalfInteger operator-(const HalfInteger& a, long b) { return a - HalfInteger(b); }

    friend bool operator==(const HalfInteger& a, const HalfInteger& b) { return a.twice_ == b.twice_; }
    friend bool operator!=(const HalfInteger& a, const HalfInteger& b) { return a.twice_ != b.twice_; }
    friend bool operator<(const HalfInteger& a, const HalfInteger& b) { return a.twice_ < b.twice_; }

    std::string to_string() const { return to_rational().to_string(); }

private:
    mpz_class twice_;
};

}  // namespace heatjet
