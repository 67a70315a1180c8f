#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "heatjet/diff_polynomial.hpp"

namespace heatjet {

/// Finite sum over x-degrees s of x^s * (differential polynomial in the
/// U_i, read as the i-th derivative of U at x). Exact: operator powers of
/// polynomials stay polynomial in x, so nothing is truncated.
class XSeries {
public:
    XSeries() = default;

    /// x^s as an XSeries.
    static XSeries x_power(int s) {
        if (s < 0) throw std::invalid_argument("XSeries: negative x-degree");
        XSeries f;
        f.coeffs_.emplace(s, DiffPolynomial::constant(Rational(1)));
        return f;
    }

    const std::map<int, DiffPolynomial>& coefficients() const { return coeffs_; }

    DiffPolynomial coefficient(int degree) const {
        auto it = coeffs_.find(degree);
        return it == coeffs_.end() ? DiffPolynomial() : it->second;
    }

    void add(int degree, const DiffPolynomial& p) {
        if (p.is_zero()) return;
        auto [it, inserted] = coeffs_.emplace(degree, p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    /// d/dx, acting jointly on the x-power and the U-variables:
    ///   d(x^s P) = s x^{s-1} P + x^s P'.
    XSeries x_derivative() const {
        XSeries r;
        for (const auto& [s, p] : coeffs_) {
            if (s >= 1) r.add(s - 1, p.scaled(Rational(s)));
            r.add(s, p.x_derivative());
        }
        return r;
    }

    friend bool operator==(const XSeries& a, const XSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::map<int, DiffPolynomial> coeffs_;
};

/// One application of the Schrodinger operator L = d^2/dx^2 + U(x).
inline XSeries schrodinger_apply(const XSeries& f) {
    XSeries r = f.x_derivative().x_derivative();
    for (const auto& [s, p] : f.coefficients()) r.add(s, p.times_u0());
    return r;
}

}  // namespace heatjet
