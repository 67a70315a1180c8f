#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "heatjet/multi_index.hpp"
#include "heatjet/rational.hpp"

namespace heatjet {

/// Truncated multivariate polynomial over Rational: a sparse coefficient
/// table keyed by exponent tuple, with every term of total degree > order
/// discarded. Immutable value semantics; no zero coefficients are stored.
class Jet {
public:
    using Table = std::map<MultiIndex, Rational>;

    Jet(int dim, int order) : dim_(check_dim(dim)), order_(check_order(order)) {}

    static Jet zero(int dim, int order) { return Jet(dim, order); }

    static Jet constant(int dim, int order, Rational c) {
        Jet j(dim, order);
        if (!c.is_zero()) j.table_.emplace(MultiIndex::zero(dim), std::move(c));
        return j;
    }

    /// The jet c * x^alpha. Rejects |alpha| > order.
    static Jet monomial(int dim, int order, const MultiIndex& alpha, Rational c) {
        Jet j(dim, order);
        if (alpha.dimension() != dim) throw std::invalid_argument("Jet::monomial: dimension mismatch");
        if (alpha.degree() > order) throw std::invalid_argument("Jet::monomial: degree exceeds order");
        if (!c.is_zero()) j.table_.emplace(alpha, std::move(c));
        return j;
    }

    int dimension() const { return dim_; }
    int order() const { return order_; }
    const Table& terms() const { return table_; }
    bool is_zero() const { return table_.empty(); }

    /// Largest total degree among stored terms (-1 for the zero jet).
    int degree() const {
        int d = -1;
        for (const auto& [mi, c] : table_) d = std::max(d, mi.degree());
        return d;
    }

    const Rational& coefficient(const MultiIndex& mi) const {
        static const Rational kZero(0);
        auto it = table_.find(mi);
        return it == table_.end() ? kZero : it->second;
    }

    /// The constant coefficient, i.e. evaluation at x = 0.
    const Rational& value_at_origin() const { return coefficient(MultiIndex::zero(dim_)); }

    Jet& operator+=(const Jet& o) {
        require_same_shape(o);
        for (const auto& [mi, c] : o.table_) add_term(mi, c);
        return *this;
    }

    Jet& operator-=(const Jet& o) {
        require_same_shape(o);
        for (const auto& [mi, c] : o.table_) add_term(mi, -c);
        return *this;
    }

    friend Jet operator+(Jet a, const Jet& b) { a += b; return a; }
    friend Jet operator-(Jet a, const Jet& b) { a -= b; return a; }
    friend Jet operator*(const Jet& a, const Jet& b) { return a.multiplied(b); }

    Jet operator-() const { return scaled(Rational(-1)); }

    Jet scaled(const Rational& c) const {
        Jet r(dim_, order_);
        if (c.is_zero()) return r;
        for (const auto& [mi, v] : table_) r.table_.emplace(mi, v * c);
        return r;
    }

    /// Ring product, truncated at this jet's order. Operand shapes must match.
    Jet multiplied(const Jet& o) const {
        require_same_shape(o);
        return multiplied_to_order(o, order_);
    }

    /// Product truncated at out_order; operand orders only bound their terms.
    Jet multiplied_to_order(const Jet& o, int out_order) const {
        if (dim_ != o.dim_) throw std::invalid_argument("Jet: dimension mismatch");
        if (packable() && o.packable()) return mul_packed(o, out_order);
        return mul_generic(o, out_order);
    }

    /// Formal partial derivative along 0-based axis; the order is unchanged
    /// (the derivative of a degree <= N polynomial is exact).
    Jet partial_derivative(int axis) const {
        if (axis < 0 || axis >= dim_) throw std::out_of_range("Jet::partial_derivative: axis out of range");
        Jet r(dim_, order_);
        for (const auto& [mi, c] : table_) {
            const int e = mi[axis];
            if (e == 0) continue;
            std::vector<int> v(mi.exponents());
            v[static_cast<std::size_t>(axis)] = e - 1;
            r.table_.emplace(MultiIndex(std::move(v)), c * Rational(e));
        }
        return r;
    }

    /// Same coefficients reinterpreted at new_order: lowering drops terms,
    /// raising keeps them (no information is invented).
    Jet truncated(int new_order) const {
        Jet r(dim_, check_order(new_order));
        for (const auto& [mi, c] : table_) {
            if (mi.degree() <= new_order) r.table_.emplace(mi, c);
        }
        return r;
    }

    /// Multiplicative inverse as a truncated power series. Requires a nonzero
    /// constant term.
    Jet reciprocal() const {
        const Rational& a0 = value_at_origin();
        if (a0.is_zero()) throw std::domain_error("Jet::reciprocal: zero constant term");
        // Newton iteration b <- b + b(1 - a b); correct order doubles each step.
        Jet b = constant(dim_, order_, Rational(1) / a0);
        int correct = 0;
        while (correct < order_) {
            const int next = std::min(2 * correct + 1, order_);
            Jet residual = constant(dim_, next, Rational(1)) - multiplied_to_order(b, next);
            b = b.truncated(next) + b.multiplied_to_order(residual, next);
            correct = next;
        }
        return b.truncated(order_);
    }

    /// b with b*b*a = 1 up to the order. Requires constant term exactly 1.
    Jet inverse_sqrt() const {
        if (value_at_origin() != Rational(1)) {
            throw std::domain_error("Jet::inverse_sqrt: constant term must be 1");
        }
        // Newton iteration b <- b(3 - a b^2)/2, doubling the correct order.
        Jet b = constant(dim_, order_, Rational(1));
        int correct = 0;
        while (correct < order_) {
            const int next = std::min(2 * correct + 1, order_);
            Jet b2 = b.multiplied_to_order(b, next);
            Jet t = constant(dim_, next, Rational(3)) - multiplied_to_order(b2, next);
            b = b.truncated(next).multiplied_to_order(t, next).scaled(Rational(1, 2));
            correct = next;
        }
        return b.truncated(order_);
    }

    friend bool operator==(const Jet& a, const Jet& b) {
        return a.dim_ == b.dim_ && a.order_ == b.order_ && a.table_ == b.table_;
    }
    friend bool operator!=(const Jet& a, const Jet& b) { return !(a == b); }

    std::string to_string() const {
        if (table_.empty()) return "0";
        std::string s;
        for (const auto& [mi, c] : table_) {
            if (!s.empty()) s += " + ";
            s += c.to_string();
            for (int i = 0; i < dim_; ++i) {
                if (mi[i] == 0) continue;
                s += "*x" + std::to_string(i + 1);
                if (mi[i] > 1) s += "^" + std::to_string(mi[i]);
            }
        }
        return s;
    }

private:
    static int check_dim(int dim) {
        if (dim < 1) throw std::invalid_argument("Jet: dimension must be >= 1");
        return dim;
    }
    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("Jet: order must be >= 0");
        return order;
    }

    void require_same_shape(const Jet& o) const {
        if (dim_ != o.dim_ || order_ != o.order_) {
            throw std::invalid_argument("Jet: dimension/order mismatch");
        }
    }

    void add_term(const MultiIndex& mi, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = table_.emplace(mi, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) table_.erase(it);
        }
    }

    // Exponent tuples pack into one byte per axis; total degree <= 255
    // guarantees no byte overflows under key addition.
    bool packable() const { return dim_ <= 8 && order_ <= 255; }

    static std::uint64_t pack(const MultiIndex& mi) {
        std::uint64_t k = 0;
        for (int i = 0; i < mi.dimension(); ++i) {
            k |= static_cast<std::uint64_t>(mi[i]) << (8 * i);
        }
        return k;
    }

    MultiIndex unpack(std::uint64_t k) const {
        std::vector<int> e(static_cast<std::size_t>(dim_));
        for (int i = 0; i < dim_; ++i) e[static_cast<std::size_t>(i)] = static_cast<int>((k >> (8 * i)) & 0xff);
        return MultiIndex(std::move(e));
    }

    Jet mul_packed(const Jet& o, int out_order) const {
        struct Term {
            std::uint64_t key;
            int deg;
            const Rational* coeff;
        };
        std::vector<Term> a, b;
        a.reserve(table_.size());
        for (const auto& [mi, c] : table_) a.push_back({pack(mi), mi.degree(), &c});
        b.reserve(o.table_.size());
        for (const auto& [mi, c] : o.table_) b.push_back({pack(mi), mi.degree(), &c});
        std::sort(b.begin(), b.end(), [](const Term& x, const Term& y) { return x.deg < y.deg; });

        std::unordered_map<std::uint64_t, Rational> acc;
        acc.reserve(table_.size() + o.table_.size());
        for (const Term& ta : a) {
            for (const Term& tb : b) {
                if (ta.deg + tb.deg > out_order) break;  // b sorted by degree
                acc[ta.key + tb.key] += *ta.coeff * *tb.coeff;
            }
        }
        Jet r(dim_, check_order(out_order));
        for (auto& [key, c] : acc) {
            if (!c.is_zero()) r.table_.emplace(unpack(key), std::move(c));
        }
        return r;
    }

    Jet mul_generic(const Jet& o, int out_order) const {
        Jet r(dim_, check_order(out_order));
        for (const auto& [ma, ca] : table_) {
            const int da = ma.degree();
            for (const auto& [mb, cb] : o.table_) {
                if (da + mb.degree() > out_order) continue;
                r.add_term(ma + mb, ca * cb);
            }
        }
        return r;
    }

    int dim_;
    int order_;
    Table table_;
};

/// The jet (x_1^2 + ... + x_d^2)^j expanded by the multinomial theorem.
/// Requires 2j <= order.
inline Jet radius_squared_power(int dim, int order, int j) {
    if (j < 0) throw std::invalid_argument("radius_squared_power: negative power");
    if (2 * j > order) throw std::invalid_argument("radius_squared_power: 2j exceeds order");
    mpz_class jfact;
    mpz_fac_ui(jfact.get_mpz_t(), static_cast<unsigned long>(j));
    Jet out(dim, order);
    for_each_multi_index(dim, j, [&](const MultiIndex& beta) {
        out += Jet::monomial(dim, order, beta.doubled(),
                             Rational(jfact, beta.factorial_product()));
    });
    return out;
}

}  // namespace heatjet
