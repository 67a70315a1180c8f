#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "heatjet/rational.hpp"

namespace heatjet {

/// Polynomial in the formal variables U_0, U_1, U_2, ... over Rational.
/// A monomial U_{k_1}...U_{k_p} is keyed by its index multiset stored as an
/// ascending vector; the empty key is the constant monomial. No zero
/// coefficients are stored.
class DiffPolynomial {
public:
    using Monomial = std::vector<int>;
    using Table = std::map<Monomial, Rational>;

    DiffPolynomial() = default;

    static DiffPolynomial constant(Rational c) {
        DiffPolynomial p;
        if (!c.is_zero()) p.terms_.emplace(Monomial{}, std::move(c));
        return p;
    }

    static DiffPolynomial variable(int index) {
        if (index < 0) throw std::invalid_argument("DiffPolynomial: negative variable index");
        DiffPolynomial p;
        p.terms_.emplace(Monomial{index}, Rational(1));
        return p;
    }

    /// c * U_{k_1}...U_{k_p}; indices are canonicalized (sorted ascending).
    static DiffPolynomial monomial(Monomial indices, Rational c) {
        for (int k : indices) {
            if (k < 0) throw std::invalid_argument("DiffPolynomial: negative variable index");
        }
        std::sort(indices.begin(), indices.end());
        DiffPolynomial p;
        if (!c.is_zero()) p.terms_.emplace(std::move(indices), std::move(c));
        return p;
    }

    const Table& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Monomial indices, const Rational& c) {
        if (c.is_zero()) return;
        std::sort(indices.begin(), indices.end());
        auto [it, inserted] = terms_.emplace(std::move(indices), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    DiffPolynomial& operator+=(const DiffPolynomial& o) {
        for (const auto& [mono, c] : o.terms_) add_term(mono, c);
        return *this;
    }

    friend DiffPolynomial operator+(DiffPolynomial a, const DiffPolynomial& b) { a += b; return a; }

    DiffPolynomial scaled(const Rational& c) const {
        DiffPolynomial r;
        if (c.is_zero()) return r;
        for (const auto& [mono, v] : terms_) r.terms_.emplace(mono, v * c);
        return r;
    }

    /// Formal x-derivative: each factor U_k contributes its replacement by
    /// U_{k+1} (Leibniz over the monomial).
    DiffPolynomial x_derivative() const {
        DiffPolynomial r;
        for (const auto& [mono, c] : terms_) {
            for (std::size_t pos = 0; pos < mono.size(); ++pos) {
                if (pos > 0 && mono[pos] == mono[pos - 1]) continue;  // group equal indices
                const long multiplicity =
                    std::count(mono.begin(), mono.end(), mono[pos]);
                Monomial m(mono);
                m[pos] += 1;
                r.add_term(std::move(m), c * Rational(multiplicity));
            }
        }
        return r;
    }

    /// Multiplication by the undifferentiated variable U_0.
    DiffPolynomial times_u0() const {
        DiffPolynomial r;
        for (const auto& [mono, c] : terms_) {
            Monomial m;
            m.reserve(mono.size() + 1);
            m.push_back(0);
            m.insert(m.end(), mono.begin(), mono.end());
            r.terms_.emplace(std::move(m), c);  // prepending 0 keeps the order
        }
        return r;
    }

    int max_variable_index() const {
        int mx = -1;
        for (const auto& [mono, c] : terms_) {
            if (!mono.empty()) mx = std::max(mx, mono.back());
        }
        return mx;
    }

    friend bool operator==(const DiffPolynomial& a, const DiffPolynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const DiffPolynomial& a, const DiffPolynomial& b) { return !(a == b); }

    /// Canonical printing: fewer factors first, then lexicographic; factors
    /// grouped as powers. Example: "U4 + 10*U0*U2 + 5*U1^2 + 10*U0^3".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<const Table::value_type*> order;
        order.reserve(terms_.size());
        for (const auto& kv : terms_) order.push_back(&kv);
        std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
            if (a->first.size() != b->first.size()) return a->first.size() < b->first.size();
            return a->first < b->first;
        });
        std::string s;
        for (const auto* kv : order) {
            const auto& [mono, c] = *kv;
            const bool negative = c.sign() < 0;
            const Rational mag = negative ? -c : c;
            if (s.empty()) {
                if (negative) s += "-";
            } else {
                s += negative ? " - " : " + ";
            }
            std::string factors;
            for (std::size_t i = 0; i < mono.size();) {
                std::size_t run = i;
                while (run < mono.size() && mono[run] == mono[i]) ++run;
                if (!factors.empty()) factors += "*";
                factors += "U" + std::to_string(mono[i]);
                if (run - i > 1) factors += "^" + std::to_string(run - i);
                i = run;
            }
            if (factors.empty()) {
                s += mag.to_string();
            } else if (mag == Rational(1)) {
                s += factors;
            } else {
                s += mag.to_string() + "*" + factors;
            }
        }
        return s;
    }

private:
    Table terms_;
};

}  // namespace heatjet
