#pragma once

#include <gmpxx.h>

#include <compare>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace heatjet {

/// d-tuple of nonnegative integer exponents. |alpha| is the entry sum;
/// alpha! the entrywise factorial product. Ordering is lexicographic.
class MultiIndex {
public:
    explicit MultiIndex(std::vector<int> exponents) : exponents_(std::move(exponents)) {
        if (exponents_.empty()) {
            throw std::invalid_argument("MultiIndex: dimension must be >= 1");
        }
        for (int e : exponents_) {
            if (e < 0) throw std::invalid_argument("MultiIndex: negative exponent");
        }
    }

    static MultiIndex zero(int dim) { return MultiIndex(std::vector<int>(check_dim(dim), 0)); }

    static MultiIndex unit(int dim, int axis) {
        std::vector<int> e(check_dim(dim), 0);
        if (axis < 0 || axis >= dim) throw std::out_of_range("MultiIndex: axis out of range");
        e[axis] = 1;
        return MultiIndex(std::move(e));
    }

    int dimension() const { return static_cast<int>(exponents_.size()); }

    /// |alpha| = alpha_1 + ... + alpha_d.
    int degree() const { return std::accumulate(exponents_.begin(), exponents_.end(), 0); }

    int operator[](int i) const { return exponents_[static_cast<std::size_t>(i)]; }

    const std::vector<int>& exponents() const { return exponents_; }

    MultiIndex operator+(const MultiIndex& o) const {
        require_same_dimension(o);
        std::vector<int> e(exponents_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.exponents_[i];
        return MultiIndex(std::move(e));
    }

    /// 2*alpha.
    MultiIndex doubled() const {
        std::vector<int> e(exponents_);
        for (int& x : e) x *= 2;
        return MultiIndex(std::move(e));
    }

    /// alpha! as an exact integer.
    mpz_class factorial_product() const {
        mpz_class r(1), f;
        for (int e : exponents_) {
            mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(e));
            r *= f;
        }
        return r;
    }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
        return a.exponents_ == b.exponents_;
    }
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
        return a.exponents_ <=> b.exponents_;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < exponents_.size(); ++i) {
            if (i != 0) s += ",";
            s += std::to_string(exponents_[i]);
        }
        return s + ")";
    }

private:
    static int check_dim(int dim) {
        if (dim < 1) throw std::invalid_argument("MultiIndex: dimension must be >= 1");
        return dim;
    }

    void require_same_dimension(const MultiIndex& o) const {
        if (dimension() != o.dimension()) {
            throw std::invalid_argument("MultiIndex: dimension mismatch");
        }
    }

    std::vector<int> exponents_;
};

/// Visits every multi-index of dimension d with |alpha| = total, in ascending
/// lexicographic order. The fixed order keeps printed sums deterministic.
inline void for_each_multi_index(int d, int total,
                                 const std::function<void(const MultiIndex&)>& visit) {
    if (d < 1) throw std::invalid_argument("for_each_multi_index: dimension must be >= 1");
    if (total < 0) return;
    std::vector<int> e(static_cast<std::size_t>(d), 0);
    const std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == d - 1) {
            e[static_cast<std::size_t>(pos)] = remaining;
            visit(MultiIndex(e));
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            e[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, remaining - v);
        }
    };
    rec(0, total);
}

inline std::vector<MultiIndex> multi_indices_of_degree(int d, int total) {
    std::vector<MultiIndex> out;
    for_each_multi_index(d, total, [&](const MultiIndex& m) { out.push_back(m); });
    return out;
}

}  // namespace heatjet
