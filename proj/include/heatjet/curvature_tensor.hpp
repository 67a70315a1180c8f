#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "heatjet/rational.hpp"

namespace heatjet {

/// Algebraic curvature tensor C_{ikjl}: antisymmetric in (i,k) and in (j,l),
/// symmetric under pair swap, and satisfying the first Bianchi identity
/// (cyclic sum over the last three indices vanishes).
class CurvatureTensor {
public:
    explicit CurvatureTensor(int dim)
        : dim_(dim), c_(static_cast<std::size_t>(dim) * dim * dim * dim, Rational(0)) {
        if (dim < 1) throw std::invalid_argument("CurvatureTensor: dimension must be >= 1");
    }

    int dimension() const { return dim_; }

    const Rational& at(int i, int k, int j, int l) const { return c_[index(i, k, j, l)]; }

    bool is_zero() const {
        for (const Rational& v : c_) {
            if (!v.is_zero()) return false;
        }
        return true;
    }

    /// Seed-deterministic random tensor. A symmetric integer matrix on the
    /// antisymmetric pair basis (entries in [-3, 3]) gives the pair
    /// symmetries; subtracting the cyclic (Bianchi-violating) part, which is
    /// zero automatically for d <= 3, restores the first Bianchi identity.
    static CurvatureTensor random(int dim, std::uint64_t seed) {
        CurvatureTensor b(dim);
        std::mt19937_64 rng(seed);
        auto draw = [&rng]() { return static_cast<long>(rng() % 7) - 3; };
        for (int a1 = 0; a1 < dim; ++a1) {
            for (int a2 = a1 + 1; a2 < dim; ++a2) {
                for (int b1 = a1; b1 < dim; ++b1) {
                    for (int b2 = b1 + 1; b2 < dim; ++b2) {
                        if (b1 == a1 && b2 < a2) continue;  // pair (b1,b2) >= (a1,a2)
                        const Rational v(draw());
                        b.set_with_symmetries(a1, a2, b1, b2, v);
                    }
                }
            }
        }
        // Bianchi projection: C = B - S with S the cyclic mean over (k,j,l).
        CurvatureTensor c(dim);
        for (int i = 0; i < dim; ++i) {
            for (int k = 0; k < dim; ++k) {
                for (int j = 0; j < dim; ++j) {
                    for (int l = 0; l < dim; ++l) {
                        const Rational s = (b.at(i, k, j, l) + b.at(i, j, l, k) + b.at(i, l, k, j)) *
                                           Rational(1, 3);
                        c.c_[c.index(i, k, j, l)] = b.at(i, k, j, l) - s;
                    }
                }
            }
        }
        return c;
    }

    bool symmetries_hold() const {
        for (int i = 0; i < dim_; ++i) {
            for (int k = 0; k < dim_; ++k) {
                for (int j = 0; j < dim_; ++j) {
                    for (int l = 0; l < dim_; ++l) {
                        if (at(i, k, j, l) != -at(k, i, j, l)) return false;
                        if (at(i, k, j, l) != -at(i, k, l, j)) return false;
                        if (at(i, k, j, l) != at(j, l, i, k)) return false;
                        if (!(at(i, k, j, l) + at(i, j, l, k) + at(i, l, k, j)).is_zero()) {
                            return false;
                        }
                    }
                }
            }
        }
        return true;
    }

private:
    std::size_t index(int i, int k, int j, int l) const {
        return static_cast<std::size_t>(((i * dim_ + k) * dim_ + j) * dim_ + l);
    }

    /// Sets B_{(a1 a2)(b1 b2)} = v for pairs a1 < a2, b1 < b2 together with
    /// every image under the pair antisymmetries and the pair swap.
    void set_with_symmetries(int a1, int a2, int b1, int b2, const Rational& v) {
        auto put = [this](int i, int k, int j, int l, const Rational& w) {
            c_[index(i, k, j, l)] = w;
            c_[index(k, i, j, l)] = -w;
            c_[index(i, k, l, j)] = -w;
            c_[index(k, i, l, j)] = w;
        };
        put(a1, a2, b1, b2, v);
        put(b1, b2, a1, a2, v);
    }

    int dim_;
    std::vector<Rational> c_;
};

}  // namespace heatjet
