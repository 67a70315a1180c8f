#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "heatjet/combinatorics.hpp"
#include "heatjet/curvature_tensor.hpp"
#include "heatjet/jet.hpp"
#include "heatjet/metric_jet.hpp"

namespace heatjet {

/// Model space of constant sectional curvature K in normal coordinates:
///   g_ij(x) = delta_ij + phi(r^2) (r^2 delta_ij - x_i x_j),  r^2 = sum x_i^2,
/// where phi(u) = (sn(u) - 1)/u and
///   sn(u) = sum_{m>=0} (-1)^m 2^{2m+1} K^m u^m / (2m+2)!
/// is the series of (sin(sqrt(K) r)/(sqrt(K) r))^2. The Gauss condition holds
/// identically because (r^2 delta_ij - x_i x_j) x_j sums to zero.
inline MetricJet constant_curvature_metric(int dim, const Rational& curvature, int order) {
    if (order < 2 || order % 2 != 0) {
        throw std::invalid_argument("constant_curvature_metric: order must be even and >= 2");
    }
    const int d = dim;
    Jet r2(d, order);
    for (int i = 0; i < d; ++i) {
        r2 += Jet::monomial(d, order, MultiIndex::unit(d, i).doubled(), Rational(1));
    }
    // phi(r^2) = sum_{m>=1} (-1)^m 2^{2m+1} K^m (r^2)^{m-1} / (2m+2)!
    Jet phi(d, order);
    Jet r2_power = Jet::constant(d, order, Rational(1));
    Rational k_power(1);
    for (int m = 1; 2 * (m - 1) <= order; ++m) {
        k_power *= curvature;
        mpz_class two_pow;
        mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(2 * m + 1));
        Rational coeff = Rational(two_pow) * k_power /
                         Rational(factorial(static_cast<unsigned long>(2 * m + 2)));
        if (m % 2 != 0) coeff = -coeff;
        phi += r2_power.scaled(coeff);
        r2_power = r2_power * r2;
    }

    std::vector<Jet> entries;
    entries.reserve(static_cast<std::size_t>(d * (d + 1) / 2));
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j) {
            Jet xixj = Jet::monomial(d, order, MultiIndex::unit(d, i) + MultiIndex::unit(d, j),
                                     Rational(1));
            Jet t = -xixj;
            if (i == j) t += r2;
            t = phi * t;
            if (i == j) t += Jet::constant(d, order, Rational(1));
            entries.push_back(std::move(t));
        }
    }
    return MetricJet(d, order, std::move(entries), /*normal_form=*/true);
}

/// Normal-form 2-jet metric g_ij = delta_ij + sum_{k,l} C_{ikjl} x_k x_l from
/// an algebraic curvature tensor. The (j,l)-antisymmetry of C makes the Gauss
/// condition hold identically.
inline MetricJet metric_from_curvature_tensor(const CurvatureTensor& c, int order) {
    const int d = c.dimension();
    if (order < 2) throw std::invalid_argument("metric_from_curvature_tensor: order must be >= 2");
    std::vector<Jet> entries;
    entries.reserve(static_cast<std::size_t>(d * (d + 1) / 2));
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j) {
            Jet t = Jet::constant(d, order, Rational(i == j ? 1 : 0));
            for (int k = 0; k < d; ++k) {
                for (int l = 0; l < d; ++l) {
                    const Rational& v = c.at(i, k, j, l);
                    if (v.is_zero()) continue;
                    t += Jet::monomial(d, order, MultiIndex::unit(d, k) + MultiIndex::unit(d, l), v);
                }
            }
            entries.push_back(std::move(t));
        }
    }
    return MetricJet(d, order, std::move(entries), /*normal_form=*/true);
}

/// Seed-deterministic random normal-form 2-jet in dimension d >= 2.
inline MetricJet random_normal_2jet(int dim, std::uint64_t seed, int order = 2) {
    if (dim < 2) throw std::invalid_argument("random_normal_2jet: dimension must be >= 2");
    return metric_from_curvature_tensor(CurvatureTensor::random(dim, seed), order);
}

}  // namespace heatjet
