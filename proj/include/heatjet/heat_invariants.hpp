#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "heatjet/combinatorics.hpp"
#include "heatjet/jet.hpp"
#include "heatjet/laplace_beltrami.hpp"
#include "heatjet/metric_jet.hpp"
#include "heatjet/parallel.hpp"

namespace heatjet {

enum class HeatInvariantForm { multiindex, binomial };

inline const char* to_string(HeatInvariantForm f) {
    return f == HeatInvariantForm::multiindex ? "multiindex" : "binomial";
}

/// One computed heat invariant: the exact rational abar_n with the universal
/// (4*pi)^(-d/2) prefactor factored out (recorded, never evaluated).
struct HeatInvariantResult {
    int n = 0;
    int dim = 0;
    Rational normalized_value;
    HeatInvariantForm form = HeatInvariantForm::multiindex;
    int truncation_order = 0;
};

namespace detail {

/// Default sufficient truncation order: at most 4n second-order applications
/// on inputs of degree at most 6n, conservatively 8n.
inline int default_truncation_order(int n) { return 8 * n; }

inline int resolve_order(const MetricJet& g, int n, std::optional<int> order_override) {
    if (n < 0) throw std::invalid_argument("heat invariant: n must be >= 0");
    const int needed = order_override.value_or(default_truncation_order(n));
    if (g.order() < needed) {
        throw std::invalid_argument("heat invariant: metric order " + std::to_string(g.order()) +
                                    " < required truncation order " + std::to_string(needed));
    }
    return needed;
}

}  // namespace detail

/// The quadruple-sum form: abar_n = (-1)^n sum_{m=n}^{4n} sum_{k=n}^{m}
/// 1/(k! 2^{2m-2n}) sum_{|alpha|=m-k} sum_{|beta|=k-n}
/// (2a+2b)!/(a!(a+b)!(2b)!) * Delta^k(x^{2 beta})|_0.
/// Within the sum k = n + |beta|, so each Delta^k(x^{2 beta})|_0 is computed
/// once per beta and reused across all m.
inline HeatInvariantResult a_n_multiindex_form(const MetricJet& g, int n,
                                               std::optional<int> order_override = {}) {
    const int order = detail::resolve_order(g, n, order_override);
    const int d = g.dimension();
    const LaplaceOperator op = build_laplacian(g.order() == order ? g : g.truncated(order));

    // One operator orbit per beta, |beta| <= 3n; independent, so parallel.
    std::vector<MultiIndex> betas;
    for (int s = 0; s <= 3 * n; ++s) {
        for (const MultiIndex& b : multi_indices_of_degree(d, s)) betas.push_back(b);
    }
    std::vector<Rational> orbit(betas.size());
    parallel_for(betas.size(), [&](std::size_t i) {
        const MultiIndex& beta = betas[i];
        const int k = n + beta.degree();
        const Jet f = Jet::monomial(d, std::min(2 * beta.degree(), order), beta.doubled(), Rational(1));
        orbit[i] = laplacian_power_at_origin(op, f, k, order);
    });

    Rational total(0);
    std::size_t index = 0;
    for (int s = 0; s <= 3 * n; ++s) {
        const int k = n + s;
        for (const MultiIndex& beta : multi_indices_of_degree(d, s)) {
            const Rational& value = orbit[index++];
            if (value.is_zero()) continue;
            Rational weight(0);
            for (int m = k; m <= 4 * n; ++m) {
                const int u = m - k;
                Rational alpha_sum(0);
                for_each_multi_index(d, u, [&](const MultiIndex& alpha) {
                    mpz_class num(1), den(1);
                    for (int i = 0; i < d; ++i) {
                        const auto a = static_cast<unsigned long>(alpha[i]);
                        const auto b = static_cast<unsigned long>(beta[i]);
                        num *= factorial(2 * a + 2 * b);
                        den *= factorial(a) * factorial(a + b) * factorial(2 * b);
                    }
                    alpha_sum += Rational(std::move(num), std::move(den));
                });
                mpz_class pow2;
                mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(2 * m - 2 * n));
                weight += alpha_sum / Rational(factorial(static_cast<unsigned long>(k)) * pow2);
            }
            total += weight * value;
        }
    }
    if (n % 2 != 0) total = -total;
    return HeatInvariantResult{n, d, total, HeatInvariantForm::multiindex, order};
}

/// The single-sum form: abar_n = (-1)^n sum_{j=0}^{3n}
/// binom(3n+d/2, j+d/2) Delta^{j+n}(|x|^{2j})|_0 / (4^j j! (j+n)!), with the
/// binomial reduced through binom(3n+d/2, j+d/2) = binom(3n+d/2, 3n-j).
/// Geometric meaning requires normal coordinates, where the squared distance
/// function is |x|^2.
inline HeatInvariantResult a_n_binomial_form(const MetricJet& g, int n,
                                             std::optional<int> order_override = {}) {
    const int order = detail::resolve_order(g, n, order_override);
    const int d = g.dimension();
    const LaplaceOperator op = build_laplacian(g.order() == order ? g : g.truncated(order));

    std::vector<Rational> orbit(static_cast<std::size_t>(3 * n + 1));
    parallel_for(orbit.size(), [&](std::size_t ji) {
        const int j = static_cast<int>(ji);
        const Jet f = radius_squared_power(d, std::min(2 * j, order), j);
        orbit[ji] = laplacian_power_at_origin(op, f, j + n, order);
    });

    Rational total(0);
    for (int j = 0; j <= 3 * n; ++j) {
        const Rational& value = orbit[static_cast<std::size_t>(j)];
        if (value.is_zero()) continue;
        const Rational binom = binomial_symmetric(HalfInteger::halves(6L * n + d),
                                                  HalfInteger::halves(2L * j + d));
        mpz_class pow4;
        mpz_ui_pow_ui(pow4.get_mpz_t(), 4, static_cast<unsigned long>(j));
        const Rational denom(pow4 * factorial(static_cast<unsigned long>(j)) *
                             factorial(static_cast<unsigned long>(j + n)));
        total += binom * value / denom;
    }
    if (n % 2 != 0) total = -total;
    return HeatInvariantResult{n, d, total, HeatInvariantForm::binomial, order};
}

/// True iff both forms produce identical rationals on this input.
inline bool cross_check(const MetricJet& g, int n, std::optional<int> order_override = {}) {
    return a_n_multiindex_form(g, n, order_override).normalized_value ==
           a_n_binomial_form(g, n, order_override).normalized_value;
}

}  // namespace heatjet
