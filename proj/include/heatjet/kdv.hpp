#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "heatjet/combinatorics.hpp"
#include "heatjet/diff_polynomial.hpp"
#include "heatjet/x_series.hpp"

namespace heatjet {

/// L^{j+n}(x^{2j})|_{x=0} with U_i(0) replaced by the formal variable U_i,
/// for 0 <= j <= n. Variable indices never exceed 2n+2j-2 (asserted).
inline DiffPolynomial schrodinger_power_at_origin(int n, int j) {
    if (n < 1) throw std::invalid_argument("schrodinger_power_at_origin: n must be >= 1");
    if (j < 0 || j > n) throw std::invalid_argument("schrodinger_power_at_origin: j out of range");
    XSeries f = XSeries::x_power(2 * j);
    for (int t = 0; t < j + n; ++t) f = schrodinger_apply(f);
    DiffPolynomial p = f.coefficient(0);
    if (p.max_variable_index() > 2 * n + 2 * j - 2) {
        throw std::logic_error("schrodinger_power_at_origin: variable index exceeds 2n+2j-2");
    }
    return p;
}

/// Hierarchy polynomial G_n[U] by the operator route:
///   G_n = (2n)!/(2 n!) sum_{j=0}^{n} binom(n+1/2, j+1/2)
///         (-1)^j / (4^j j! (j+n)!) * L^{j+n}(x^{2j})|_0,
/// with the binomial reduced through binom(n+1/2, j+1/2) = binom(n+1/2, n-j).
inline DiffPolynomial kdv_polynomial_operator(int n) {
    if (n < 1) throw std::invalid_argument("kdv_polynomial_operator: n must be >= 1");
    DiffPolynomial total;
    for (int j = 0; j <= n; ++j) {
        const Rational binom = binomial_symmetric(HalfInteger::halves(2L * n + 1),
                                                  HalfInteger::halves(2L * j + 1));
        mpz_class pow4;
        mpz_ui_pow_ui(pow4.get_mpz_t(), 4, static_cast<unsigned long>(j));
        Rational c = binom / Rational(pow4 * factorial(static_cast<unsigned long>(j)) *
                                      factorial(static_cast<unsigned long>(j + n)));
        if (j % 2 != 0) c = -c;
        total += schrodinger_power_at_origin(n, j).scaled(c);
    }
    const Rational prefactor(factorial(static_cast<unsigned long>(2 * n)),
                             2 * factorial(static_cast<unsigned long>(n)));
    return total.scaled(prefactor);
}

/// Chain-sum coefficient C_{k_1,...,k_p} of the fully expanded hierarchy:
/// the sum over chains 0 <= l_0 <= ... <= l_{p-1} <= j+n-p satisfying
/// 2 l_i >= k_1+...+k_{i+1} of
///   binom(2 l_0, k_1) binom(2 l_1 - k_1, k_2) ...
///   binom(2 l_{p-1} - k_1 - ... - k_{p-1}, k_p).
/// Chains that cannot satisfy a constraint contribute nothing; an empty sum
/// is 0. Requires k_1+...+k_p = 2(n-p) and j+n-p >= 0.
inline Rational composition_chain_coefficient(const std::vector<int>& ks, int j, int n) {
    const int p = static_cast<int>(ks.size());
    if (p < 1) throw std::invalid_argument("composition_chain_coefficient: p must be >= 1");
    for (int k : ks) {
        if (k < 0) throw std::invalid_argument("composition_chain_coefficient: negative k");
    }
    const int ksum = std::accumulate(ks.begin(), ks.end(), 0);
    if (ksum != 2 * (n - p)) {
        throw std::invalid_argument("composition_chain_coefficient: k_1+...+k_p != 2(n-p)");
    }
    const int l_max = j + n - p;
    if (l_max < 0) throw std::invalid_argument("composition_chain_coefficient: j+n-p < 0");

    mpz_class total(0);
    // DFS over nondecreasing chains; the running prefix k_1+...+k_i prunes.
    std::vector<int> prefix(static_cast<std::size_t>(p) + 1, 0);
    for (int i = 0; i < p; ++i) prefix[static_cast<std::size_t>(i) + 1] = prefix[static_cast<std::size_t>(i)] + ks[static_cast<std::size_t>(i)];
    const std::function<void(int, int, mpz_class)> dfs = [&](int i, int l_prev, mpz_class product) {
        if (i == p) {
            total += product;
            return;
        }
        for (int li = l_prev; li <= l_max; ++li) {
            if (2 * li < prefix[static_cast<std::size_t>(i) + 1]) continue;
            const mpz_class b =
                binomial_int(2L * li - prefix[static_cast<std::size_t>(i)], ks[static_cast<std::size_t>(i)]);
            if (b == 0) continue;
            dfs(i + 1, li, mpz_class(product * b));
        }
    };
    dfs(0, 0, mpz_class(1));
    return Rational(total);
}

/// Hierarchy polynomial G_n[U] fully expanded:
///   G_n = (2n)!/(2 n!) sum_{j=0}^{n} binom(n+1/2, j+1/2)
///         (-1)^j (2j)! / (4^j j! (j+n)!)
///         sum_{p=1}^{j+n} sum_{k_1+...+k_p=2(n-p)} C_{k_1,...,k_p} U_{k_1}...U_{k_p}.
/// Ordered compositions that sort to the same monomial merge canonically.
inline DiffPolynomial kdv_polynomial_expanded(int n) {
    if (n < 1) throw std::invalid_argument("kdv_polynomial_expanded: n must be >= 1");
    DiffPolynomial total;
    for (int j = 0; j <= n; ++j) {
        const Rational binom = binomial_symmetric(HalfInteger::halves(2L * n + 1),
                                                  HalfInteger::halves(2L * j + 1));
        mpz_class pow4;
        mpz_ui_pow_ui(pow4.get_mpz_t(), 4, static_cast<unsigned long>(j));
        Rational c = binom * Rational(factorial(static_cast<unsigned long>(2 * j))) /
                     Rational(pow4 * factorial(static_cast<unsigned long>(j)) *
                              factorial(static_cast<unsigned long>(j + n)));
        if (j % 2 != 0) c = -c;
        for (int p = 1; p <= j + n; ++p) {
            if (n - p < 0) break;  // the composition total 2(n-p) would be negative
            std::vector<int> ks(static_cast<std::size_t>(p), 0);
            const std::function<void(int, int)> compositions = [&](int pos, int remaining) {
                if (pos == p - 1) {
                    ks[static_cast<std::size_t>(pos)] = remaining;
                    const Rational chain = composition_chain_coefficient(ks, j, n);
                    if (!chain.is_zero()) {
                        total += DiffPolynomial::monomial(ks, chain * c);
                    }
                    return;
                }
                for (int v = 0; v <= remaining; ++v) {
                    ks[static_cast<std::size_t>(pos)] = v;
                    compositions(pos + 1, remaining - v);
                }
            };
            compositions(0, 2 * (n - p));
        }
    }
    const Rational prefactor(factorial(static_cast<unsigned long>(2 * n)),
                             2 * factorial(static_cast<unsigned long>(n)));
    return total.scaled(prefactor);
}

/// Heat coefficient h_n[U] of the 1-dimensional Schrodinger operator:
/// h_n = (2 n!/(2n)!) G_n.
inline DiffPolynomial schrodinger_heat_coefficient(int n) {
    const Rational scale(2 * factorial(static_cast<unsigned long>(n)),
                         factorial(static_cast<unsigned long>(2 * n)));
    return kdv_polynomial_operator(n).scaled(scale);
}

}  // namespace heatjet
