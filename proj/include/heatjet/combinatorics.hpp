#pragma once

#include <gmpxx.h>

#include <stdexcept>

#include "heatjet/half_integer.hpp"
#include "heatjet/jet.hpp"
#include "heatjet/multi_index.hpp"
#include "heatjet/rational.hpp"

namespace heatjet {

inline mpz_class factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

/// Integer binomial with binom(n, k) = 0 for k > n or negative arguments.
inline mpz_class binomial_int(long n, long k) {
    if (k < 0 || n < 0 || k > n) return mpz_class(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

/// Generalized binomial binom(z, a) = z(z-1)...(z-a+1)/a! for half-integer z
/// and integer a >= 0; binom(z, 0) = 1.
inline Rational binomial_general(const HalfInteger& z, unsigned long a) {
    mpz_class num(1), den(1);
    for (unsigned long i = 0; i < a; ++i) {
        num *= z.twice() - 2 * mpz_class(i);  // 2(z - i)
        den *= 2 * (mpz_class(i) + 1);        // 2(i + 1)
    }
    return Rational(std::move(num), std::move(den));
}

/// binom(z, a) reduced through the symmetry binom(z, a) = binom(z, z-a).
/// At least one of a and z-a must be a nonnegative integer; anything else
/// signals a caller bug and is rejected.
inline Rational binomial_symmetric(const HalfInteger& z, const HalfInteger& a) {
    if (a.is_nonnegative_integer()) {
        return binomial_general(z, a.to_nonnegative_ulong());
    }
    const HalfInteger complement = z - a;
    if (complement.is_nonnegative_integer()) {
        return binomial_general(z, complement.to_nonnegative_ulong());
    }
    throw std::domain_error("binomial_symmetric: neither " + a.to_string() + " nor " +
                            (z - a).to_string() + " is a nonnegative integer");
}

/// Gamma(k + 1/2) with the universal sqrt(pi) factored out: (2k)!/(4^k k!).
inline Rational gamma_half_rational(unsigned long k) {
    mpz_class num = factorial(2 * k);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 4, k);
    den *= factorial(k);
    return Rational(std::move(num), std::move(den));
}

/// Literal convolution sum_{a=0}^{u} binom(z+a, a) binom(w+u-a, u-a).
inline Rational half_vandermonde_sum(const HalfInteger& z, const HalfInteger& w, unsigned long u) {
    Rational total(0);
    for (unsigned long a = 0; a <= u; ++a) {
        total += binomial_general(z + static_cast<long>(a), a) *
                 binomial_general(w + static_cast<long>(u - a), u - a);
    }
    return total;
}

/// Closed form of the convolution: binom(z+w+u+1, z+w+1) = binom(z+w+u+1, u).
inline Rational half_vandermonde_closed_form(const HalfInteger& z, const HalfInteger& w,
                                             unsigned long u) {
    const HalfInteger top = z + w + static_cast<long>(u) + 1;
    return binomial_symmetric(top, HalfInteger(static_cast<long>(u)));
}

/// Literal enumeration of sum_{|alpha|=u} (2a+2b)! b! / (a! (a+b)! (2b)!)
/// over multi-indices alpha of the dimension of beta.
inline Rational half_binomial_convolution_sum(const MultiIndex& beta, unsigned long u) {
    Rational total(0);
    for_each_multi_index(beta.dimension(), static_cast<int>(u), [&](const MultiIndex& alpha) {
        mpz_class num(1), den(1);
        for (int i = 0; i < beta.dimension(); ++i) {
            const unsigned long a = static_cast<unsigned long>(alpha[i]);
            const unsigned long b = static_cast<unsigned long>(beta[i]);
            num *= factorial(2 * a + 2 * b) * factorial(b);
            den *= factorial(a) * factorial(a + b) * factorial(2 * b);
        }
        total += Rational(std::move(num), std::move(den));
    });
    return total;
}

/// Closed form 4^u binom(u+v-1+d/2, u), where v = |beta|.
inline Rational half_binomial_convolution_closed_form(unsigned long v, unsigned long u, int d) {
    if (d < 1) throw std::invalid_argument("half_binomial_convolution_closed_form: d must be >= 1");
    const HalfInteger top = HalfInteger::halves(
        2 * (static_cast<long>(u) + static_cast<long>(v) - 1) + d);
    mpz_class four_u;
    mpz_ui_pow_ui(four_u.get_mpz_t(), 4, u);
    return Rational(four_u) * binomial_general(top, u);
}

/// Verifies, by exact expansion, that sum_{|beta|=m} x^{2beta}/beta! equals
/// (x_1^2+...+x_d^2)^m / m! as truncated polynomials. The right-hand side is
/// expanded by repeated ring multiplication, so the comparison is not
/// circular with the multinomial fill used by radius_squared_power.
inline bool multinomial_check(unsigned long m, int d) {
    const int order = 2 * static_cast<int>(m);
    Jet lhs(d, order);
    for_each_multi_index(d, static_cast<int>(m), [&](const MultiIndex& beta) {
        lhs += Jet::monomial(d, order, beta.doubled(),
                             Rational(mpz_class(1), beta.factorial_product()));
    });
    Jet r2(d, order);
    for (int i = 0; i < d; ++i) {
        r2 += Jet::monomial(d, order, MultiIndex::unit(d, i) + MultiIndex::unit(d, i), Rational(1));
    }
    Jet rhs = Jet::constant(d, order, Rational(1));
    for (unsigned long t = 0; t < m; ++t) rhs = rhs * r2;
    rhs = rhs.scaled(Rational(mpz_class(1), factorial(m)));
    return lhs == rhs;
}

}  // namespace heatjet
