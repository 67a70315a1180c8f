#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace heatjet {

/// Heat trace of the unit round 2-sphere, sum_{k>=0} (2k+1) exp(-t k(k+1)),
/// summed to k_max in extended precision. The only floating-point code in
/// the library, kept as an independent numeric oracle.
inline double sphere_heat_trace(double t, int k_max) {
    long double sum = 0.0L;
    for (int k = k_max; k >= 0; --k) {  // small terms first
        const long double lam = static_cast<long double>(k) * (k + 1);
        sum += (2.0L * k + 1.0L) * std::exp(-static_cast<long double>(t) * lam);
    }
    return static_cast<double>(sum);
}

/// Default geometric grid used by the CLI and the acceptance suite.
inline std::vector<double> sphere_trace_default_grid() {
    std::vector<double> t(8);
    const double t_min = 0.005, t_max = 0.05;
    for (std::size_t i = 0; i < t.size(); ++i) {
        t[i] = t_min * std::pow(t_max / t_min, static_cast<double>(i) / (t.size() - 1));
    }
    return t;
}

/// Weighted least-squares fit of the trace against
///   a_0/t + a_1 + a_2 t + ... ,
/// returning a_0..a_{n_max}. Two guard powers beyond n_max absorb the
/// truncated tail of the expansion; weights t_i damp the 1/t rows
/// (Richardson-style). Requires every t <= 0.05 and k_max large enough that
/// exp(-t_min k_max^2) < 1e-15. Throws on an ill-conditioned system, with
/// the condition estimate in the message.
inline std::vector<double> sphere_trace_fit(int n_max, const std::vector<double>& t_list,
                                            int k_max) {
    if (n_max < 0) throw std::invalid_argument("sphere_trace_fit: n_max must be >= 0");
    const std::size_t basis = static_cast<std::size_t>(n_max) + 3;  // guard terms
    if (t_list.size() < basis) {
        throw std::invalid_argument("sphere_trace_fit: need at least " + std::to_string(basis) +
                                    " t values");
    }
    double t_min = t_list.front();
    for (double t : t_list) {
        if (!(t > 0.0) || t > 0.05) {
            throw std::invalid_argument("sphere_trace_fit: t values must lie in (0, 0.05]");
        }
        t_min = std::min(t_min, t);
    }
    if (!(std::exp(-t_min * static_cast<double>(k_max) * k_max) < 1e-15)) {
        throw std::invalid_argument("sphere_trace_fit: k_max too small for the smallest t");
    }

    const std::size_t rows = t_list.size();
    std::vector<std::vector<long double>> a(rows, std::vector<long double>(basis, 0.0L));
    std::vector<long double> rhs(rows, 0.0L);
    for (std::size_t r = 0; r < rows; ++r) {
        const long double t = t_list[r];
        const long double w = t;  // damp the 1/t row
        long double p = 1.0L / t;
        for (std::size_t c = 0; c < basis; ++c) {
            a[r][c] = w * p;
            p *= t;
        }
        rhs[r] = w * sphere_heat_trace(t_list[r], k_max);
    }

    // Householder QR in long double; the system is tiny (<= ~10 x 5).
    for (std::size_t c = 0; c < basis; ++c) {
        long double norm = 0.0L;
        for (std::size_t r = c; r < rows; ++r) norm += a[r][c] * a[r][c];
        norm = std::sqrt(norm);
        if (a[c][c] > 0) norm = -norm;
        const long double v0 = a[c][c] - norm;
        std::vector<long double> v(rows, 0.0L);
        v[c] = v0;
        for (std::size_t r = c + 1; r < rows; ++r) v[r] = a[r][c];
        long double vnorm2 = 0.0L;
        for (std::size_t r = c; r < rows; ++r) vnorm2 += v[r] * v[r];
        if (vnorm2 > 0.0L) {
            for (std::size_t cc = c; cc < basis; ++cc) {
                long double dot = 0.0L;
                for (std::size_t r = c; r < rows; ++r) dot += v[r] * a[r][cc];
                const long double f = 2.0L * dot / vnorm2;
                for (std::size_t r = c; r < rows; ++r) a[r][cc] -= f * v[r];
            }
            long double dot = 0.0L;
            for (std::size_t r = c; r < rows; ++r) dot += v[r] * rhs[r];
            const long double f = 2.0L * dot / vnorm2;
            for (std::size_t r = c; r < rows; ++r) rhs[r] -= f * v[r];
        }
    }
    long double diag_max = 0.0L, diag_min = 0.0L;
    for (std::size_t c = 0; c < basis; ++c) {
        const long double m = std::fabs(a[c][c]);
        diag_max = std::max(diag_max, m);
        diag_min = (c == 0) ? m : std::min(diag_min, m);
    }
    if (!(diag_min > 0.0L) || diag_max / diag_min > 1e12L) {
        throw std::runtime_error("sphere_trace_fit: ill-conditioned fit, condition estimate " +
                                 std::to_string(static_cast<double>(
                                     diag_min > 0.0L ? diag_max / diag_min : INFINITY)));
    }
    std::vector<long double> x(basis, 0.0L);
    for (std::size_t c = basis; c-- > 0;) {
        long double s = rhs[c];
        for (std::size_t cc = c + 1; cc < basis; ++cc) s -= a[c][cc] * x[cc];
        x[c] = s / a[c][c];
    }
    std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<double>(x[i]);
    return out;
}

}  // namespace heatjet
