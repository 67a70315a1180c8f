#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "heatjet/jet.hpp"
#include "heatjet/metric_jet.hpp"

namespace heatjet {

namespace detail {

/// Inverse and determinant of a jet matrix with unit constant part, by
/// Gauss-Jordan elimination over the jet ring. Every pivot keeps a unit
/// constant term, so its reciprocal exists at full order.
inline std::pair<std::vector<std::vector<Jet>>, Jet> invert_jet_matrix(const MetricJet& g) {
    const int d = g.dimension();
    const int n = g.order();
    std::vector<std::vector<Jet>> m(d, std::vector<Jet>(d, Jet::zero(d, n)));
    std::vector<std::vector<Jet>> inv(d, std::vector<Jet>(d, Jet::zero(d, n)));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) m[i][j] = g.entry(i, j);
        inv[i][i] = Jet::constant(d, n, Rational(1));
    }
    Jet det = Jet::constant(d, n, Rational(1));
    for (int c = 0; c < d; ++c) {
        det = det * m[c][c];
        const Jet pivot_inv = m[c][c].reciprocal();
        for (int j = 0; j < d; ++j) {
            m[c][j] = m[c][j] * pivot_inv;
            inv[c][j] = inv[c][j] * pivot_inv;
        }
        for (int r = 0; r < d; ++r) {
            if (r == c) continue;
            const Jet f = m[r][c];
            if (f.is_zero()) continue;
            for (int j = 0; j < d; ++j) {
                m[r][j] -= f * m[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return {std::move(inv), std::move(det)};
}

}  // namespace detail

/// The Laplace-Beltrami operator in expanded non-divergence form,
/// f -> sum_ij A^ij d_i d_j f + sum_i B^i d_i f, with A^ij(0) = -delta_ij.
/// Built once from a metric; applying powers dominates runtime, so the
/// divergence form is not re-derived per application.
class LaplaceOperator {
public:
    LaplaceOperator(int dim, int order, std::vector<Jet> second_upper, std::vector<Jet> first)
        : dim_(dim), order_(order), a_(std::move(second_upper)), b_(std::move(first)) {
        if (a_.size() != static_cast<std::size_t>(dim_ * (dim_ + 1) / 2) ||
            b_.size() != static_cast<std::size_t>(dim_)) {
            throw std::invalid_argument("LaplaceOperator: wrong component count");
        }
        for (int i = 0; i < dim_; ++i) {
            for (int j = i; j < dim_; ++j) {
                if (second_order(i, j).value_at_origin() != Rational(i == j ? -1 : 0)) {
                    throw std::invalid_argument(
                        "LaplaceOperator: frozen principal part is not the flat Laplacian");
                }
            }
        }
    }

    int dimension() const { return dim_; }
    int order() const { return order_; }

    /// A^ij (symmetric access).
    const Jet& second_order(int i, int j) const {
        if (i > j) std::swap(i, j);
        return a_[static_cast<std::size_t>(i * dim_ - i * (i - 1) / 2 + (j - i))];
    }

    /// B^i.
    const Jet& first_order(int i) const { return b_[static_cast<std::size_t>(i)]; }

private:
    int dim_;
    int order_;
    std::vector<Jet> a_;  // upper triangle of A^ij
    std::vector<Jet> b_;
};

/// Builds the operator of a metric jet:
///   A^ij = -g^ij,  B^i = -(1/sqrt(g)) sum_j d_j(sqrt(g) g^ij),
/// the expanded form of -g^{-1/2} d_j (sqrt(g) g^ij d_i f). The sign makes
/// the flat operator -sum d^2/dx_i^2 (positive spectrum convention).
inline LaplaceOperator build_laplacian(const MetricJet& g) {
    const int d = g.dimension();
    const int n = g.order();
    auto [inv, det] = detail::invert_jet_matrix(g);
    const Jet inv_sqrt_det = det.inverse_sqrt();       // 1/sqrt(g); det(0) = 1
    const Jet sqrt_det = det * inv_sqrt_det;           // sqrt(g)

    std::vector<Jet> second;
    second.reserve(static_cast<std::size_t>(d * (d + 1) / 2));
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j) second.push_back(-inv[i][j]);
    }
    std::vector<Jet> first;
    first.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        Jet s(d, n);
        for (int j = 0; j < d; ++j) s += (sqrt_det * inv[i][j]).partial_derivative(j);
        first.push_back(-(inv_sqrt_det * s));
    }
    return LaplaceOperator(d, n, std::move(second), std::move(first));
}

/// Applies the operator with the output truncated at out_order. The input
/// jet's own order only bounds its terms.
inline Jet apply(const LaplaceOperator& op, const Jet& f, int out_order) {
    if (f.dimension() != op.dimension()) throw std::invalid_argument("apply: dimension mismatch");
    const int d = op.dimension();
    Jet out(d, out_order);
    for (int i = 0; i < d; ++i) {
        const Jet di = f.partial_derivative(i);
        for (int j = i; j < d; ++j) {
            Jet dij = di.partial_derivative(j);
            if (dij.is_zero()) continue;
            Jet term = op.second_order(i, j).multiplied_to_order(dij, out_order);
            if (i != j) term = term.scaled(Rational(2));  // A symmetric, d_i d_j symmetric
            out += term;
        }
        if (!op.first_order(i).is_zero() && !di.is_zero()) {
            out += op.first_order(i).multiplied_to_order(di, out_order);
        }
    }
    return out;
}

/// Applies the operator at matching truncation order (shape-checked).
inline Jet apply(const LaplaceOperator& op, const Jet& f) {
    if (f.order() != op.order()) throw std::invalid_argument("apply: order mismatch");
    return apply(op, f, op.order());
}

/// k-fold application at the operator's order; k = 0 is the identity.
inline Jet apply_power(const LaplaceOperator& op, Jet f, int k) {
    if (k < 0) throw std::invalid_argument("apply_power: negative power");
    for (int t = 0; t < k; ++t) f = apply(op, f);
    return f;
}

/// Value at the origin of the k-th operator power, computed with a shrinking
/// truncation schedule: with r applications remaining, only terms of total
/// degree <= 2r can still reach degree zero (each application lowers a
/// monomial's degree by at most 2), so the working jet is truncated to 2r
/// before each step. Exact, and equal to evaluating apply_power at full order
/// whenever max_order covers the schedule.
inline Rational laplacian_power_at_origin(const LaplaceOperator& op, Jet f, int k,
                                          int max_order = 1 << 20) {
    if (k < 0) throw std::invalid_argument("laplacian_power_at_origin: negative power");
    for (int t = 0; t < k; ++t) {
        const int remaining = k - t;
        const int in_order = std::min({2 * remaining, f.order(), max_order});
        f = apply(op, f.truncated(in_order), std::min(2 * (remaining - 1), max_order));
    }
    return f.value_at_origin();
}

/// Scalar curvature at the origin from the Christoffel symbols of the metric
/// 2-jet; the sign convention gives tau = d(d-1) on the unit round sphere.
inline Rational scalar_curvature_at_origin(const MetricJet& g) {
    if (g.order() < 2) throw std::invalid_argument("scalar_curvature_at_origin: order must be >= 2");
    const int d = g.dimension();
    const int n = g.order();
    auto [inv, det] = detail::invert_jet_matrix(g);
    (void)det;
    // Gamma^k_ij = 1/2 g^{kl} (d_i g_jl + d_j g_il - d_l g_ij)
    std::vector<Jet> gamma(static_cast<std::size_t>(d * d * d), Jet::zero(d, n));
    auto at = [d](int k, int i, int j) { return static_cast<std::size_t>((k * d + i) * d + j); };
    for (int k = 0; k < d; ++k) {
        for (int i = 0; i < d; ++i) {
            for (int j = i; j < d; ++j) {
                Jet s(d, 2);  // only the 1-jet of Gamma matters below
                for (int l = 0; l < d; ++l) {
                    Jet t = g.entry(j, l).partial_derivative(i) + g.entry(i, l).partial_derivative(j) -
                            g.entry(i, j).partial_derivative(l);
                    s += inv[k][l].multiplied_to_order(t, 2);
                }
                gamma[at(k, i, j)] = s.scaled(Rational(1, 2));
                gamma[at(k, j, i)] = gamma[at(k, i, j)];
            }
        }
    }
    // tau = sum_{j} Ric_jj(0) with
    // Ric_jk = d_i Gamma^i_jk - d_j Gamma^i_ik + Gamma^i_ip Gamma^p_jk - Gamma^i_jp Gamma^p_ik.
    Rational tau(0);
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) {
            tau += gamma[at(i, j, j)].partial_derivative(i).value_at_origin();
            tau -= gamma[at(i, i, j)].partial_derivative(j).value_at_origin();
            for (int p = 0; p < d; ++p) {
                tau += gamma[at(i, i, p)].value_at_origin() * gamma[at(p, j, j)].value_at_origin();
                tau -= gamma[at(i, j, p)].value_at_origin() * gamma[at(p, i, j)].value_at_origin();
            }
        }
    }
    return tau;
}

}  // namespace heatjet
