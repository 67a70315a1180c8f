#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "heatjet/jet.hpp"

namespace heatjet {

/// Symmetric d x d matrix of jets with g_ij(0) = delta_ij: the Taylor data of
/// a Riemannian metric at a point. Stored as the upper triangle. The
/// normal_form flag certifies the Gauss condition sum_j g_ij x_j = x_i up to
/// the stored order; it is verified at construction when set.
class MetricJet {
public:
    MetricJet(int dim, int order, std::vector<Jet> upper_entries, bool normal_form)
        : dim_(dim), order_(order), entries_(std::move(upper_entries)), normal_form_(normal_form) {
        if (dim_ < 1) throw std::invalid_argument("MetricJet: dimension must be >= 1");
        if (entries_.size() != static_cast<std::size_t>(dim_ * (dim_ + 1) / 2)) {
            throw std::invalid_argument("MetricJet: wrong number of upper-triangle entries");
        }
        for (const Jet& e : entries_) {
            if (e.dimension() != dim_ || e.order() != order_) {
                throw std::invalid_argument("MetricJet: entry dimension/order mismatch");
            }
        }
        for (int i = 0; i < dim_; ++i) {
            for (int j = i; j < dim_; ++j) {
                const Rational expected(i == j ? 1 : 0);
                if (entry(i, j).value_at_origin() != expected) {
                    throw std::invalid_argument("MetricJet: g(0) is not the identity");
                }
            }
        }
        if (normal_form_ && !gauss_condition_holds()) {
            throw std::invalid_argument(
                "MetricJet: normal_form flag set but the Gauss condition fails");
        }
    }

    static MetricJet identity(int dim, int order) {
        std::vector<Jet> entries;
        entries.reserve(static_cast<std::size_t>(dim * (dim + 1) / 2));
        for (int i = 0; i < dim; ++i) {
            for (int j = i; j < dim; ++j) {
                entries.push_back(Jet::constant(dim, order, Rational(i == j ? 1 : 0)));
            }
        }
        return MetricJet(dim, order, std::move(entries), true);
    }

    int dimension() const { return dim_; }
    int order() const { return order_; }
    bool normal_form() const { return normal_form_; }

    /// Symmetric access: entry(i, j) == entry(j, i).
    const Jet& entry(int i, int j) const {
        if (i < 0 || j < 0 || i >= dim_ || j >= dim_) {
            throw std::out_of_range("MetricJet: index out of range");
        }
        if (i > j) std::swap(i, j);
        return entries_[static_cast<std::size_t>(triangle_index(i, j))];
    }

    bool is_flat_table() const {
        for (int i = 0; i < dim_; ++i) {
            for (int j = i; j < dim_; ++j) {
                if (entry(i, j) != Jet::constant(dim_, order_, Rational(i == j ? 1 : 0))) return false;
            }
        }
        return true;
    }

    /// sum_j g_ij(x) x_j = x_i as exact truncated polynomials (checked one
    /// order above the metric order so no product term is lost).
    bool gauss_condition_holds() const {
        const int n1 = order_ + 1;
        for (int i = 0; i < dim_; ++i) {
            Jet sum(dim_, n1);
            for (int j = 0; j < dim_; ++j) {
                const Jet xj = Jet::monomial(dim_, n1, MultiIndex::unit(dim_, j), Rational(1));
                sum += entry(i, j).truncated(n1).multiplied_to_order(xj, n1);
            }
            if (sum != Jet::monomial(dim_, n1, MultiIndex::unit(dim_, i), Rational(1))) return false;
        }
        return true;
    }

    MetricJet truncated(int new_order) const {
        std::vector<Jet> entries;
        entries.reserve(entries_.size());
        for (const Jet& e : entries_) entries.push_back(e.truncated(new_order));
        return MetricJet(dim_, new_order, std::move(entries), normal_form_);
    }

    friend bool operator==(const MetricJet& a, const MetricJet& b) {
        return a.dim_ == b.dim_ && a.order_ == b.order_ && a.normal_form_ == b.normal_form_ &&
               a.entries_ == b.entries_;
    }

private:
    int triangle_index(int i, int j) const { return i * dim_ - i * (i - 1) / 2 + (j - i); }

    int dim_;
    int order_;
    std::vector<Jet> entries_;  // row-major upper triangle
    bool normal_form_;
};

}  // namespace heatjet
