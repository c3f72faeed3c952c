#pragma once

#include <tatek/qseries.hpp>
#include <tatek/root_data.hpp>

#include <map>

namespace tatek {

/// A Lambda-graded truncated q-series: integer coefficients indexed by
/// (q-exponent, weight), with everything above trunc_order unknown.
class WeightedQSeries {
public:
    using Layer = std::map<IntVec, Int, LexLess>;

    explicit WeightedQSeries(i64 trunc_order) : trunc_order_(trunc_order) {}

    i64 trunc_order() const { return trunc_order_; }
    const std::map<i64, Layer>& layers() const { return layers_; }
    bool is_zero() const { return layers_.empty(); }

    /// Lowest stored q-exponent; trunc_order + 1 when zero.
    i64 min_n() const {
        return layers_.empty() ? trunc_order_ + 1 : layers_.begin()->first;
    }

    /// Adds c at (n, w); silently drops exponents beyond the truncation,
    /// keeps the zero-free canonical form.
    void add_term(i64 n, const Weight& w, const Int& c);

    /// Coefficient at (n, w). Throws BeyondTruncation for n > trunc_order.
    Int coeff(i64 n, const Weight& w) const;

    std::size_t term_count() const;

private:
    i64 trunc_order_;
    std::map<i64, Layer> layers_;
};

WeightedQSeries wq_add(const WeightedQSeries& a, const WeightedQSeries& b);
WeightedQSeries wq_scale(const WeightedQSeries& a, const Int& c);

/// Cauchy product; result truncation is the window on which the product of
/// two truncated series is fully determined.
WeightedQSeries wq_mul(const WeightedQSeries& a, const WeightedQSeries& b);

/// Applies an integer matrix to every weight (e.g. a Weyl element).
WeightedQSeries wq_map_weights(const WeightedQSeries& a, const IntMat& m);

/// Equality of all coefficients with q-exponent <= order.
bool wq_equal_up_to(const WeightedQSeries& a, const WeightedQSeries& b, i64 order);

}  // namespace tatek
