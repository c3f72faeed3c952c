#pragma once

#include <tatek/common.hpp>

#include <vector>

namespace tatek {

/// Truncated element of Z((q)) = Z[q^{-1}][[q]]. Coefficients at exponents
/// above trunc_order are unknown, not zero. Values are immutable once built.
class QSeries {
  public:
    /// Zero series at the given truncation order.
    explicit QSeries(i64 trunc_order = 0)
        : min_exp_(trunc_order + 1), trunc_order_(trunc_order) {}

    /// Series sum_i coeffs[i] q^{min_exp+i}, canonicalized.
    QSeries(i64 min_exp, std::vector<Int> coeffs, i64 trunc_order);

    static QSeries monomial(const Int& c, i64 exp, i64 trunc_order);
    static QSeries one(i64 trunc_order) { return monomial(1, 0, trunc_order); }

    i64 min_exp() const { return min_exp_; }
    i64 trunc_order() const { return trunc_order_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of q^n; throws BeyondTruncation for n > trunc_order.
    Int coeff(i64 n) const;

    /// Leading (lowest-exponent) coefficient; 0 for the zero series.
    Int leading_coeff() const { return coeffs_.empty() ? Int(0) : coeffs_.front(); }

    bool operator==(const QSeries& o) const {
        return min_exp_ == o.min_exp_ && trunc_order_ == o.trunc_order_ &&
               coeffs_ == o.coeffs_;
    }

  private:
    i64 min_exp_;
    std::vector<Int> coeffs_;
    i64 trunc_order_;
};

QSeries qs_add(const QSeries& a, const QSeries& b);
QSeries qs_sub(const QSeries& a, const QSeries& b);
QSeries qs_neg(const QSeries& a);
QSeries qs_mul(const QSeries& a, const QSeries& b);

/// Multiplicative inverse; requires leading coefficient +-1.
QSeries qs_invert(const QSeries& a);

inline Int qs_coeff(const QSeries& a, i64 n) { return a.coeff(n); }

inline QSeries operator+(const QSeries& a, const QSeries& b) { return qs_add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return qs_sub(a, b); }
inline QSeries operator-(const QSeries& a) { return qs_neg(a); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return qs_mul(a, b); }

std::string to_string(const QSeries& a);

}  // namespace tatek
