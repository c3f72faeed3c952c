#include <tatek/qseries.hpp>

#include <algorithm>
#include <sstream>

namespace tatek {

namespace {

// Effective lowest known exponent: trunc_order + 1 for the zero series.
i64 eff_min_exp(const QSeries& a) { return a.min_exp(); }

}  // namespace

QSeries::QSeries(i64 min_exp, std::vector<Int> coeffs, i64 trunc_order)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)), trunc_order_(trunc_order) {
    // drop stored coefficients beyond the truncation order
    if (!coeffs_.empty()) {
        i64 top = min_exp_ + static_cast<i64>(coeffs_.size()) - 1;
        if (top > trunc_order_)
            coeffs_.resize(static_cast<std::size_t>(
                std::max<i64>(0, trunc_order_ - min_exp_ + 1)));
    }
    // canonical form: nonzero leading and trailing stored coefficient
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        min_exp_ = trunc_order_ + 1;
        return;
    }
    std::size_t last = coeffs_.size();
    while (last > lead && coeffs_[last - 1] == 0) --last;
    coeffs_ = std::vector<Int>(coeffs_.begin() + static_cast<std::ptrdiff_t>(lead),
                               coeffs_.begin() + static_cast<std::ptrdiff_t>(last));
    min_exp_ += static_cast<i64>(lead);
}

QSeries QSeries::monomial(const Int& c, i64 exp, i64 trunc_order) {
    return QSeries(exp, {c}, trunc_order);
}

Int QSeries::coeff(i64 n) const {
    if (n > trunc_order_) throw BeyondTruncation("coefficient of q^" + std::to_string(n));
    if (n < min_exp_ || n >= min_exp_ + static_cast<i64>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(n - min_exp_)];
}

QSeries qs_add(const QSeries& a, const QSeries& b) {
    i64 trunc = std::min(a.trunc_order(), b.trunc_order());
    i64 lo = std::min(eff_min_exp(a), eff_min_exp(b));
    if (lo > trunc) return QSeries(trunc);
    std::vector<Int> c(static_cast<std::size_t>(trunc - lo + 1));
    auto acc = [&](const QSeries& s) {
        for (i64 n = s.min_exp();
             n < s.min_exp() + static_cast<i64>(s.coeffs().size()) && n <= trunc; ++n)
            c[static_cast<std::size_t>(n - lo)] += s.coeffs()[static_cast<std::size_t>(n - s.min_exp())];
    };
    acc(a);
    acc(b);
    return QSeries(lo, std::move(c), trunc);
}

QSeries qs_neg(const QSeries& a) {
    std::vector<Int> c(a.coeffs());
    for (auto& x : c) x = -x;
    return QSeries(a.min_exp(), std::move(c), a.trunc_order());
}

QSeries qs_sub(const QSeries& a, const QSeries& b) { return qs_add(a, qs_neg(b)); }

QSeries qs_mul(const QSeries& a, const QSeries& b) {
    // known range of a Cauchy product: each operand's truncation shifted by
    // the other's lowest exponent
    i64 trunc = std::min(a.trunc_order() + eff_min_exp(b),
                         b.trunc_order() + eff_min_exp(a));
    if (a.is_zero() || b.is_zero()) return QSeries(trunc);
    i64 lo = a.min_exp() + b.min_exp();
    if (lo > trunc) return QSeries(trunc);
    std::vector<Int> c(static_cast<std::size_t>(trunc - lo + 1));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            i64 n = a.min_exp() + static_cast<i64>(i) + b.min_exp() + static_cast<i64>(j);
            if (n > trunc) break;
            c[static_cast<std::size_t>(n - lo)] += a.coeffs()[i] * b.coeffs()[j];
        }
    }
    return QSeries(lo, std::move(c), trunc);
}

QSeries qs_invert(const QSeries& a) {
    Int lead = a.leading_coeff();
    if (lead != 1 && lead != -1)
        throw NonUnitLeadingCoefficient("leading coefficient " + lead.str());
    i64 m = a.min_exp();
    // a = q^m (a0 + a1 q + ...); invert the unit power series, shift by -m
    std::size_t ncoef = a.coeffs().size();
    std::size_t nout = static_cast<std::size_t>(a.trunc_order() - m + 1);
    std::vector<Int> c(nout);
    c[0] = lead;  // 1/a0 = a0 for a0 = +-1
    for (std::size_t n = 1; n < nout; ++n) {
        Int s = 0;
        for (std::size_t j = 1; j <= n && j < ncoef; ++j) s += a.coeffs()[j] * c[n - j];
        c[n] = -lead * s;
    }
    return QSeries(-m, std::move(c), a.trunc_order() - 2 * m);
}

std::string to_string(const QSeries& a) {
    if (a.is_zero()) return "0 (+O(q^" + std::to_string(a.trunc_order() + 1) + "))";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const Int& c = a.coeffs()[i];
        if (c == 0) continue;
        i64 n = a.min_exp() + static_cast<i64>(i);
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Int ac = abs(c);
        if (ac != 1 || n == 0) os << ac.str();
        if (n != 0) os << (ac != 1 ? "*q^" : "q^") << n;
    }
    os << " + O(q^" << a.trunc_order() + 1 << ")";
    return os.str();
}

}  // namespace tatek
