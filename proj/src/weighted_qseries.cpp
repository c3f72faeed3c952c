#include <tatek/weighted_qseries.hpp>

#include <algorithm>

namespace tatek {

void WeightedQSeries::add_term(i64 n, const Weight& w, const Int& c) {
    if (n > trunc_order_ || c == 0) return;
    Layer& layer = layers_[n];
    Int& slot = layer[w];
    slot += c;
    if (slot == 0) {
        layer.erase(w);
        if (layer.empty()) layers_.erase(n);
    }
}

Int WeightedQSeries::coeff(i64 n, const Weight& w) const {
    if (n > trunc_order_)
        throw BeyondTruncation("coefficient of q^" + std::to_string(n));
    auto it = layers_.find(n);
    if (it == layers_.end()) return 0;
    auto jt = it->second.find(w);
    return jt == it->second.end() ? Int(0) : jt->second;
}

std::size_t WeightedQSeries::term_count() const {
    std::size_t k = 0;
    for (const auto& [n, layer] : layers_) k += layer.size();
    return k;
}

WeightedQSeries wq_add(const WeightedQSeries& a, const WeightedQSeries& b) {
    WeightedQSeries out(std::min(a.trunc_order(), b.trunc_order()));
    for (const auto& [n, layer] : a.layers())
        for (const auto& [w, c] : layer) out.add_term(n, w, c);
    for (const auto& [n, layer] : b.layers())
        for (const auto& [w, c] : layer) out.add_term(n, w, c);
    return out;
}

WeightedQSeries wq_scale(const WeightedQSeries& a, const Int& c) {
    WeightedQSeries out(a.trunc_order());
    for (const auto& [n, layer] : a.layers())
        for (const auto& [w, coef] : layer) out.add_term(n, w, coef * c);
    return out;
}

WeightedQSeries wq_mul(const WeightedQSeries& a, const WeightedQSeries& b) {
    i64 trunc = std::min(a.trunc_order() + b.min_n(), b.trunc_order() + a.min_n());
    WeightedQSeries out(trunc);
    for (const auto& [na, la] : a.layers())
        for (const auto& [nb, lb] : b.layers()) {
            if (na + nb > trunc) break;
            for (const auto& [wa, ca] : la)
                for (const auto& [wb, cb] : lb)
                    out.add_term(na + nb, IntVec(wa + wb), ca * cb);
        }
    return out;
}

WeightedQSeries wq_map_weights(const WeightedQSeries& a, const IntMat& m) {
    WeightedQSeries out(a.trunc_order());
    for (const auto& [n, layer] : a.layers())
        for (const auto& [w, c] : layer) out.add_term(n, IntVec(m * w), c);
    return out;
}

bool wq_equal_up_to(const WeightedQSeries& a, const WeightedQSeries& b, i64 order) {
    if (order > a.trunc_order() || order > b.trunc_order())
        throw BeyondTruncation("comparison window exceeds a truncation order");
    auto within = [order](const WeightedQSeries& s, const WeightedQSeries& t) {
        for (const auto& [n, layer] : s.layers()) {
            if (n > order) break;
            for (const auto& [w, c] : layer)
                if (t.coeff(n, w) != c) return false;
        }
        return true;
    };
    return within(a, b) && within(b, a);
}

}  // namespace tatek
