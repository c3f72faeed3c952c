#include <tatek/json_io.hpp>

#include <limits>

namespace tatek {

Json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
    return v.str();
}

Json vec_to_json(const IntVec& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
    return out;
}

IntMat mat_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw NotPositive("matrix must be a nonempty JSON array of rows");
    Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
    IntMat m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        if (static_cast<Eigen::Index>(j[i].size()) != cols)
            throw NotPositive("ragged matrix rows");
        for (Eigen::Index k = 0; k < cols; ++k)
            m(i, k) = j[i][k].get<i64>();
    }
    return m;
}

Json qseries_to_json(const QSeries& a) {
    Json out;
    out["min_exp"] = a.min_exp();
    Json coeffs = Json::array();
    for (const Int& c : a.coeffs()) coeffs.push_back(int_to_json(c));
    out["coeffs"] = coeffs;
    out["trunc_order"] = a.trunc_order();
    return out;
}

Json weighted_to_json(const WeightedQSeries& a) {
    Json out;
    out["trunc_order"] = a.trunc_order();
    Json terms = Json::array();
    for (const auto& [n, layer] : a.layers())
        for (const auto& [w, c] : layer) {
            Json t;
            t["q"] = n;
            t["weight"] = vec_to_json(w);
            t["coeff"] = int_to_json(c);
            terms.push_back(t);
        }
    out["terms"] = terms;
    return out;
}

Json orbits_to_json(const std::string& group, i64 level,
                    const std::vector<AffineOrbitRep>& orbits) {
    Json out;
    out["group"] = group;
    out["level"] = level;
    Json arr = Json::array();
    for (const AffineOrbitRep& r : orbits) {
        Json o;
        o["rep"] = vec_to_json(r.rep);
        o["stabilizer_order"] = r.stabilizer_order;
        o["regular"] = r.regular;
        arr.push_back(o);
    }
    out["orbits"] = arr;
    return out;
}

Json character_to_json(const std::string& group, const KacCharacter& ch, i64 order) {
    Json out;
    out["group"] = group;
    out["level"] = ch.level;
    out["highest_weight"] = vec_to_json(ch.lambda);
    out["order"] = order;
    Json layers = Json::array();
    for (const auto& [n, layer] : ch.ch.layers()) {
        Json l;
        l["q"] = n;
        Json weights = Json::array();
        for (const auto& [w, c] : layer) {
            Json entry;
            entry["weight"] = vec_to_json(w);
            entry["mult"] = int_to_json(c);
            weights.push_back(entry);
        }
        l["weights"] = weights;
        layers.push_back(l);
    }
    out["layers"] = layers;
    return out;
}

}  // namespace tatek
