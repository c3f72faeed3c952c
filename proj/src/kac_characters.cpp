#include <tatek/kac_characters.hpp>

#include <tatek/theta_torus.hpp>

#include <algorithm>

namespace tatek {

namespace {

// term order used for division: q-exponent ascending, then weight height
// descending, then lex descending
struct TermRef {
    i64 n;
    Weight w;
    Int c;
};

i64 height_of(const RootDatum& rd, const Weight& w) {
    return w.dot(rd.height_coweight);
}

bool term_found(const WeightedQSeries& s, const RootDatum& rd, TermRef& out) {
    if (s.is_zero()) return false;
    const auto& [n, layer] = *s.layers().begin();
    auto best = layer.begin();
    i64 best_h = height_of(rd, best->first);
    for (auto it = std::next(layer.begin()); it != layer.end(); ++it) {
        i64 h = height_of(rd, it->first);
        if (h > best_h || (h == best_h && LexLess{}(best->first, it->first))) {
            best = it;
            best_h = h;
        }
    }
    out = {n, best->first, best->second};
    return true;
}

}  // namespace

WeightedQSeries affine_numerator(const RootDatum& rd, const Weight& mu, i64 m, i64 order) {
    if (m < rd.h_dual) throw LevelTooSmall("level below h_dual");
    Twisting tw = level_twisting(rd, m);
    if (stabilizer_order(tw, mu) != 1) throw NotRegular();
    WeightedQSeries out(order);
    for (const WeylElement& w : weyl_elements(rd)) {
        Weight nu = w.on_weights * mu;
        for (const Coweight& p : translation_points(tw.form, nu, order)) {
            LambdaTauPoint x = pi1_act(tw, p, {nu, 0});
            out.add_term(x.n, x.lambda, Int(w.sign));
        }
    }
    return out;
}

KacCharacter kac_character(const RootDatum& rd, const Weight& lambda, i64 k, i64 order) {
    if (!is_dominant(lambda)) throw NotDominant();
    if (pairing(lambda, rd.highest_root.coroot) > k) throw NotIntegrable();
    WeightedQSeries num = affine_numerator(rd, lambda + rd.rho, k + rd.h_dual, order);
    WeightedQSeries den = affine_numerator(rd, rd.rho, rd.h_dual, order);

    TermRef pivot;
    if (!term_found(den, rd, pivot) || (pivot.c != 1 && pivot.c != -1))
        throw DivisionStuck("denominator has no unit leading term");

    // leading-term division: quotient exists exactly, so the remainder drains
    WeightedQSeries quo(order - pivot.n);
    WeightedQSeries rem = num;
    std::size_t guard = 0;
    TermRef lead;
    while (term_found(rem, rd, lead)) {
        if (++guard > 10000000) throw DivisionStuck("division did not terminate");
        Int c = lead.c * pivot.c;  // divide by the unit pivot coefficient
        i64 dn = lead.n - pivot.n;
        Weight dw = lead.w - pivot.w;
        quo.add_term(dn, dw, c);
        for (const auto& [n, layer] : den.layers()) {
            if (n + dn > rem.trunc_order()) break;
            for (const auto& [w, coef] : layer)
                rem.add_term(n + dn, IntVec(w + dw), -c * coef);
        }
    }
    return {lambda, k, std::move(quo)};
}

std::vector<std::pair<AffineOrbitRep, AffineOrbitRep>> duality_bijection(
    const RootDatum& rd, i64 k) {
    if (k < 1) throw NotPositive("level must be >= 1");
    std::vector<AffineOrbitRep> pos = affine_orbit_reps(level_twisting(rd, k));
    std::vector<AffineOrbitRep> neg = negative_level_basis(rd, k);
    if (pos.size() != neg.size()) throw BijectionFailed("basis sizes differ");
    std::vector<std::pair<AffineOrbitRep, AffineOrbitRep>> out;
    std::vector<bool> hit(neg.size(), false);
    for (const AffineOrbitRep& r : pos) {
        Weight image = r.rep + rd.rho;
        std::size_t j = 0;
        for (; j < neg.size(); ++j)
            if (!hit[j] && lex_eq(neg[j].rep, image)) break;
        if (j == neg.size()) throw BijectionFailed("image misses the regular basis");
        hit[j] = true;
        out.emplace_back(r, neg[j]);
    }
    return out;
}

DualityPairing duality_pairing(const RootDatum& rd, i64 k, i64 order) {
    DualityPairing out;
    out.pairs = duality_bijection(rd, k);
    std::size_t n = out.pairs.size();
    std::vector<KacCharacter> chars;
    for (std::size_t j = 0; j < n; ++j)
        chars.push_back(kac_character(rd, out.pairs[j].first.rep, k, order));
    i64 trunc = chars.empty() ? order : chars[0].ch.trunc_order();
    out.matrix.assign(n, std::vector<QSeries>(n, QSeries(trunc)));
    for (std::size_t i = 0; i < n; ++i) {
        const Weight& probe = out.pairs[i].first.rep;
        for (std::size_t j = 0; j < n; ++j) {
            QSeries entry(trunc);
            for (const auto& [qn, layer] : chars[j].ch.layers()) {
                auto it = layer.find(probe);
                if (it != layer.end())
                    entry = qs_add(entry, QSeries::monomial(it->second, qn, trunc));
            }
            out.matrix[i][j] = entry;
        }
    }
    out.det = qs_det(out.matrix, trunc);
    return out;
}

}  // namespace tatek
