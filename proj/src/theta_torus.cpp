#include <tatek/theta_torus.hpp>

#include <tatek/intlinalg.hpp>

#include <algorithm>
#include <thread>

namespace tatek {

LineBundleClass classify_line_bundle(const IntMat& form) {
    if (form.rows() != form.cols() || form != form.transpose())
        return LineBundleClass::rejected;
    if (is_positive_definite(form)) return LineBundleClass::ample;
    IntMat neg = -form;
    if (is_positive_definite(neg)) return LineBundleClass::anti_ample;
    return LineBundleClass::rejected;
}

LineBundleClass classify_line_bundle(const Twisting& tw) {
    return tw.sign == FormSign::positive ? LineBundleClass::ample
                                         : LineBundleClass::anti_ample;
}

std::vector<WeightedQSeries> theta_basis(const Twisting& tw, i64 order, int jobs) {
    if (tw.sign != FormSign::positive) throw NotPositive("theta basis needs a positive form");
    Twisting torus = torus_twisting(tw.form);  // coset enumeration ignores W
    std::vector<AffineOrbitRep> cosets = affine_orbit_reps(torus);
    std::size_t n = cosets.size();
    std::vector<WeightedQSeries> out(n, WeightedQSeries(order));
    auto work = [&](std::size_t i) {
        const Weight& c = cosets[i].rep;
        WeightedQSeries theta(order);
        for (const Coweight& p : translation_points(tw.form, c, order)) {
            LambdaTauPoint x = pi1_act(tw, p, {c, 0});
            theta.add_term(x.n, x.lambda, 1);
        }
        out[i] = std::move(theta);
    };
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) work(i);
    } else {
        std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < workers; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < n; i += workers) work(i);
            });
        for (auto& th : pool) th.join();
    }
    for (const WeightedQSeries& theta : out)
        if (theta.is_zero())
            throw OrderTooSmall("order " + std::to_string(order) +
                                " is below the lowest orbit energy");
    return out;
}

bool check_theta_invariance(const Twisting& tw, const WeightedQSeries& f,
                            const Coweight& p) {
    for (const auto& [n, layer] : f.layers())
        for (const auto& [w, c] : layer) {
            LambdaTauPoint img = pi1_act(tw, p, {w, n});
            if (img.n > f.trunc_order()) continue;  // outside the safe window
            if (f.coeff(img.n, img.lambda) != c) return false;
        }
    return true;
}

namespace {

// Free rank of the coinvariants of the inverse-sign translation generator on
// the monomial window |a| <= w. The generator sends t^a to a q-power times
// t^{a+m}; each chain a, a+m, a+2m, ... is acyclic, so rescaling the basis by
// q-units along each chain removes the q-powers and the rank over the Laurent
// field equals the integer rank of the incidence matrix below.
i64 coinvariant_rank(i64 m, i64 w) {
    i64 cols = 2 * w + 1;        // window monomials t^a, |a| <= w
    i64 rows = 2 * w + 1 + m;    // plus the images that overshoot the window
    BigMat mat = BigMat::Zero(rows, cols);
    for (i64 a = -w; a <= w; ++a) {
        mat(a + w, a + w) = -1;
        mat(a + m + w, a + w) = 1;
    }
    return rows - int_rank(mat);
}

}  // namespace

std::pair<i64, i64> abelian_duality_ranks(const Twisting& tw, i64 window, i64 order) {
    if (tw.rank() != 1) throw RankNotOne();
    if (tw.sign != FormSign::positive) throw NotPositive("needs a positive form");
    i64 m = tw.form(0, 0);
    i64 rank_pos = static_cast<i64>(theta_basis(tw, order).size());
    i64 r1 = coinvariant_rank(m, window);
    i64 r2 = coinvariant_rank(m, 2 * window);
    if (r1 != r2)
        throw NotStabilized("coinvariant rank changed when the window doubled");
    return {rank_pos, r1};
}

QSeries qs_det(const std::vector<std::vector<QSeries>>& m, i64 trunc_order) {
    std::size_t n = m.size();
    if (n == 0) return QSeries::one(trunc_order);
    if (n == 1) return m[0][0];
    QSeries acc = QSeries(trunc_order);  // zero
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][0].is_zero()) continue;
        std::vector<std::vector<QSeries>> sub;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            sub.emplace_back(m[r].begin() + 1, m[r].end());
        }
        QSeries term = qs_mul(m[i][0], qs_det(sub, trunc_order));
        acc = qs_add(acc, i % 2 == 0 ? term : qs_neg(term));
    }
    return acc;
}

ThetaPairing theta_pairing_matrix(const Twisting& tw, i64 order) {
    if (tw.sign != FormSign::positive) throw NotPositive("needs a positive form");
    std::vector<WeightedQSeries> basis = theta_basis(tw, order);
    Twisting torus = torus_twisting(tw.form);
    ThetaPairing out;
    for (const AffineOrbitRep& coset : affine_orbit_reps(torus))
        out.cosets.push_back(coset.rep);
    std::size_t n = basis.size();
    out.matrix.assign(n, std::vector<QSeries>(n, QSeries(order)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            QSeries entry(order);
            for (const auto& [qn, layer] : basis[i].layers()) {
                auto it = layer.find(out.cosets[j]);
                if (it != layer.end())
                    entry = qs_add(entry, QSeries::monomial(it->second, qn, order));
            }
            out.matrix[i][j] = entry;
        }
    out.det = qs_det(out.matrix, order);
    return out;
}

}  // namespace tatek
