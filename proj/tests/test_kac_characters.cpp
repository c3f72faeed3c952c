#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <tatek/kac_characters.hpp>
#include <tatek/verify.hpp>

using namespace tatek;

namespace {

IntVec vec(std::initializer_list<i64> v) {
    IntVec x(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (i64 e : v) x[i++] = e;
    return x;
}

std::vector<Int> graded_dims(const KacCharacter& ch, i64 order) {
    std::vector<Int> out;
    for (i64 n = 0; n <= order; ++n) {
        Int d = 0;
        auto it = ch.ch.layers().find(n);
        if (it != ch.ch.layers().end())
            for (const auto& [w, c] : it->second) d += c;
        out.push_back(d);
    }
    return out;
}

std::vector<Int> dims(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("numerator at order zero") {
    RootDatum a1 = load_root_datum("A1");
    WeightedQSeries num = affine_numerator(a1, vec({1}), 2, 0);
    CHECK(num.coeff(0, vec({1})) == 1);
    CHECK(num.coeff(0, vec({-1})) == -1);
    CHECK(num.term_count() == 2);
}

TEST_CASE("numerator anti-invariance and direct enumeration") {
    RootDatum a1 = load_root_datum("A1");
    WeightedQSeries num = affine_numerator(a1, vec({1}), 2, 10);
    auto w = weyl_elements(a1);
    for (const WeylElement& e : w)
        CHECK(wq_equal_up_to(wq_map_weights(num, e.on_weights), wq_scale(num, e.sign), 10));

    // independent enumeration: n(w, p) = 4p^2 - 2*(w*1)*p for p in [-10, 10]
    std::size_t count = 0;
    for (i64 s : {1, -1})
        for (i64 p = -10; p <= 10; ++p)
            if (4 * p * p - 2 * s * p <= 10) ++count;
    CHECK(num.term_count() == count);
}

TEST_CASE("numerator errors") {
    RootDatum a1 = load_root_datum("A1");
    CHECK_THROWS_AS(affine_numerator(a1, vec({1}), 1, 5), LevelTooSmall);
    CHECK_THROWS_AS(affine_numerator(a1, vec({0}), 2, 5), NotRegular);
    CHECK_THROWS_AS(affine_numerator(a1, vec({2}), 2, 5), NotRegular);  // on the wall
}

TEST_CASE("vacuum layers") {
    RootDatum a1 = load_root_datum("A1");
    KacCharacter ch = kac_character(a1, vec({0}), 1, 0);
    CHECK(ch.ch.coeff(0, vec({0})) == 1);
    auto it = ch.ch.layers().find(0);
    REQUIRE(it != ch.ch.layers().end());
    CHECK(it->second.size() == 1);

    KacCharacter ch2 = kac_character(a1, vec({2}), 2, 0);
    CHECK(ch2.ch.coeff(0, vec({-2})) == 1);
    CHECK(ch2.ch.coeff(0, vec({0})) == 1);
    CHECK(ch2.ch.coeff(0, vec({2})) == 1);
}

TEST_CASE("graded dimension regression") {
    RootDatum a1 = load_root_datum("A1");
    KacCharacter v0 = kac_character(a1, vec({0}), 1, 8);
    CHECK(graded_dims(v0, 8) == dims({1, 0, 3, 0, 4, 0, 7, 0, 13}));
    KacCharacter v1 = kac_character(a1, vec({1}), 1, 8);
    CHECK(graded_dims(v1, 8) == dims({2, 0, 2, 0, 6, 0, 8, 0, 14}));
}

TEST_CASE("re-multiplication identity") {
    for (const std::string& label : {"A1", "A2"}) {
        RootDatum rd = load_root_datum(label);
        i64 kmax = label == "A1" ? 3 : 1;
        WeightedQSeries den = affine_numerator(rd, rd.rho, rd.h_dual, 8);
        for (i64 k = 1; k <= kmax; ++k)
            for (const AffineOrbitRep& r : affine_orbit_reps(level_twisting(rd, k))) {
                WeightedQSeries num = affine_numerator(rd, r.rep + rd.rho, k + rd.h_dual, 8);
                KacCharacter ch = kac_character(rd, r.rep, k, 8);
                WeightedQSeries back = wq_mul(den, ch.ch);
                CHECK(wq_equal_up_to(back, num, std::min(back.trunc_order(), num.trunc_order())));
            }
    }
}

TEST_CASE("q0 layer equals the finite character") {
    RootDatum a2 = load_root_datum("A2");
    KacCharacter ch = kac_character(a2, vec({1, 0}), 1, 4);
    auto fin = finite_character(a2, vec({1, 0}));
    CHECK(fin.size() == 3);  // the 3-dimensional module has 3 distinct weights
    for (const auto& [mu, c] : fin) CHECK(ch.ch.coeff(0, mu) == c);
    Int dim = 0;
    for (const auto& [mu, c] : fin) dim += c;
    CHECK(dim == weyl_dim(a2, vec({1, 0})));
    // adjoint module: 6 roots with multiplicity 1, zero weight twice
    auto adj = finite_character(a2, vec({1, 1}));
    CHECK(adj.at(vec({0, 0})) == 2);
    Int adim = 0;
    for (const auto& [mu, c] : adj) adim += c;
    CHECK(adim == 8);
}

TEST_CASE("integrability guard") {
    RootDatum a1 = load_root_datum("A1");
    CHECK_THROWS_AS(kac_character(a1, vec({2}), 1, 4), NotIntegrable);
    CHECK_THROWS_AS(kac_character(a1, vec({-1}), 1, 4), NotDominant);
}

TEST_CASE("duality bijection") {
    RootDatum a1 = load_root_datum("A1");
    auto p1 = duality_bijection(a1, 1);
    REQUIRE(p1.size() == 2);
    CHECK(p1[0].first.rep[0] == 0);
    CHECK(p1[0].second.rep[0] == 1);
    CHECK(p1[1].first.rep[0] == 1);
    CHECK(p1[1].second.rep[0] == 2);

    auto p2 = duality_bijection(a1, 2);
    REQUIRE(p2.size() == 3);
    for (std::size_t i = 0; i < p2.size(); ++i)
        CHECK(p2[i].second.rep[0] == p2[i].first.rep[0] + 1);

    RootDatum a2 = load_root_datum("A2");
    CHECK(duality_bijection(a2, 1).size() == negative_level_basis(a2, 1).size());
}

TEST_CASE("duality pairing unit determinant") {
    RootDatum a1 = load_root_datum("A1");
    for (i64 k = 1; k <= 2; ++k) {
        DualityPairing dp = duality_pairing(a1, k, 8);
        Int lead = dp.det.leading_coeff();
        CHECK((lead == 1 || lead == -1));
        // diagonal entries start at q^0 with coefficient 1
        for (std::size_t i = 0; i < dp.matrix.size(); ++i) {
            CHECK(dp.matrix[i][i].min_exp() == 0);
            CHECK(dp.matrix[i][i].coeff(0) == 1);
        }
    }
}
