#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <tatek/qseries.hpp>

#include <random>

using namespace tatek;

namespace {

QSeries make(i64 min_exp, std::vector<long long> c, i64 trunc) {
    std::vector<Int> v(c.begin(), c.end());
    return QSeries(min_exp, std::move(v), trunc);
}

QSeries random_series(std::mt19937_64& g, i64 order) {
    i64 lo = -3 + static_cast<i64>(g() % 6);
    std::vector<Int> c;
    for (i64 n = lo; n <= order; ++n) c.push_back(static_cast<i64>(g() % 11) - 5);
    return QSeries(lo, std::move(c), order);
}

}  // namespace

TEST_CASE("addition") {
    QSeries a = make(0, {1, 1}, 10);     // 1+q
    QSeries b = make(0, {-1, 1}, 10);    // -1+q
    QSeries s = a + b;
    CHECK(s.min_exp() == 1);
    CHECK(s.coeff(1) == 2);
    CHECK(s.coeff(0) == 0);

    QSeries zero(10);
    CHECK((zero + a) == a);

    QSeries c = make(-1, {1}, 10) + make(1, {1}, 10);  // q^-1 + q
    CHECK(c.min_exp() == -1);
    CHECK(c.coeff(-1) == 1);
    CHECK(c.coeff(0) == 0);
    CHECK(c.coeff(1) == 1);
}

TEST_CASE("multiplication") {
    QSeries p = make(0, {1, 1}, 10) * make(0, {1, -1}, 10);  // 1 - q^2
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 0);
    CHECK(p.coeff(2) == -1);

    QSeries unit = make(-1, {1}, 10) * make(1, {1}, 10);
    CHECK(unit.coeff(0) == 1);
    CHECK(unit.min_exp() == 0);

    std::vector<Int> ones(11, 1);
    QSeries geom(0, std::move(ones), 10);                // 1+q+...+q^10
    QSeries g = make(0, {1, -1}, 10) * geom;             // telescopes to 1
    for (i64 n = 0; n <= g.trunc_order(); ++n) CHECK(g.coeff(n) == (n == 0 ? 1 : 0));
}

TEST_CASE("inversion") {
    QSeries inv = qs_invert(make(0, {1, -1}, 10));       // 1/(1-q)
    for (i64 n = 0; n <= 10; ++n) CHECK(inv.coeff(n) == 1);
    QSeries re = make(0, {1, -1}, 10) * inv;
    for (i64 n = 0; n <= re.trunc_order(); ++n) CHECK(re.coeff(n) == (n == 0 ? 1 : 0));

    QSeries qinv = qs_invert(make(1, {1}, 10));          // 1/q
    CHECK(qinv.min_exp() == -1);
    CHECK(qinv.coeff(-1) == 1);

    CHECK_THROWS_AS(qs_invert(make(0, {2, 1}, 10)), NonUnitLeadingCoefficient);
}

TEST_CASE("coefficient access") {
    QSeries p = make(0, {1, 0, -1}, 10);  // 1 - q^2
    CHECK(qs_coeff(p, 2) == -1);
    CHECK(qs_coeff(p, 1) == 0);
    CHECK(qs_coeff(p, 7) == 0);
    CHECK_THROWS_AS(qs_coeff(QSeries::one(10), 50), BeyondTruncation);
}

TEST_CASE("canonical form") {
    QSeries z = make(0, {0, 0, 0}, 5);
    CHECK(z.is_zero());
    CHECK(z == QSeries(5));
    QSeries s = make(-2, {0, 3, 0}, 5);  // 3 q^{-1}
    CHECK(s.min_exp() == -1);
    CHECK(s.coeffs().size() == 1);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 g(42);
    auto agree = [](const QSeries& x, const QSeries& y) {
        i64 w = std::min(x.trunc_order(), y.trunc_order());
        for (i64 n = std::min(x.min_exp(), y.min_exp()); n <= w; ++n)
            if (x.coeff(n) != y.coeff(n)) return false;
        return true;
    };
    for (int it = 0; it < 1000; ++it) {
        QSeries a = random_series(g, 8), b = random_series(g, 8), c = random_series(g, 8);
        CHECK(agree(a + b, b + a));
        CHECK(agree(a * b, b * a));
        CHECK(agree((a * b) * c, a * (b * c)));
        CHECK(agree((a + b) * c, a * c + b * c));
    }
}

TEST_CASE("truncation monotonicity") {
    std::mt19937_64 g(7);
    for (int it = 0; it < 50; ++it) {
        QSeries a8 = random_series(g, 8);
        std::vector<Int> ext;
        for (i64 n = a8.min_exp(); n <= 8; ++n) ext.push_back(a8.coeff(n));
        for (i64 n = 9; n <= 12; ++n) ext.push_back(static_cast<i64>(g() % 7) - 3);
        QSeries a12(a8.min_exp(), ext, 12);
        QSeries b8 = random_series(g, 8);
        QSeries b12(b8.min_exp(), b8.coeffs(), 12);
        QSeries p8 = a8 * b8, p12 = a12 * b12;
        for (i64 n = p8.min_exp(); n <= p8.trunc_order(); ++n)
            CHECK(p8.coeff(n) == p12.coeff(n));
    }
}
