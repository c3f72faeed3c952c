#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <tatek/root_data.hpp>

using namespace tatek;

namespace {

IntMat mat2(i64 a, i64 b, i64 c, i64 d) {
    IntMat m(2, 2);
    m << a, b, c, d;
    return m;
}

IntVec vec(std::initializer_list<i64> v) {
    IntVec x(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (i64 e : v) x[i++] = e;
    return x;
}

}  // namespace

TEST_CASE("type table invariants") {
    struct Row { const char* label; i64 h_dual; std::size_t n_pos; std::size_t weyl; };
    const Row rows[] = {
        {"A1", 2, 1, 2}, {"A2", 3, 3, 6}, {"A3", 4, 6, 24},
        {"A4", 5, 10, 120}, {"C2", 3, 4, 8}, {"G2", 4, 6, 12},
    };
    for (const Row& r : rows) {
        RootDatum rd = load_root_datum(r.label);
        CHECK(rd.h_dual == r.h_dual);
        CHECK(rd.positive_roots.size() == r.n_pos);
        CHECK(weyl_elements(rd).size() == r.weyl);
        CHECK((rd.rho.array() == 1).all());
    }
}

TEST_CASE("basic forms") {
    CHECK(load_root_datum("A1").basic_form(0, 0) == 2);
    CHECK(load_root_datum("A2").basic_form == mat2(2, -1, -1, 2));
    CHECK(load_root_datum("C2").basic_form == mat2(4, -2, -2, 2));
    CHECK(load_root_datum("G2").basic_form == mat2(2, -3, -3, 6));
}

TEST_CASE("explicit Cartan matrices") {
    RootDatum g2 = load_root_datum(mat2(2, -3, -1, 2));
    CHECK(g2.h_dual == 4);
    CHECK(g2.label == "G2");

    CHECK_THROWS_AS(load_root_datum(mat2(2, -2, -2, 2)), NotFiniteType);  // affine
    CHECK_THROWS_AS(load_root_datum(mat2(3, -1, -1, 2)), NotFiniteType);  // bad diagonal
    CHECK_THROWS_AS(load_root_datum(mat2(2, 1, 1, 2)), NotFiniteType);    // positive off-diag
    CHECK_THROWS_AS(load_root_datum(mat2(2, 0, -1, 2)), NotFiniteType);   // asymmetric zeros
    CHECK_THROWS_AS(load_root_datum(std::string("E9")), NotFiniteType);
}

TEST_CASE("weyl dimension formula") {
    RootDatum a1 = load_root_datum("A1");
    CHECK(weyl_dim(a1, vec({0})) == 1);
    CHECK(weyl_dim(a1, vec({2})) == 3);
    RootDatum a2 = load_root_datum("A2");
    CHECK(weyl_dim(a2, vec({1, 1})) == 8);
    CHECK_THROWS_AS(weyl_dim(a2, vec({-1, 0})), NotDominant);
}

TEST_CASE("weyl action preserves structure") {
    for (const std::string& label : {"A2", "C2", "G2"}) {
        RootDatum rd = load_root_datum(label);
        for (const WeylElement& w : weyl_elements(rd)) {
            // inverse-transpose relation between the two representations
            IntMat prod = w.on_weights.transpose() * w.on_coweights;
            CHECK(prod == IntMat::Identity(rd.rank, rd.rank));
            for (const Root& r : rd.positive_roots) {
                // the image of a root is again a root (up to sign)
                IntVec img = w.on_weights * r.weight;
                bool found = false;
                for (const Root& s : rd.positive_roots)
                    found = found || lex_eq(img, s.weight) || lex_eq(img, IntVec(-s.weight));
                CHECK(found);
            }
        }
    }
}

TEST_CASE("highest root and coroot") {
    RootDatum c2 = load_root_datum("C2");
    CHECK(lex_eq(c2.highest_root.weight, vec({2, 0})));
    CHECK(pairing(c2.rho, c2.highest_root.coroot) == c2.h_dual - 1);
    // short coroots have square length 2 under the basic form
    i64 min_norm = 0;
    for (const Root& r : c2.positive_roots) {
        i64 norm = r.coroot.dot(IntVec(c2.basic_form * r.coroot));
        if (min_norm == 0 || norm < min_norm) min_norm = norm;
    }
    CHECK(min_norm == 2);
}
