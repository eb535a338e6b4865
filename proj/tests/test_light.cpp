#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "coarsekit/corpus.hpp"
#include "coarsekit/errors.hpp"
#include "coarsekit/light.hpp"
#include "coarsekit/reflection.hpp"
#include "helpers.hpp"

using namespace coarsekit;
using namespace coarsekit::testing;

TEST_CASE("light_component_family examples") {
    LSMap id = corpus_map("identity", 10);
    LightFamily fam = light_component_family(id, 1, 2);
    CHECK(fam.mesh == 4);
    bool found = false;
    for (const auto& b : fam.blocks)
        if (b == PointSet{3, 4, 5, 6, 7}) found = true;
    CHECK(found);

    LightFamily cf = light_component_family(corpus_map("constant", 10), 1, 0);
    REQUIRE(cf.blocks.size() == 1);
    CHECK(cf.blocks[0].size() == 11);
    CHECK(cf.mesh == 10);

    LightFamily inj = light_component_family(id, 0, 0);
    CHECK(inj.mesh == 0);
    for (const auto& b : inj.blocks) CHECK(b.size() == 1);
}

TEST_CASE("light_response against the brute-force oracle") {
    for (const std::string& name : corpus_map_names()) {
        LSMap f = corpus_map(name, 8);
        ResponseTable L = light_response(f, grid_range(0, 3), grid_range(0, 3));
        for (std::size_t i = 0; i <= 3; ++i)
            for (std::size_t j = 0; j <= 3; ++j)
                CHECK(L.at2(i, j) ==
                      oracle_light_mesh(f, static_cast<double>(i), static_cast<double>(j)));
    }
}

TEST_CASE("light_response examples") {
    ResponseTable Lid = light_response(corpus_map("identity", 10), {1}, grid_range(0, 3));
    for (std::size_t j = 1; j <= 3; ++j) CHECK(Lid.at2(0, j) == 2.0 * static_cast<double>(j));

    ResponseTable Lc = light_response(corpus_map("constant", 10), {1}, {0});
    CHECK(Lc.at2(0, 0) == 10);

    // frozen fold cells (window-independent for small scales)
    for (int w : {8, 16}) {
        ResponseTable Lf = light_response(corpus_map("fold", w), grid_range(0, 2), grid_range(0, 2));
        CHECK(Lf.at2(1, 0) == 0);
        CHECK(Lf.at2(1, 1) == 4);
        CHECK(Lf.at2(2, 0) == 2);
        CHECK(Lf.at2(2, 2) == 10);
    }
}

TEST_CASE("n_to_1_response") {
    NToOneResult inj = n_to_1_response(corpus_map("identity", 10), 0, 1, 8);
    CHECK(inj.r == 0);
    CHECK(inj.exact);

    NToOneResult fold = n_to_1_response(corpus_map("fold", 10), 0, 2, 8);
    CHECK(fold.r == 0);
    CHECK(fold.exact);

    // exhaustive oracle: minimize over all 2-part assignments of [0..10]
    {
        LSMap c = corpus_map("constant", 10);
        double best = kInf;
        for (int mask = 0; mask < (1 << 11); ++mask) {
            double d0 = 0, d1 = 0;
            for (int a = 0; a <= 10; ++a)
                for (int b = a + 1; b <= 10; ++b) {
                    if (((mask >> a) & 1) == ((mask >> b) & 1)) {
                        double& acc = ((mask >> a) & 1) ? d1 : d0;
                        acc = std::max(acc, static_cast<double>(b - a));
                    }
                }
            best = std::min(best, std::max(d0, d1));
        }
        CHECK(best == 5);
        NToOneResult got = n_to_1_response(c, 0, 2, 10);
        CHECK(got.exact);
        CHECK(got.r == best);
    }

    NToOneResult capped = n_to_1_response(corpus_map("constant", 10), 0, 2, 3);
    CHECK(!is_finite(capped.r));
}

TEST_CASE("light_pseudometric") {
    LSMap id = corpus_map("identity", 12);
    LightPseudoMetric lpm = light_pseudometric(id, 12);
    for (int i = 0; i <= 12; ++i)
        for (int j = 0; j <= 12; ++j) {
            CHECK(lpm.space->d(i, j) <= id.domain->d(i, j));
            CHECK(lpm.space->d(i, j) >= id.domain->d(i, j) / 3.0);
        }
    lpm.space->validate();

    // constant map: d_f equals the grid-bounded reflection metric
    LSMap c = corpus_map("constant", 12);
    LightPseudoMetric lc = light_pseudometric(c, 12);
    ReflectionMetric I = reflect_0(*c.domain, grid_range(0, 12));
    CHECK(lc.space->matrix() == I.space->matrix());

    // fold branches merge only through the scale-7 block around y=10,
    // whose preimage [-16,-3] u [3,16] is 7-connected across the gap
    LSMap fold = corpus_map("fold", 16);
    LightPseudoMetric lf = light_pseudometric(fold, 16);
    CHECK(lf.space->d(0, 32) == 7); // points -16 and 16
}

TEST_CASE("factorize") {
    for (const std::string& name : corpus_map_names()) {
        LSMap f = corpus_map(name, 8);
        Factorization fac = factorize(f, 8);
        for (int x = 0; x < f.domain->size(); ++x) {
            CHECK(fac.e(x) == x);
            CHECK(fac.f_light(fac.e(x)) == f(x));
        }
    }
    Factorization fc = factorize(corpus_map("constant", 10), 8);
    CHECK(fc.Xf->finite_diameter() <= 1);

    // an s-ball in X_f around n reaches roughly [n-2s, n+2s] plus the mirror
    // branch glued at scale s, so its domain diameter stays within 7s
    Factorization ff = factorize(corpus_map("fold", 10), 10);
    ResponseTable E = embedding_response(ff.e, grid_range(0, 6));
    for (std::size_t k = 0; k <= 6; ++k) CHECK(E.at1(k) <= 7.0 * static_cast<double>(k));
}

TEST_CASE("monotone_frontier") {
    MonotoneFrontier fid = monotone_frontier(corpus_map("identity", 10), grid_range(0, 3), 8, 8);
    REQUIRE(fid.finite());
    CHECK(*fid.rt[0] == std::pair<double, double>{0, 0});
    for (std::size_t k = 1; k <= 3; ++k)
        CHECK(*fid.rt[k] == std::pair<double, double>{1, static_cast<double>(k)});

    MonotoneFrontier fc = monotone_frontier(corpus_map("constant", 10), grid_range(0, 3), 8, 8);
    REQUIRE(fc.finite());
    for (std::size_t k = 0; k <= 3; ++k) CHECK(*fc.rt[k] == std::pair<double, double>{1, 0});

    MonotoneFrontier ffold = monotone_frontier(corpus_map("fold", 16), {0}, 8, 8);
    CHECK(!ffold.finite());
}

TEST_CASE("verify_fill_square") {
    const std::vector<double> grid = grid_range(0, 4);
    LSMap f = corpus_map("fold", 8);
    Factorization top = factorize(f, 8);
    Factorization bottom = factorize(f, 8);
    LSMap u = identity_map(f.domain);
    LSMap v = identity_map(f.codomain);
    FillReport same = verify_fill_square(u, v, top.e, bottom.e, top.f_light, bottom.f_light, 0, grid);
    CHECK(same.pass);
    CHECK(same.square_gap == 0);
    CHECK(same.gap_top == 0);
    CHECK(same.gap_bottom == 0);

    // mismatched rows: constant top against identity bottom fails
    LSMap c = corpus_map("constant", 10);
    Factorization tc = factorize(c, 8);
    LSMap id10 = corpus_map("identity", 10);
    Factorization ti = factorize(id10, 8);
    LSMap u2 = identity_map(c.domain);
    LSMap v2 = constant_map(c.codomain, id10.codomain, 0);
    FillReport bad = verify_fill_square(u2, v2, tc.e, ti.e, tc.f_light, ti.f_light, 0, grid);
    CHECK(!bad.pass);
    CHECK(bad.square_gap == 10);

    // non-composable shapes are rejected
    CHECK_THROWS_AS(
        verify_fill_square(u, v, top.e, ti.e, top.f_light, ti.f_light, 0, grid),
        ValidationError);
}

TEST_CASE("star composition bound") {
    for (const std::string& name : {"identity", "fold", "parity"}) {
        LSMap f = corpus_map(name, 8);
        const auto& X = *f.domain;
        for (double r : {1.0, 2.0})
            for (double s : {0.0, 1.0}) {
                ScaledCover A = light_component_family(f, r, s).as_cover(X);
                ScaledCover B = light_component_family(f, 2, 1).as_cover(X);
                ScaledCover starred = star_family(X, A, B);
                ScaledCover target = light_component_family(f, r + 2 + 2, s + 1 + 1).as_cover(X);
                CHECK(is_refinement(starred, target));
            }
    }
}

TEST_CASE("U refines its own light family") {
    for (const std::string& name : corpus_map_names()) {
        LSMap f = corpus_map(name, 8);
        ResponseTable rho = control_modulus(f, grid_range(0, 4));
        for (std::size_t k = 0; k <= 4; ++k) {
            double r = static_cast<double>(k);
            ScaledCover fam = light_component_family(f, r, rho.at1(k)).as_cover(*f.domain);
            CHECK(is_refinement(ball_cover(*f.domain, r), fam));
        }
    }
}

TEST_CASE("close maps classify together") {
    LSMap id = corpus_map("identity", 12);
    LSMap sh = corpus_map("shift", 12);
    const double c = closeness_gap(id, sh);
    for (double r : {0.0, 1.0, 2.0})
        for (double s : {0.0, 1.0, 2.0})
            CHECK(light_component_family(sh, r, s).mesh <=
                  light_component_family(id, r, s + 2 * c).mesh);
}

TEST_CASE("embeddings are light") {
    for (const std::string& name : {"identity", "scale2", "fold"}) {
        LSMap f = corpus_map(name, 10);
        ResponseTable E = embedding_response(f, grid_range(0, 4));
        for (double r : {0.0, 1.0, 2.0})
            for (std::size_t k = 0; k <= 4; ++k)
                CHECK(light_component_family(f, r, static_cast<double>(k)).mesh <= E.at1(k));
    }
}
