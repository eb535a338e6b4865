#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "coarsekit/corpus.hpp"
#include "coarsekit/errors.hpp"
#include "coarsekit/lsmap.hpp"
#include "helpers.hpp"

using namespace coarsekit;
using namespace coarsekit::testing;

TEST_CASE("control_modulus") {
    std::mt19937 rng(3);
    FiniteMetricSpace R = random_space(rng, 25);
    LSMap idr = identity_map(share(R));
    ResponseTable rho = control_modulus(idr, grid_range(0, 8));
    for (std::size_t k = 0; k < 9; ++k) {
        CHECK(rho.at1(k) <= static_cast<double>(k));
        if (k) CHECK(rho.at1(k) >= rho.at1(k - 1));
    }

    LSMap dbl = corpus_map("scale2", 10);
    ResponseTable rho2 = control_modulus(dbl, {1, 3});
    CHECK(rho2.at1(0) == 2);
    CHECK(rho2.at1(1) == 6);

    LSMap c = corpus_map("constant", 10);
    ResponseTable rho3 = control_modulus(c, grid_range(0, 4));
    for (double v : rho3.raw()) CHECK(v == 0);
}

TEST_CASE("closeness_gap") {
    LSMap id = corpus_map("identity", 10);
    LSMap sh = corpus_map("shift", 10);
    CHECK(closeness_gap(id, id) == 0);
    CHECK(closeness_gap(id, sh) == 1);
    CHECK(closeness_gap(id, sh) == closeness_gap(sh, id));
    LSMap zero = constant_map(id.domain, id.codomain, 0);
    CHECK(closeness_gap(id, zero) == 10);
    CHECK(closeness_gap(id, zero) <= closeness_gap(id, sh) + closeness_gap(sh, zero));
    LSMap other = corpus_map("identity", 5);
    CHECK_THROWS_AS(closeness_gap(id, other), ValidationError);
}

TEST_CASE("surjectivity_defect") {
    CHECK(surjectivity_defect(corpus_map("fold", 10)) == 0);
    CHECK(surjectivity_defect(corpus_map("scale2", 10)) == 1);
    LSMap incl = constant_map(z_space(0, 0), z_space(0, 10), 0);
    CHECK(surjectivity_defect(incl) == 10);
}

TEST_CASE("embedding_response") {
    ResponseTable Eid = embedding_response(corpus_map("identity", 10), grid_range(0, 4));
    for (std::size_t k = 0; k < 5; ++k) CHECK(Eid.at1(k) <= 2.0 * static_cast<double>(k));

    ResponseTable Ec = embedding_response(corpus_map("constant", 10), {0});
    CHECK(Ec.at1(0) == 10);

    LSMap third{z_space(0, 30), z_space(0, 10), {}};
    for (int n = 0; n <= 30; ++n) third.values.push_back(n / 3);
    ResponseTable Et = embedding_response(third, {0});
    CHECK(Et.at1(0) == 2);
}

TEST_CASE("properness_response") {
    ResponseTable Pid = properness_response(corpus_map("identity", 10), grid_range(0, 12));
    for (std::size_t k = 0; k <= 12; ++k) CHECK(Pid.at1(k) == std::min<double>(k, 10));

    ResponseTable Pc = properness_response(corpus_map("constant", 10), {0});
    CHECK(Pc.at1(0) == 10);

    LSMap far = constant_map(z_space(0, 2), z_space(0, 10), 10);
    ResponseTable Pf = properness_response(far, {0});
    CHECK(Pf.at1(0) == 0);

    LSMap nobase{share(FiniteMetricSpace::z_window(0, 3)), z_space(0, 3), {0, 1, 2, 3}};
    CHECK_THROWS_AS(properness_response(nobase, {0}), ValidationError);
}

TEST_CASE("product_space") {
    SpacePtr pt = share(FiniteMetricSpace::point());
    SpacePtr C = z_space(0, 4);
    SpacePtr P = product_space(pt, C);
    REQUIRE(P->size() == 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(P->d(i, j) == C->d(i, j));

    SpacePtr Q = product_space(z_space(0, 2), z_space(0, 2));
    CHECK(Q->d(product_index(z_space(0, 2), 0, 0), product_index(z_space(0, 2), 2, 1)) == 2);

    SpacePtr R = product_space(z_space(0, 6), z_space(0, 3));
    CHECK(R->finite_diameter() == 6);
}

TEST_CASE("scaled_fiber_product") {
    // pt -> [-5..5] hitting 0, against the identity at S=2
    SpacePtr B = z_space(-5, 5, 0);
    LSMap h = constant_map(share(FiniteMetricSpace::point()), B, 5); // index of value 0
    LSMap f = identity_map(B);
    FiberProduct fp = scaled_fiber_product(h, f, 2);
    CHECK(fp.space->size() == 5); // values -2..2
    CHECK(closeness_gap(compose(h, fp.to_A), compose(f, fp.to_C)) <= 4);

    // diagonal at S=0 is isometric to X
    LSMap id = corpus_map("identity", 6);
    FiberProduct diag = scaled_fiber_product(id, id, 0);
    REQUIRE(diag.space->size() == 7);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) CHECK(diag.space->d(i, j) == id.domain->d(i, j));

    // fold against the identity: pairs (|n|, n)
    LSMap fold = corpus_map("fold", 10);
    LSMap idc = identity_map(fold.codomain);
    FiberProduct fb = scaled_fiber_product(idc, fold, 0);
    CHECK(fb.space->size() == 21);
    // (10,-10) vs (10,10): the max metric sees the two branches
    CHECK(fb.space->finite_diameter() == 20);
    CHECK(closeness_gap(compose(idc, fb.to_A), compose(fold, fb.to_C)) == 0);

    // the canonical inclusion is isometric: E(s) <= 2s exactly
    ResponseTable E = embedding_response(fb.inclusion, grid_range(0, 4));
    for (std::size_t k = 0; k < 5; ++k) CHECK(E.at1(k) <= 2.0 * static_cast<double>(k));
}

TEST_CASE("oscillation_profile") {
    FiniteMetricSpace X = FiniteMetricSpace::z_window(0, 20, 0);
    std::vector<std::pair<double, double>> constant(21, {3.0, 1.0});
    ResponseTable oc = oscillation_profile(X, constant, 2, grid_range(0, 8));
    for (double v : oc.raw()) CHECK(v == 0);

    std::vector<std::pair<double, double>> par;
    for (int n = 0; n <= 20; ++n) par.emplace_back(n % 2, 0.0);
    ResponseTable op = oscillation_profile(X, par, 1, grid_range(0, 8));
    for (double v : op.raw()) CHECK(v == 1);

    std::vector<std::pair<double, double>> lg;
    for (int n = 0; n <= 20; ++n) lg.emplace_back(std::log(1.0 + n), 0.0);
    ResponseTable ol = oscillation_profile(X, lg, 1, grid_range(0, 8));
    for (std::size_t k = 0; k <= 8; ++k)
        CHECK(ol.at1(k) == doctest::Approx(std::log(1.0 + 1.0 / (1.0 + k))));
}

TEST_CASE("composite modulus bound on corpus") {
    const std::vector<double> grid = grid_range(0, 8);
    LSMap fold = corpus_map("fold", 12);
    for (const std::string& gname : {"identity", "shift", "parity", "scale2", "constant"}) {
        LSMap g = corpus_map(gname, 12);
        LSMap gf = compose(g, fold);
        ResponseTable rf = control_modulus(fold, grid);
        ResponseTable rg = control_modulus(g, grid_range(0, 24));
        ResponseTable rgf = control_modulus(gf, grid);
        for (std::size_t k = 0; k < grid.size(); ++k)
            CHECK(rgf.at1(k) <= rg.lookup({rf.at1(k)}));
    }
}
