#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "coarsekit/asdim.hpp"
#include "coarsekit/corpus.hpp"
#include "coarsekit/errors.hpp"
#include "helpers.hpp"

using namespace coarsekit;
using namespace coarsekit::testing;

namespace {

FiniteMetricSpace powers_of_two(int K) {
    std::vector<std::vector<double>> coords;
    for (int k = 0; k <= K; ++k) coords.push_back({std::pow(2.0, k)});
    return FiniteMetricSpace::from_points(coords, "euclidean");
}

} // namespace

TEST_CASE("asdim0_response examples") {
    FiniteMetricSpace Z = FiniteMetricSpace::z_window(0, 20);
    ResponseTable D = asdim0_response(Z, {1});
    CHECK(D.at1(0) == 20);

    FiniteMetricSpace P = powers_of_two(12);
    ResponseTable Dp = asdim0_response(P, {4});
    // with closed <= 4 steps the chain runs 1-2-4-8 and stops before 16
    CHECK(Dp.at1(0) == 7);
    // oracle cross-check
    double worst = 0;
    for (const auto& cls : oracle_components(P, P.all_points(), 4))
        worst = std::max(worst, P.diameter(cls));
    CHECK(Dp.at1(0) == worst);

    ResponseTable Dg = asdim0_response(P, {0.5});
    CHECK(Dg.at1(0) == 0); // below the minimal gap everything is a singleton
}

TEST_CASE("uniform_asdim0_response examples") {
    LSMap fold = corpus_map("fold", 10);
    UniformFamily fibers;
    for (int y = 0; y <= 10; ++y) {
        PointSet pre;
        for (int x = 0; x < fold.domain->size(); ++x)
            if (fold(x) == y) pre.push_back(x);
        fibers.members.push_back(pre);
    }
    ResponseTable Df = uniform_asdim0_response(*fold.domain, fibers, {1});
    CHECK(Df.at1(0) == 0);

    FiniteMetricSpace Z = FiniteMetricSpace::z_window(0, 15);
    UniformFamily whole{{Z.all_points()}};
    ResponseTable Dw = uniform_asdim0_response(Z, whole, grid_range(0, 3));
    ResponseTable D = asdim0_response(Z, grid_range(0, 3));
    CHECK(Dw.raw() == D.raw());

    LSMap c = corpus_map("constant", 10);
    UniformFamily pre{{c.domain->all_points()}};
    CHECK(uniform_asdim0_response(*c.domain, pre, {1}).at1(0) == 10);
}

TEST_CASE("light response equals uniform asdim-0 of preimages") {
    for (const std::string& name : corpus_map_names()) {
        LSMap f = corpus_map(name, 8);
        for (double s : {0.0, 1.0, 2.0}) {
            UniformFamily F;
            for (int y = 0; y < f.codomain->size(); ++y) {
                PointSet pre;
                for (int x = 0; x < f.domain->size(); ++x)
                    if (f.codomain->d(f(x), y) <= s) pre.push_back(x);
                if (!pre.empty()) F.members.push_back(pre);
            }
            ResponseTable U = uniform_asdim0_response(*f.domain, F, grid_range(0, 4));
            ResponseTable L = light_response(f, grid_range(0, 4), {s});
            for (std::size_t i = 0; i <= 4; ++i) CHECK(L.at2(i, 0) == U.at1(i));
        }
    }
}

namespace {

// Least achievable mesh over interval covers of [0..w] that contain every
// r-ball and have multiplicity <= 2; farthest-right greedy placement.
double interval_cover_oracle(int w, int r) {
    for (int D = 2 * r; D <= w; ++D) {
        // serve(block [a,b]) = { y : ball(y,r) within [a,b] clipped to the window }
        long prev_end = -1, prev_prev_end = -1, served = -1;
        bool ok = true;
        while (served < w) {
            long a;
            if (served < 0) {
                a = 0;
            } else {
                a = served + 1 - r; // next block must serve served+1
                if (a <= prev_prev_end) { // would triple-overlap
                    ok = false;
                    break;
                }
                if (a > prev_end + 1 && a + r > served + 1) {
                    ok = false;
                    break;
                }
            }
            long b = std::min<long>(a + D, w);
            long serve_hi = (b == w) ? w : b - r;
            if (serve_hi <= served && served >= 0) {
                ok = false;
                break;
            }
            served = std::max(served, serve_hi);
            prev_prev_end = prev_end;
            prev_end = b;
            if (served >= w) break;
        }
        if (ok && served >= w) return D;
    }
    return kInf;
}

} // namespace

TEST_CASE("asdim_upper_at") {
    FiniteMetricSpace P = powers_of_two(8);
    AsdimUpperResult zero = asdim_upper_at(P, 4, 0);
    CHECK(zero.exact);
    CHECK(zero.mesh == asdim0_response(P, {4}).at1(0));

    FiniteMetricSpace Z = FiniteMetricSpace::z_window(0, 20);
    AsdimUpperResult one = asdim_upper_at(Z, 2, 1);
    CHECK(!one.exact);
    CHECK(multiplicity(one.cover, Z) <= 2);
    CHECK(is_refinement(ball_cover(Z, 2), one.cover));
    CHECK(one.mesh == interval_cover_oracle(20, 2));

    AsdimUpperResult big = asdim_upper_at(Z, 2, 40);
    CHECK(big.mesh <= ball_cover(Z, 2).mesh);

    CHECK_THROWS_AS(asdim_upper_at(Z, 1, -1), ValidationError);
}

TEST_CASE("asdim_upper_at is monotone in n") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 8; ++trial) {
        FiniteMetricSpace X = random_space(rng, 25);
        for (int n = 0; n < 3; ++n) {
            AsdimUpperResult a = asdim_upper_at(X, 2, n);
            AsdimUpperResult b = asdim_upper_at(X, 2, n + 1);
            CHECK(b.mesh <= a.mesh);
            CHECK(multiplicity(b.cover, X) <= n + 2);
        }
    }
}

TEST_CASE("transfer_cover") {
    LSMap fold = corpus_map("fold", 10);
    ScaledCover V = ball_cover(*fold.codomain, 2);
    ScaledCover W = transfer_cover(fold, V, 1);
    CHECK(multiplicity(W, *fold.domain) <= multiplicity(V, *fold.codomain));
    CHECK(is_refinement(ball_cover(*fold.domain, 1), W));
    CHECK(W.mesh <= light_response(fold, {1}, {2}).at2(0, 0));

    LSMap id = corpus_map("identity", 10);
    ScaledCover Vs = ball_cover(*id.codomain, 2);
    ScaledCover Wi = transfer_cover(id, Vs, 1);
    CHECK(multiplicity(Wi, *id.domain) == multiplicity(Vs, *id.codomain));
    CHECK(Wi.blocks == Vs.blocks);

    LSMap c = corpus_map("constant", 10);
    ScaledCover single = make_cover(*c.codomain, {{0}});
    ScaledCover Wc = transfer_cover(c, single, 1);
    CHECK(Wc.blocks == std::vector<PointSet>{c.domain->all_points()});
    CHECK(Wc.mesh == 10);

    // precondition: 0-balls cannot absorb the image of a 1-ball under fold
    ScaledCover tight = ball_cover(*fold.codomain, 0);
    CHECK_THROWS_AS(transfer_cover(fold, tight, 1), ValidationError);
}

TEST_CASE("finite_union_merge") {
    FiniteMetricSpace Z = FiniteMetricSpace::z_window(0, 32);
    PointSet evens, odds;
    for (int i = 0; i <= 32; ++i) (i % 2 ? odds : evens).push_back(i);
    CHECK(finite_union_merge(Z, evens, odds, 2) == 32);

    CHECK(finite_union_merge(Z, Z.all_points(), {}, 1) == asdim0_response(Z, {1}).at1(0));

    FiniteMetricSpace P = powers_of_two(6);
    PointSet pe, po;
    for (int i = 0; i <= 6; ++i) (i % 2 ? po : pe).push_back(i);
    double mesh = finite_union_merge(P, pe, po, 1);
    CHECK(is_finite(mesh));
    CHECK(mesh <= 2);

    CHECK_THROWS_AS(finite_union_merge(Z, evens, {}, 1), ValidationError);
}
