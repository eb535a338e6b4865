#include "coarsekit/asdim.hpp"

#include <algorithm>
#include <set>

#include "coarsekit/errors.hpp"

namespace coarsekit {

ResponseTable asdim0_response(const FiniteMetricSpace& X, const std::vector<double>& r_grid) {
    ResponseTable t({Axis{"r", r_grid}});
    const PointSet all = X.all_points();
    for (std::size_t k = 0; k < r_grid.size(); ++k)
        t.at1(k) = components_at(X, all, r_grid[k]).class_mesh;
    return t;
}

ResponseTable uniform_asdim0_response(const FiniteMetricSpace& X, const UniformFamily& F,
                                      const std::vector<double>& r_grid) {
    ResponseTable t({Axis{"r", r_grid}});
    for (std::size_t k = 0; k < r_grid.size(); ++k) {
        double worst = 0.0;
        for (const auto& member : F.members)
            worst = std::max(worst, components_at(X, member, r_grid[k]).class_mesh);
        t.at1(k) = worst;
    }
    return t;
}

namespace {

// Sweep order: by distance from point 0 (inf last), then by index.
std::vector<int> sweep_order(const FiniteMetricSpace& X) {
    std::vector<int> order = X.all_points();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        double da = X.d(0, a), db = X.d(0, b);
        if (is_finite(da) != is_finite(db)) return is_finite(da);
        return da < db;
    });
    return order;
}

// Consecutive sweep groups of diameter <= D, each expanded by the r-balls of
// its members; every r-ball centered in a group lands inside its block, so the
// result coarsens ball_cover(X, r) by construction.
ScaledCover sweep_cover(const FiniteMetricSpace& X, const std::vector<int>& order,
                        double D, double r) {
    std::vector<PointSet> groups;
    for (int p : order) {
        bool extend = false;
        if (!groups.empty()) {
            extend = true;
            for (int q : groups.back())
                if (!(X.d(p, q) <= D)) {
                    extend = false;
                    break;
                }
        }
        if (extend)
            groups.back().push_back(p);
        else
            groups.push_back({p});
    }
    std::vector<PointSet> blocks;
    blocks.reserve(groups.size());
    for (auto& g : groups) {
        PointSet block;
        for (int p : g) {
            PointSet ball = X.ball(p, r);
            block.insert(block.end(), ball.begin(), ball.end());
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        blocks.push_back(std::move(block));
    }
    return make_cover(X, std::move(blocks), D + 2 * r);
}

} // namespace

AsdimUpperResult asdim_upper_at(const FiniteMetricSpace& X, double r, int n) {
    if (n < 0) throw ValidationError("asdim upper bound requires n >= 0");
    const PointSet all = X.all_points();
    AsdimUpperResult best;

    // n = 0 is definitional: the r-components themselves.
    Partition comps = components_at(X, all, r);
    best.cover = make_cover(X, comps.classes, r);
    best.mesh = best.cover.mesh;
    best.exact = n == 0;
    if (n == 0) return best;

    const ScaledCover balls = ball_cover(X, r);
    if (multiplicity(balls, X) <= n + 1 && balls.mesh < best.mesh) {
        best.cover = balls;
        best.mesh = balls.mesh;
    }

    std::set<double> candidates{0.0};
    for (int i = 0; i < X.size(); ++i)
        for (int j = i + 1; j < X.size(); ++j)
            if (is_finite(X.d(i, j))) candidates.insert(X.d(i, j));
    const std::vector<int> order = sweep_order(X);
    // smaller multiplicity budgets yield covers valid for n too; taking the
    // best over budgets keeps the achieved mesh non-increasing in n
    for (int budget = 2; budget <= n + 1; ++budget) {
        for (double D : candidates) {
            ScaledCover W = sweep_cover(X, order, D, r);
            if (multiplicity(W, X) <= budget) {
                if (W.mesh < best.mesh) {
                    best.cover = W;
                    best.mesh = W.mesh;
                }
                break;
            }
        }
    }
    return best;
}

ScaledCover transfer_cover(const LSMap& f, const ScaledCover& V, double r) {
    f.validate();
    const auto& X = *f.domain;
    // precondition: V coarsens f(ball_cover(X, r))
    for (int x = 0; x < X.size(); ++x) {
        PointSet image;
        for (int z : X.ball(x, r)) image.push_back(f(z));
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        bool contained = false;
        for (const auto& v : V.blocks)
            if (std::includes(v.begin(), v.end(), image.begin(), image.end())) {
                contained = true;
                break;
            }
        if (!contained)
            throw ValidationError("cover transfer: codomain cover does not coarsen the image of the " +
                                  std::to_string(r) + "-ball at point " + std::to_string(x));
    }
    return light_family_over(f, r, V);
}

double finite_union_merge(const FiniteMetricSpace& X, const PointSet& A, const PointSet& B,
                          double r) {
    {
        std::set<int> uni(A.begin(), A.end());
        uni.insert(B.begin(), B.end());
        if (static_cast<int>(uni.size()) != X.size())
            throw ValidationError("finite union merge requires A union B = X");
    }
    const ScaledCover balls = ball_cover(X, r);

    auto half_components = [&](const PointSet& own, const PointSet& other) {
        Partition v_own = components_at(X, own, r);
        Partition v_other = components_at(X, other, r);
        std::vector<PointSet> family = v_own.classes;
        for (const auto& cls : v_other.classes) {
            PointSet st = star_set(cls, balls);
            PointSet restricted;
            std::set_intersection(st.begin(), st.end(), own.begin(), own.end(),
                                  std::back_inserter(restricted));
            if (restricted.empty()) continue;
            // coarsen by the own-side components it meets
            PointSet expanded = restricted;
            for (const auto& vc : v_own.classes) {
                bool meets = false;
                for (int p : vc)
                    if (std::binary_search(restricted.begin(), restricted.end(), p)) {
                        meets = true;
                        break;
                    }
                if (meets) expanded.insert(expanded.end(), vc.begin(), vc.end());
            }
            std::sort(expanded.begin(), expanded.end());
            expanded.erase(std::unique(expanded.begin(), expanded.end()), expanded.end());
            family.push_back(std::move(expanded));
        }
        return components_under(X, own, make_cover(X, std::move(family)));
    };

    Partition w1 = half_components(A, B);
    Partition w2 = half_components(B, A);

    auto set_dist = [&](const PointSet& a, const PointSet& b) {
        double m = kInf;
        for (int p : a)
            for (int q : b) m = std::min(m, X.d(p, q));
        return m;
    };

    double mesh = 0.0;
    auto merge_side = [&](const std::vector<PointSet>& own, const std::vector<PointSet>& other) {
        for (const auto& blk : own) {
            PointSet merged = blk;
            for (const auto& o : other)
                if (set_dist(blk, o) <= r) merged.insert(merged.end(), o.begin(), o.end());
            std::sort(merged.begin(), merged.end());
            merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
            mesh = std::max(mesh, X.diameter(merged));
        }
    };
    merge_side(w1.classes, w2.classes);
    merge_side(w2.classes, w1.classes);
    return mesh;
}

} // namespace coarsekit
