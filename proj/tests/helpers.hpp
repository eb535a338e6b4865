#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "coarsekit/cover.hpp"
#include "coarsekit/lsmap.hpp"
#include "coarsekit/metric_space.hpp"

namespace coarsekit::testing {

/// Random connected-ish weighted graph metric, <= max_pts points.
inline FiniteMetricSpace random_space(std::mt19937& rng, int max_pts = 60) {
    std::uniform_int_distribution<int> size_dist(2, max_pts);
    const int n = size_dist(rng);
    std::uniform_int_distribution<int> weight(1, 4);
    std::uniform_int_distribution<int> node(0, n - 1);
    std::vector<std::tuple<int, int, double>> edges;
    // spanning chain plus noise; occasionally drop a link to exercise inf
    std::uniform_int_distribution<int> coin(0, 9);
    for (int i = 1; i < n; ++i)
        if (coin(rng) != 0) edges.emplace_back(i - 1, i, static_cast<double>(weight(rng)));
    const int extra = n / 2;
    for (int k = 0; k < extra; ++k) {
        int a = node(rng), b = node(rng);
        if (a != b) edges.emplace_back(a, b, static_cast<double>(weight(rng)));
    }
    return FiniteMetricSpace::from_graph(n, edges, 0);
}

/// Brute-force transitive closure of the pair relation d <= r inside the
/// carrier; independent of the union-find implementation under test.
inline std::vector<PointSet> oracle_components(const FiniteMetricSpace& X, const PointSet& carrier,
                                               double r) {
    std::vector<std::set<int>> classes;
    for (int p : carrier) classes.push_back({p});
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < classes.size() && !merged; ++i)
            for (std::size_t j = i + 1; j < classes.size() && !merged; ++j) {
                for (int p : classes[i]) {
                    bool hit = false;
                    for (int q : classes[j])
                        if (X.d(p, q) <= r) {
                            hit = true;
                            break;
                        }
                    if (hit) {
                        classes[i].insert(classes[j].begin(), classes[j].end());
                        classes.erase(classes.begin() + static_cast<long>(j));
                        merged = true;
                        break;
                    }
                }
            }
    }
    std::vector<PointSet> out;
    for (const auto& c : classes) out.emplace_back(c.begin(), c.end());
    std::sort(out.begin(), out.end(),
              [](const PointSet& a, const PointSet& b) { return a.front() < b.front(); });
    return out;
}

/// Naive light-family mesh: enumerate preimages of s-balls and take oracle
/// component diameters.
inline double oracle_light_mesh(const LSMap& f, double r, double s) {
    double mesh = 0.0;
    for (int y = 0; y < f.codomain->size(); ++y) {
        PointSet pre;
        for (int x = 0; x < f.domain->size(); ++x)
            if (f.codomain->d(f(x), y) <= s) pre.push_back(x);
        if (pre.empty()) continue;
        for (const auto& cls : oracle_components(*f.domain, pre, r))
            mesh = std::max(mesh, f.domain->diameter(cls));
    }
    return mesh;
}

inline SpacePtr share(FiniteMetricSpace X) {
    return std::make_shared<FiniteMetricSpace>(std::move(X));
}

inline SpacePtr z_space(int lo, int hi, std::optional<int> base = 0) {
    return share(FiniteMetricSpace::z_window(lo, hi, base));
}

} // namespace coarsekit::testing
