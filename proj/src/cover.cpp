#include "coarsekit/cover.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "coarsekit/errors.hpp"

namespace coarsekit {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

std::vector<PointSet> classes_from(UnionFind& uf, const PointSet& carrier) {
    std::map<int, PointSet> by_root;
    for (std::size_t i = 0; i < carrier.size(); ++i) by_root[uf.find(static_cast<int>(i))].push_back(carrier[i]);
    std::vector<PointSet> out;
    out.reserve(by_root.size());
    for (auto& [root, cls] : by_root) {
        std::sort(cls.begin(), cls.end());
        out.push_back(std::move(cls));
    }
    std::sort(out.begin(), out.end(),
              [](const PointSet& a, const PointSet& b) { return a.front() < b.front(); });
    return out;
}

double cover_mesh(const FiniteMetricSpace& X, const std::vector<PointSet>& blocks) {
    double m = 0.0;
    for (const auto& b : blocks) m = std::max(m, X.diameter(b));
    return m;
}

} // namespace

ScaledCover make_cover(const FiniteMetricSpace& X, std::vector<PointSet> blocks, double scale) {
    for (auto& b : blocks) {
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        for (int p : b)
            if (p < 0 || p >= X.size()) throw ValidationError("cover block point out of range");
    }
    ScaledCover c{std::move(blocks), scale, 0.0};
    c.mesh = cover_mesh(X, c.blocks);
    return c;
}

PointSet star_set(const PointSet& B, const ScaledCover& U) {
    std::set<int> acc;
    for (const auto& block : U.blocks) {
        bool meets = false;
        for (int p : block)
            if (std::binary_search(B.begin(), B.end(), p)) {
                meets = true;
                break;
            }
        if (meets) acc.insert(block.begin(), block.end());
    }
    return PointSet(acc.begin(), acc.end());
}

ScaledCover star_family(const FiniteMetricSpace& X, const ScaledCover& B, const ScaledCover& U) {
    std::vector<PointSet> blocks;
    blocks.reserve(B.blocks.size());
    for (const auto& b : B.blocks) blocks.push_back(star_set(b, U));
    return make_cover(X, std::move(blocks), B.scale + U.scale);
}

ScaledCover trivial_extension(const ScaledCover& U, const FiniteMetricSpace& X) {
    std::vector<bool> covered(X.size(), false);
    for (const auto& b : U.blocks)
        for (int p : b) covered[p] = true;
    ScaledCover out = U;
    for (int p = 0; p < X.size(); ++p)
        if (!covered[p]) out.blocks.push_back({p});
    return out;
}

ScaledCover ball_cover(const FiniteMetricSpace& X, double s) {
    if (s < 0) throw ValidationError("ball cover scale must be >= 0");
    std::vector<PointSet> blocks;
    blocks.reserve(X.size());
    for (int y = 0; y < X.size(); ++y) blocks.push_back(X.ball(y, s));
    return make_cover(X, std::move(blocks), s);
}

Partition components_at(const FiniteMetricSpace& X, const PointSet& carrier, double r) {
    UnionFind uf(static_cast<int>(carrier.size()));
    for (std::size_t a = 0; a < carrier.size(); ++a)
        for (std::size_t b = a + 1; b < carrier.size(); ++b)
            if (X.d(carrier[a], carrier[b]) <= r) uf.unite(static_cast<int>(a), static_cast<int>(b));
    Partition p;
    p.classes = classes_from(uf, carrier);
    p.class_mesh = cover_mesh(X, p.classes);
    return p;
}

Partition components_under(const FiniteMetricSpace& X, const PointSet& carrier, const ScaledCover& U) {
    std::vector<int> pos(X.size(), -1);
    for (std::size_t i = 0; i < carrier.size(); ++i) pos[carrier[i]] = static_cast<int>(i);
    UnionFind uf(static_cast<int>(carrier.size()));
    for (const auto& block : U.blocks) {
        int first = -1;
        for (int p : block) {
            if (pos[p] < 0) continue;
            if (first < 0)
                first = pos[p];
            else
                uf.unite(first, pos[p]);
        }
    }
    Partition p;
    p.classes = classes_from(uf, carrier);
    p.class_mesh = cover_mesh(X, p.classes);
    return p;
}

double component_mesh(const FiniteMetricSpace& X, const ScaledCover& family, double r) {
    double m = 0.0;
    for (const auto& block : family.blocks)
        m = std::max(m, components_at(X, block, r).class_mesh);
    return m;
}

bool is_refinement(const ScaledCover& U, const ScaledCover& V) {
    for (const auto& u : U.blocks) {
        bool contained = false;
        for (const auto& v : V.blocks)
            if (std::includes(v.begin(), v.end(), u.begin(), u.end())) {
                contained = true;
                break;
            }
        if (!contained) return false;
    }
    return true;
}

int multiplicity(const ScaledCover& U, const FiniteMetricSpace& X) {
    std::vector<int> count(X.size(), 0);
    for (const auto& b : U.blocks)
        for (int p : b) ++count[p];
    return count.empty() ? 0 : *std::max_element(count.begin(), count.end());
}

} // namespace coarsekit
