#include "coarsekit/exactness.hpp"

#include <algorithm>
#include <cmath>

#include "coarsekit/errors.hpp"

namespace coarsekit {

void PartitionOfUnity::validate(double tol) const {
    for (std::size_t x = 0; x < rows.size(); ++x) {
        double sum = 0.0;
        int prev = -1;
        for (const auto& [v, w] : rows[x]) {
            if (v < 0 || v >= static_cast<int>(vertices.size()))
                throw ValidationError("weight refers to unknown vertex");
            if (v <= prev) throw ValidationError("weight row not sorted by vertex");
            if (w < 0) throw ValidationError("negative weight");
            prev = v;
            sum += w;
        }
        if (std::abs(sum - 1.0) > tol)
            throw ValidationError("weight row does not sum to 1 at point " + std::to_string(x));
    }
}

double pou_distance(const std::vector<std::pair<int, double>>& a,
                    const std::vector<std::pair<int, double>>& b) {
    double acc = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
            acc += std::abs(a[i++].second);
        else if (i == a.size() || b[j].first < a[i].first)
            acc += std::abs(b[j++].second);
        else {
            acc += std::abs(a[i].second - b[j].second);
            ++i;
            ++j;
        }
    }
    return acc;
}

double pou_mesh(const PartitionOfUnity& phi, const FiniteMetricSpace& X, double r) {
    if (static_cast<int>(phi.rows.size()) != X.size())
        throw ValidationError("partition of unity is not total on the space");
    double m = 0.0;
    for (int x = 0; x < X.size(); ++x)
        for (int x2 = x + 1; x2 < X.size(); ++x2)
            if (X.d(x, x2) <= r)
                m = std::max(m, pou_distance(phi.rows[static_cast<std::size_t>(x)],
                                             phi.rows[static_cast<std::size_t>(x2)]));
    return m;
}

double star_preimage_mesh(const PartitionOfUnity& phi, const FiniteMetricSpace& X) {
    if (static_cast<int>(phi.rows.size()) != X.size())
        throw ValidationError("partition of unity is not total on the space");
    std::vector<PointSet> supports(phi.vertices.size());
    for (int x = 0; x < X.size(); ++x)
        for (const auto& [v, w] : phi.rows[static_cast<std::size_t>(x)])
            if (w != 0.0) supports[static_cast<std::size_t>(v)].push_back(x);
    double m = 0.0;
    for (const auto& sup : supports) m = std::max(m, X.diameter(sup));
    return m;
}

PartitionOfUnity make_pou_from_cover(const FiniteMetricSpace& X, const ScaledCover& cover,
                                     double L) {
    if (L <= 0) throw ValidationError("sharpness L must be positive");
    PartitionOfUnity phi;
    phi.vertices.reserve(cover.blocks.size());
    for (std::size_t b = 0; b < cover.blocks.size(); ++b) phi.vertices.push_back("U" + std::to_string(b));
    phi.rows.resize(static_cast<std::size_t>(X.size()));
    for (int x = 0; x < X.size(); ++x) {
        auto& row = phi.rows[static_cast<std::size_t>(x)];
        double total = 0.0;
        for (std::size_t b = 0; b < cover.blocks.size(); ++b) {
            double dist = kInf;
            for (int p : cover.blocks[b]) dist = std::min(dist, X.d(x, p));
            double w = is_finite(dist) ? std::max(0.0, 1.0 - dist / L) : 0.0;
            if (w > 0) {
                row.emplace_back(static_cast<int>(b), w);
                total += w;
            }
        }
        if (total <= 0)
            throw ValidationError("degenerate partition of unity: no block within reach of point " +
                                  std::to_string(x));
        for (auto& [v, w] : row) w /= total;
    }
    return phi;
}

PartitionOfUnity transfer_pou(const LSMap& f, const PartitionOfUnity& phi, double r) {
    f.validate();
    if (static_cast<int>(phi.rows.size()) != f.codomain->size())
        throw ValidationError("partition of unity is not total on the codomain");
    const auto& X = *f.domain;
    PartitionOfUnity psi;
    psi.rows.resize(static_cast<std::size_t>(X.size()));
    // component index of each point inside the star preimage of each vertex
    for (std::size_t s = 0; s < phi.vertices.size(); ++s) {
        PointSet star_pre;
        for (int x = 0; x < X.size(); ++x) {
            for (const auto& [v, w] : phi.rows[static_cast<std::size_t>(f(x))])
                if (v == static_cast<int>(s) && w != 0.0) {
                    star_pre.push_back(x);
                    break;
                }
        }
        if (star_pre.empty()) continue;
        Partition comps = components_at(X, star_pre, r);
        for (std::size_t ord = 0; ord < comps.classes.size(); ++ord) {
            const int j = static_cast<int>(psi.vertices.size());
            psi.vertices.push_back("(" + phi.vertices[s] + "," + std::to_string(ord) + ")");
            for (int x : comps.classes[ord]) {
                double w = 0.0;
                for (const auto& [v, wv] : phi.rows[static_cast<std::size_t>(f(x))])
                    if (v == static_cast<int>(s)) w = wv;
                psi.rows[static_cast<std::size_t>(x)].emplace_back(j, w);
            }
        }
    }
    psi.validate();
    return psi;
}

} // namespace coarsekit
