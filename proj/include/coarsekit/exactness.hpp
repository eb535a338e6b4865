#pragma once

#include <string>

#include "coarsekit/cover.hpp"
#include "coarsekit/lsmap.hpp"

namespace coarsekit {

/// phi: X -> Delta(S) with the l1 metric; weight rows are finitely supported
/// and sum to 1.
struct PartitionOfUnity {
    std::vector<std::string> vertices;
    // per point: (vertex index, weight), sorted by vertex index
    std::vector<std::vector<std::pair<int, double>>> rows;

    void validate(double tol = 1e-9) const;
};

/// l1 distance between two weight rows.
double pou_distance(const std::vector<std::pair<int, double>>& a,
                    const std::vector<std::pair<int, double>>& b);

/// Max l1 distance |phi(x) - phi(x')|_1 over pairs with d(x, x') <= r.
double pou_mesh(const PartitionOfUnity& phi, const FiniteMetricSpace& X, double r);

/// Max diameter over vertices of {x : phi(x)_s != 0}.
double star_preimage_mesh(const PartitionOfUnity& phi, const FiniteMetricSpace& X);

/// Distance-weighted bump partition subordinate to a cover: weights
/// proportional to max(0, 1 - d(x, block)/L).
PartitionOfUnity make_pou_from_cover(const FiniteMetricSpace& X, const ScaledCover& cover, double L);

/// The coarsely-light transfer: new vertices are the r-components of
/// point-inverses of vertex stars of phi o f; weights are inherited.
PartitionOfUnity transfer_pou(const LSMap& f, const PartitionOfUnity& phi, double r);

} // namespace coarsekit
