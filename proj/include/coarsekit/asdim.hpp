#pragma once

#include "coarsekit/cover.hpp"
#include "coarsekit/light.hpp"
#include "coarsekit/lsmap.hpp"

namespace coarsekit {

/// Subspaces of a common ambient window, treated as a disjoint union:
/// chains never cross members.
struct UniformFamily {
    std::vector<PointSet> members;
};

/// D(r) = max class diameter of the r-components of the whole window.
ResponseTable asdim0_response(const FiniteMetricSpace& X, const std::vector<double>& r_grid);

/// D(r) = max over members of the r-component mesh inside that member.
ResponseTable uniform_asdim0_response(const FiniteMetricSpace& X, const UniformFamily& F,
                                      const std::vector<double>& r_grid);

/// A cover coarsening ball_cover(X, r) with point multiplicity <= n+1 and its
/// mesh. Exact for n = 0 (r-components); greedy sweep heuristic otherwise.
struct AsdimUpperResult {
    double mesh = kInf;
    ScaledCover cover;
    bool exact = false;
};

AsdimUpperResult asdim_upper_at(const FiniteMetricSpace& X, double r, int n);

/// W = r-components of preimages of V-blocks. Requires V to coarsen
/// f(ball_cover(X, r)); multiplicity(W) <= multiplicity(V).
ScaledCover transfer_cover(const LSMap& f, const ScaledCover& V, double r);

/// Finite-union merge: builds the coarsening of the r-components of X from
/// the restricted component families of A and B and returns its mesh.
double finite_union_merge(const FiniteMetricSpace& X, const PointSet& A, const PointSet& B,
                          double r);

} // namespace coarsekit
