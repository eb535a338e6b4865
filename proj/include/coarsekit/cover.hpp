#pragma once

#include <vector>

#include "coarsekit/metric_space.hpp"

namespace coarsekit {

/// A uniformly bounded family at a numeric scale: blocks plus recorded mesh.
struct ScaledCover {
    std::vector<PointSet> blocks;
    double scale = 0.0;
    double mesh = 0.0;
};

/// Disjoint classes covering a carrier subset.
struct Partition {
    std::vector<PointSet> classes; // sorted by least point index
    double class_mesh = 0.0;       // max class diameter
};

ScaledCover make_cover(const FiniteMetricSpace& X, std::vector<PointSet> blocks, double scale = 0.0);

/// st(B, U): union of the blocks of U meeting B.
PointSet star_set(const PointSet& B, const ScaledCover& U);

/// st(B, U) block-wise; mesh recomputed against X.
ScaledCover star_family(const FiniteMetricSpace& X, const ScaledCover& B, const ScaledCover& U);

/// U plus a singleton for every uncovered point of X; mesh unchanged.
ScaledCover trivial_extension(const ScaledCover& U, const FiniteMetricSpace& X);

/// Closed balls B(y, s) around every point; mesh <= 2s.
ScaledCover ball_cover(const FiniteMetricSpace& X, double s);

/// Maximal chain-connected subsets of the carrier under steps of distance <= r
/// taken inside the carrier.
Partition components_at(const FiniteMetricSpace& X, const PointSet& carrier, double r);

/// Chain components of the carrier under the relation "some block of U
/// contains both points"; chains stay inside the carrier.
Partition components_under(const FiniteMetricSpace& X, const PointSet& carrier, const ScaledCover& U);

/// Max over blocks F of the family of the class mesh of components_at(X, F, r).
double component_mesh(const FiniteMetricSpace& X, const ScaledCover& family, double r);

/// True iff every block of U is contained in some block of V.
bool is_refinement(const ScaledCover& U, const ScaledCover& V);

/// Max number of blocks containing a single point.
int multiplicity(const ScaledCover& U, const FiniteMetricSpace& X);

} // namespace coarsekit
