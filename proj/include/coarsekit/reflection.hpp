#pragma once

#include "coarsekit/cover.hpp"
#include "coarsekit/lsmap.hpp"

namespace coarsekit {

/// X re-metrized so that r-components become bounded: d_I(x, x') is the least
/// grid scale at which x and x' fall into one chain component, inf if they
/// never merge within the grid.
struct ReflectionMetric {
    SpacePtr space; // carrier with d_I
    double grid_bound = 0.0;
};

ReflectionMetric reflect_0(const FiniteMetricSpace& X, const std::vector<double>& r_grid);

/// For each s: least r <= r_bound such that the preimage of every s-component
/// of the codomain lies inside a single r-component of the domain; inf (top)
/// when not achieved.
ResponseTable ei_defect(const LSMap& f, const std::vector<double>& s_grid, double r_bound);

} // namespace coarsekit
