#pragma once

#include <string>
#include <vector>

#include "coarsekit/errors.hpp"
#include "coarsekit/extended.hpp"

namespace coarsekit {

/// Named ascending scale grid.
struct Axis {
    std::string name;
    std::vector<double> grid;
};

/// Mapping from grid tuples to extended reals, stored row-major over the
/// axis grids. The desk-scale witness of a coarse property.
class ResponseTable {
public:
    ResponseTable() = default;
    explicit ResponseTable(std::vector<Axis> axes);

    const std::vector<Axis>& axes() const { return axes_; }
    std::size_t cell_count() const { return values_.size(); }

    double& at(const std::vector<std::size_t>& idx) { return values_[flat(idx)]; }
    double at(const std::vector<std::size_t>& idx) const { return values_[flat(idx)]; }

    double& at1(std::size_t i) { return values_[flat({i})]; }
    double at1(std::size_t i) const { return values_[flat({i})]; }
    double& at2(std::size_t i, std::size_t j) { return values_[flat({i, j})]; }
    double at2(std::size_t i, std::size_t j) const { return values_[flat({i, j})]; }

    /// Value at a grid point located by axis values (exact match).
    double lookup(const std::vector<double>& coords) const;

    const std::vector<double>& raw() const { return values_; }
    std::vector<double>& raw() { return values_; }

    /// Expand a flat cell index into per-axis grid indices.
    std::vector<std::size_t> unflatten(std::size_t flat_index) const;

private:
    std::size_t flat(const std::vector<std::size_t>& idx) const;
    std::vector<Axis> axes_;
    std::vector<double> values_;
};

/// Axis helper: {start, start+step, ..., <=stop}.
std::vector<double> grid_range(double start, double stop, double step = 1.0);

} // namespace coarsekit
