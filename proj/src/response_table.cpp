#include "coarsekit/response_table.hpp"

#include <algorithm>

namespace coarsekit {

ResponseTable::ResponseTable(std::vector<Axis> axes) : axes_(std::move(axes)) {
    std::size_t n = 1;
    for (const auto& a : axes_) {
        if (a.grid.empty()) throw ValidationError("empty axis grid: " + a.name);
        if (!std::is_sorted(a.grid.begin(), a.grid.end()))
            throw ValidationError("axis grid not ascending: " + a.name);
        n *= a.grid.size();
    }
    values_.assign(n, 0.0);
}

std::size_t ResponseTable::flat(const std::vector<std::size_t>& idx) const {
    if (idx.size() != axes_.size()) throw ValidationError("axis index arity mismatch");
    std::size_t f = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] >= axes_[k].grid.size()) throw ValidationError("axis index out of range");
        f = f * axes_[k].grid.size() + idx[k];
    }
    return f;
}

std::vector<std::size_t> ResponseTable::unflatten(std::size_t flat_index) const {
    std::vector<std::size_t> idx(axes_.size());
    for (std::size_t k = axes_.size(); k-- > 0;) {
        idx[k] = flat_index % axes_[k].grid.size();
        flat_index /= axes_[k].grid.size();
    }
    return idx;
}

double ResponseTable::lookup(const std::vector<double>& coords) const {
    std::vector<std::size_t> idx(axes_.size());
    for (std::size_t k = 0; k < axes_.size(); ++k) {
        auto it = std::find(axes_[k].grid.begin(), axes_[k].grid.end(), coords[k]);
        if (it == axes_[k].grid.end())
            throw ValidationError("coordinate not on axis " + axes_[k].name);
        idx[k] = static_cast<std::size_t>(it - axes_[k].grid.begin());
    }
    return at(idx);
}

std::vector<double> grid_range(double start, double stop, double step) {
    if (step <= 0) throw ValidationError("grid step must be positive");
    std::vector<double> g;
    for (double v = start; v <= stop + 1e-12; v += step) g.push_back(v);
    if (g.empty()) throw ValidationError("empty grid range");
    return g;
}

} // namespace coarsekit
