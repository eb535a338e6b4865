#pragma once

#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

#include "coarsekit/extended.hpp"

namespace coarsekit {

using PointSet = std::vector<int>; // sorted point indices

/// A finite window of a large-scale space: points 0..n-1 with a symmetric
/// pseudo-metric admitting +inf. Point order is the load order and is the
/// tie-breaking order everywhere.
class FiniteMetricSpace {
public:
    FiniteMetricSpace() = default;
    FiniteMetricSpace(Eigen::MatrixXd dist, std::optional<int> basepoint = std::nullopt,
                      std::vector<std::string> labels = {});

    int size() const { return static_cast<int>(dist_.rows()); }
    double d(int i, int j) const { return dist_(i, j); }
    const Eigen::MatrixXd& matrix() const { return dist_; }
    std::optional<int> basepoint() const { return basepoint_; }
    void set_basepoint(std::optional<int> b) { basepoint_ = b; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// All points as a sorted set.
    PointSet all_points() const;

    /// Closed ball around a center.
    PointSet ball(int center, double radius) const;

    /// Diameter of a subset; empty and singleton sets have diameter 0.
    double diameter(const PointSet& subset) const;

    /// Largest finite distance realized in the space (0 for <=1 point).
    double finite_diameter() const;

    /// Checks symmetry, zero diagonal, non-negativity and the triangle
    /// inequality on finite values. Throws ValidationError on violation.
    void validate(double tol = 1e-9) const;

    /// Single point space.
    static FiniteMetricSpace point();

    /// Integer interval [lo..hi] with |x-y| metric; basepoint at `base` if given.
    static FiniteMetricSpace z_window(int lo, int hi, std::optional<int> base_value = std::nullopt);

    /// Shortest-path metric of a weighted undirected graph; inf across
    /// disconnected parts.
    static FiniteMetricSpace from_graph(int n, const std::vector<std::tuple<int, int, double>>& edges,
                                        std::optional<int> basepoint = std::nullopt);

    /// Point cloud with the euclidean or l-infinity metric.
    static FiniteMetricSpace from_points(const std::vector<std::vector<double>>& coords,
                                         const std::string& metric,
                                         std::optional<int> basepoint = std::nullopt);

private:
    Eigen::MatrixXd dist_;
    std::optional<int> basepoint_;
    std::vector<std::string> labels_;
};

} // namespace coarsekit
