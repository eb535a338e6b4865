#include "coarsekit/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <tuple>

#include "coarsekit/errors.hpp"

namespace coarsekit {

FiniteMetricSpace::FiniteMetricSpace(Eigen::MatrixXd dist, std::optional<int> basepoint,
                                     std::vector<std::string> labels)
    : dist_(std::move(dist)), basepoint_(basepoint), labels_(std::move(labels)) {
    if (dist_.rows() != dist_.cols())
        throw ValidationError("distance matrix must be square");
    if (basepoint_ && (*basepoint_ < 0 || *basepoint_ >= size()))
        throw ValidationError("basepoint out of range");
}

PointSet FiniteMetricSpace::all_points() const {
    PointSet p(size());
    std::iota(p.begin(), p.end(), 0);
    return p;
}

PointSet FiniteMetricSpace::ball(int center, double radius) const {
    PointSet out;
    for (int i = 0; i < size(); ++i)
        if (dist_(center, i) <= radius) out.push_back(i);
    return out;
}

double FiniteMetricSpace::diameter(const PointSet& subset) const {
    double m = 0.0;
    for (std::size_t a = 0; a < subset.size(); ++a)
        for (std::size_t b = a + 1; b < subset.size(); ++b)
            m = std::max(m, dist_(subset[a], subset[b]));
    return m;
}

double FiniteMetricSpace::finite_diameter() const {
    double m = 0.0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (is_finite(dist_(i, j))) m = std::max(m, dist_(i, j));
    return m;
}

void FiniteMetricSpace::validate(double tol) const {
    const int n = size();
    for (int i = 0; i < n; ++i) {
        if (dist_(i, i) != 0.0)
            throw ValidationError("d(x,x) != 0 at point " + std::to_string(i));
        for (int j = 0; j < n; ++j) {
            if (std::isnan(dist_(i, j)) || dist_(i, j) < 0.0)
                throw ValidationError("negative or NaN distance");
            if (dist_(i, j) != dist_(j, i))
                throw ValidationError("asymmetric distance at (" + std::to_string(i) + "," +
                                      std::to_string(j) + ")");
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!is_finite(dist_(i, j))) continue;
            for (int k = 0; k < n; ++k) {
                if (!is_finite(dist_(i, k)) || !is_finite(dist_(k, j))) continue;
                if (dist_(i, j) > dist_(i, k) + dist_(k, j) + tol) {
                    std::ostringstream os;
                    os << "triangle inequality violated at (" << i << "," << j << "," << k << ")";
                    throw ValidationError(os.str());
                }
            }
        }
}

FiniteMetricSpace FiniteMetricSpace::point() {
    return FiniteMetricSpace(Eigen::MatrixXd::Zero(1, 1), 0);
}

FiniteMetricSpace FiniteMetricSpace::z_window(int lo, int hi, std::optional<int> base_value) {
    if (hi < lo) throw ValidationError("empty window");
    const int n = hi - lo + 1;
    Eigen::MatrixXd d(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d(i, j) = std::abs(i - j);
    std::optional<int> base;
    if (base_value) {
        if (*base_value < lo || *base_value > hi) throw ValidationError("basepoint outside window");
        base = *base_value - lo;
    }
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(lo + i);
    return FiniteMetricSpace(std::move(d), base, std::move(labels));
}

FiniteMetricSpace FiniteMetricSpace::from_graph(int n,
                                                const std::vector<std::tuple<int, int, double>>& edges,
                                                std::optional<int> basepoint) {
    Eigen::MatrixXd d = Eigen::MatrixXd::Constant(n, n, kInf);
    for (int i = 0; i < n; ++i) d(i, i) = 0.0;
    for (const auto& [a, b, w] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw ValidationError("edge endpoint out of range");
        if (w < 0) throw ValidationError("negative edge weight");
        d(a, b) = std::min(d(a, b), w);
        d(b, a) = d(a, b);
    }
    // Floyd-Warshall
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (!is_finite(d(i, k))) continue;
            for (int j = 0; j < n; ++j)
                d(i, j) = std::min(d(i, j), d(i, k) + d(k, j));
        }
    return FiniteMetricSpace(std::move(d), basepoint);
}

FiniteMetricSpace FiniteMetricSpace::from_points(const std::vector<std::vector<double>>& coords,
                                                 const std::string& metric,
                                                 std::optional<int> basepoint) {
    const int n = static_cast<int>(coords.size());
    if (n == 0) throw ValidationError("empty point cloud");
    const std::size_t dim = coords[0].size();
    const bool linf = metric == "linf";
    if (!linf && metric != "euclidean") throw ValidationError("unknown point metric: " + metric);
    Eigen::MatrixXd d(n, n);
    for (int i = 0; i < n; ++i) {
        if (coords[i].size() != dim) throw ValidationError("ragged coordinates");
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < dim; ++k) {
                double t = std::abs(coords[i][k] - coords[j][k]);
                acc = linf ? std::max(acc, t) : acc + t * t;
            }
            d(i, j) = linf ? acc : std::sqrt(acc);
        }
    }
    return FiniteMetricSpace(std::move(d), basepoint);
}

} // namespace coarsekit
