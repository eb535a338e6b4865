#include "coarsekit/reflection.hpp"

#include <algorithm>

#include "coarsekit/errors.hpp"

namespace coarsekit {

ReflectionMetric reflect_0(const FiniteMetricSpace& X, const std::vector<double>& r_grid) {
    if (r_grid.empty()) throw ValidationError("reflection grid must be non-empty");
    if (!std::is_sorted(r_grid.begin(), r_grid.end()))
        throw ValidationError("reflection grid must be ascending");
    const int n = X.size();
    Eigen::MatrixXd d = Eigen::MatrixXd::Constant(n, n, kInf);
    for (int i = 0; i < n; ++i) d(i, i) = 0.0;
    const PointSet all = X.all_points();
    // descending pass: later (smaller) scales overwrite with smaller values
    for (auto it = r_grid.rbegin(); it != r_grid.rend(); ++it) {
        Partition p = components_at(X, all, *it);
        for (const auto& cls : p.classes)
            for (std::size_t a = 0; a < cls.size(); ++a)
                for (std::size_t b = a + 1; b < cls.size(); ++b) {
                    d(cls[a], cls[b]) = *it;
                    d(cls[b], cls[a]) = *it;
                }
    }
    ReflectionMetric out;
    out.grid_bound = r_grid.back();
    out.space = std::make_shared<FiniteMetricSpace>(std::move(d), X.basepoint(), X.labels());
    return out;
}

ResponseTable ei_defect(const LSMap& f, const std::vector<double>& s_grid, double r_bound) {
    f.validate();
    const auto& X = *f.domain;
    const auto& Y = *f.codomain;
    ResponseTable t({Axis{"s", s_grid}});
    const std::vector<double> rs = grid_range(0, r_bound);
    for (std::size_t k = 0; k < s_grid.size(); ++k) {
        Partition ycomps = components_at(Y, Y.all_points(), s_grid[k]);
        double defect = kInf;
        std::vector<PointSet> pres;
        for (const auto& ycls : ycomps.classes) {
            PointSet pre;
            for (int x = 0; x < X.size(); ++x)
                if (std::binary_search(ycls.begin(), ycls.end(), f(x))) pre.push_back(x);
            if (pre.size() > 1) pres.push_back(std::move(pre));
        }
        for (double r : rs) {
            bool ok = true;
            for (const auto& pre : pres)
                // the preimage must form a single r-component of its own
                if (components_at(X, pre, r).classes.size() != 1) {
                    ok = false;
                    break;
                }
            if (ok) {
                defect = r;
                break;
            }
        }
        t.at1(k) = defect;
    }
    return t;
}

} // namespace coarsekit
