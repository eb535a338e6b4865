#include "coarsekit/lsmap.hpp"

#include <algorithm>
#include <cmath>

#include "coarsekit/errors.hpp"

namespace coarsekit {

void LSMap::validate() const {
    if (!domain || !codomain) throw ValidationError("map missing domain or codomain");
    if (static_cast<int>(values.size()) != domain->size())
        throw ValidationError("map is not total on its domain");
    for (int v : values)
        if (v < 0 || v >= codomain->size()) throw ValidationError("map value outside codomain");
}

LSMap identity_map(const SpacePtr& X) {
    LSMap f{X, X, {}};
    f.values.resize(static_cast<std::size_t>(X->size()));
    for (int i = 0; i < X->size(); ++i) f.values[static_cast<std::size_t>(i)] = i;
    return f;
}

LSMap constant_map(const SpacePtr& X, const SpacePtr& Y, int target) {
    if (target < 0 || target >= Y->size()) throw ValidationError("constant target outside codomain");
    return LSMap{X, Y, std::vector<int>(static_cast<std::size_t>(X->size()), target)};
}

LSMap compose(const LSMap& g, const LSMap& f) {
    if (f.codomain != g.domain && f.codomain->matrix() != g.domain->matrix())
        throw ValidationError("composition shape mismatch");
    LSMap out{f.domain, g.codomain, {}};
    out.values.reserve(f.values.size());
    for (int v : f.values) out.values.push_back(g(v));
    return out;
}

ResponseTable control_modulus(const LSMap& f, const std::vector<double>& r_grid) {
    f.validate();
    ResponseTable t({Axis{"r", r_grid}});
    const auto& X = *f.domain;
    const auto& Y = *f.codomain;
    for (std::size_t k = 0; k < r_grid.size(); ++k) {
        double rho = 0.0;
        for (int x = 0; x < X.size(); ++x)
            for (int x2 = x; x2 < X.size(); ++x2)
                if (X.d(x, x2) <= r_grid[k]) rho = std::max(rho, Y.d(f(x), f(x2)));
        t.at1(k) = rho;
    }
    return t;
}

double closeness_gap(const LSMap& f, const LSMap& g) {
    f.validate();
    g.validate();
    if (f.domain->size() != g.domain->size() || f.codomain->size() != g.codomain->size() ||
        f.domain->matrix() != g.domain->matrix() || f.codomain->matrix() != g.codomain->matrix())
        throw ValidationError("closeness gap needs a common domain and codomain");
    double gap = 0.0;
    for (int x = 0; x < f.domain->size(); ++x) gap = std::max(gap, f.codomain->d(f(x), g(x)));
    return gap;
}

double surjectivity_defect(const LSMap& f) {
    f.validate();
    double worst = 0.0;
    for (int y = 0; y < f.codomain->size(); ++y) {
        double best = kInf;
        for (int v : f.values) best = std::min(best, f.codomain->d(y, v));
        worst = std::max(worst, best);
    }
    return worst;
}

ResponseTable embedding_response(const LSMap& f, const std::vector<double>& s_grid) {
    f.validate();
    ResponseTable t({Axis{"s", s_grid}});
    for (std::size_t k = 0; k < s_grid.size(); ++k) {
        double worst = 0.0;
        for (int y = 0; y < f.codomain->size(); ++y) {
            PointSet pre;
            for (int x = 0; x < f.domain->size(); ++x)
                if (f.codomain->d(f(x), y) <= s_grid[k]) pre.push_back(x);
            worst = std::max(worst, f.domain->diameter(pre));
        }
        t.at1(k) = worst;
    }
    return t;
}

ResponseTable properness_response(const LSMap& f, const std::vector<double>& s_grid) {
    f.validate();
    if (!f.domain->basepoint() || !f.codomain->basepoint())
        throw ValidationError("properness response needs basepoints on both spaces");
    const int by = *f.codomain->basepoint();
    ResponseTable t({Axis{"s", s_grid}});
    for (std::size_t k = 0; k < s_grid.size(); ++k) {
        PointSet pre;
        for (int x = 0; x < f.domain->size(); ++x)
            if (f.codomain->d(f(x), by) <= s_grid[k]) pre.push_back(x);
        t.at1(k) = f.domain->diameter(pre);
    }
    return t;
}

SpacePtr product_space(const SpacePtr& A, const SpacePtr& C) {
    const int na = A->size(), nc = C->size();
    Eigen::MatrixXd d(na * nc, na * nc);
    for (int a = 0; a < na; ++a)
        for (int c = 0; c < nc; ++c)
            for (int a2 = 0; a2 < na; ++a2)
                for (int c2 = 0; c2 < nc; ++c2)
                    d(a * nc + c, a2 * nc + c2) = std::max(A->d(a, a2), C->d(c, c2));
    std::optional<int> base;
    if (A->basepoint() && C->basepoint()) base = *A->basepoint() * nc + *C->basepoint();
    std::vector<std::string> labels;
    if (!A->labels().empty() && !C->labels().empty()) {
        labels.reserve(static_cast<std::size_t>(na) * nc);
        for (int a = 0; a < na; ++a)
            for (int c = 0; c < nc; ++c) labels.push_back("(" + A->labels()[a] + "," + C->labels()[c] + ")");
    }
    return std::make_shared<FiniteMetricSpace>(std::move(d), base, std::move(labels));
}

FiberProduct scaled_fiber_product(const LSMap& h, const LSMap& f, double S) {
    h.validate();
    f.validate();
    if (h.codomain->matrix() != f.codomain->matrix())
        throw ValidationError("fiber product needs a common codomain");
    if (S < 0) throw ValidationError("fiber product scale must be >= 0");
    const SpacePtr A = h.domain, C = f.domain;
    SpacePtr prod = product_space(A, C);
    std::vector<int> pa, pc, incl;
    for (int a = 0; a < A->size(); ++a)
        for (int c = 0; c < C->size(); ++c)
            if (h.codomain->d(h(a), f(c)) <= S) {
                pa.push_back(a);
                pc.push_back(c);
                incl.push_back(product_index(C, a, c));
            }
    const int n = static_cast<int>(pa.size());
    Eigen::MatrixXd d(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d(i, j) = prod->d(incl[i], incl[j]);
    auto P = std::make_shared<FiniteMetricSpace>(std::move(d));
    return FiberProduct{P, prod, LSMap{P, A, std::move(pa)}, LSMap{P, C, std::move(pc)},
                        LSMap{P, prod, std::move(incl)}};
}

ResponseTable oscillation_profile(const FiniteMetricSpace& X,
                                  const std::vector<std::pair<double, double>>& g, double R,
                                  const std::vector<double>& w_grid) {
    if (!X.basepoint()) throw ValidationError("oscillation profile needs a basepoint");
    if (static_cast<int>(g.size()) != X.size()) throw ValidationError("observable is not total");
    const int b = *X.basepoint();
    ResponseTable t({Axis{"w", w_grid}});
    for (std::size_t k = 0; k < w_grid.size(); ++k) {
        double osc = 0.0;
        for (int x = 0; x < X.size(); ++x) {
            if (X.d(x, b) < w_grid[k]) continue;
            for (int x2 = x; x2 < X.size(); ++x2) {
                if (X.d(x2, b) < w_grid[k] || X.d(x, x2) > R) continue;
                osc = std::max(osc, std::abs(g[x].first - g[x2].first) +
                                        std::abs(g[x].second - g[x2].second));
            }
        }
        t.at1(k) = osc;
    }
    return t;
}

} // namespace coarsekit
