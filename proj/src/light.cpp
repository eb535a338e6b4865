#include "coarsekit/light.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "coarsekit/errors.hpp"
#include "coarsekit/parallel.hpp"

namespace coarsekit {

ScaledCover LightFamily::as_cover(const FiniteMetricSpace& X) const {
    return make_cover(X, blocks, std::max(r, s));
}

LightFamily light_component_family(const LSMap& f, double r, double s) {
    f.validate();
    if (r < 0 || s < 0) throw ValidationError("light family scales must be >= 0");
    LightFamily fam;
    fam.r = r;
    fam.s = s;
    const auto& X = *f.domain;
    const auto& Y = *f.codomain;
    for (int y = 0; y < Y.size(); ++y) {
        PointSet pre;
        for (int x = 0; x < X.size(); ++x)
            if (Y.d(f(x), y) <= s) pre.push_back(x);
        if (pre.empty()) continue;
        Partition comps = components_at(X, pre, r);
        for (auto& cls : comps.classes) {
            fam.mesh = std::max(fam.mesh, X.diameter(cls));
            fam.blocks.push_back(std::move(cls));
            fam.parent.push_back(y);
        }
    }
    return fam;
}

ScaledCover light_family_over(const LSMap& f, double r, const ScaledCover& V) {
    f.validate();
    const auto& X = *f.domain;
    std::vector<PointSet> blocks;
    for (const auto& v : V.blocks) {
        PointSet pre;
        for (int x = 0; x < X.size(); ++x)
            if (std::binary_search(v.begin(), v.end(), f(x))) pre.push_back(x);
        if (pre.empty()) continue;
        Partition comps = components_at(X, pre, r);
        for (auto& cls : comps.classes) blocks.push_back(std::move(cls));
    }
    return make_cover(X, std::move(blocks), std::max(r, V.scale));
}

ResponseTable light_response(const LSMap& f, const std::vector<double>& r_grid,
                             const std::vector<double>& s_grid) {
    f.validate();
    ResponseTable t({Axis{"r", r_grid}, Axis{"s", s_grid}});
    parallel_for(r_grid.size() * s_grid.size(), [&](std::size_t cell) {
        const std::size_t i = cell / s_grid.size(), j = cell % s_grid.size();
        t.at2(i, j) = light_component_family(f, r_grid[i], s_grid[j]).mesh;
    });
    return t;
}

namespace {

// Can `pts` be split into <= n parts of diameter <= r? Equivalently, is the
// graph with edges d > r properly n-colorable.
bool coverable_exact(const FiniteMetricSpace& X, const PointSet& pts, int n, double r) {
    const int k = static_cast<int>(pts.size());
    std::vector<int> color(static_cast<std::size_t>(k), -1);
    auto conflicts = [&](int i, int c) {
        for (int j = 0; j < i; ++j)
            if (color[static_cast<std::size_t>(j)] == c && !(X.d(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]) <= r))
                return true;
        return false;
    };
    int i = 0;
    while (i >= 0) {
        if (i == k) return true;
        int c = color[static_cast<std::size_t>(i)] + 1;
        while (c < n && conflicts(i, c)) ++c;
        if (c < n) {
            color[static_cast<std::size_t>(i)] = c;
            ++i;
        } else {
            color[static_cast<std::size_t>(i)] = -1;
            --i;
        }
    }
    return false;
}

bool coverable_greedy(const FiniteMetricSpace& X, const PointSet& pts, int n, double r) {
    std::vector<PointSet> clusters;
    for (int p : pts) {
        bool placed = false;
        for (auto& cl : clusters) {
            bool fits = true;
            for (int q : cl)
                if (!(X.d(p, q) <= r)) {
                    fits = false;
                    break;
                }
            if (fits) {
                cl.push_back(p);
                placed = true;
                break;
            }
        }
        if (!placed) {
            if (static_cast<int>(clusters.size()) == n) return false;
            clusters.push_back({p});
        }
    }
    return true;
}

} // namespace

NToOneResult n_to_1_response(const LSMap& f, double s, int n, double r_bound) {
    f.validate();
    if (n < 1) throw ValidationError("n-to-1 requires n >= 1");
    const auto& X = *f.domain;
    const auto& Y = *f.codomain;
    std::vector<PointSet> preimages;
    std::size_t largest = 0;
    for (int y = 0; y < Y.size(); ++y) {
        PointSet pre;
        for (int x = 0; x < X.size(); ++x)
            if (Y.d(f(x), y) <= s) pre.push_back(x);
        if (pre.size() > 1) {
            largest = std::max(largest, pre.size());
            preimages.push_back(std::move(pre));
        }
    }
    NToOneResult res;
    res.exact = n <= 3 && largest <= 20;
    if (preimages.empty()) {
        res.r = 0.0;
        return res;
    }
    std::set<double> candidates{0.0};
    for (const auto& pre : preimages)
        for (std::size_t a = 0; a < pre.size(); ++a)
            for (std::size_t b = a + 1; b < pre.size(); ++b) {
                double d = X.d(pre[a], pre[b]);
                if (is_finite(d) && d <= r_bound) candidates.insert(d);
            }
    for (double r : candidates) {
        bool ok = true;
        for (const auto& pre : preimages) {
            bool cov = res.exact ? coverable_exact(X, pre, n, r) : coverable_greedy(X, pre, n, r);
            if (!cov) {
                ok = false;
                break;
            }
        }
        if (ok) {
            res.r = r;
            return res;
        }
    }
    res.r = kInf; // not achieved within r_bound
    return res;
}

LightPseudoMetric light_pseudometric(const LSMap& f, int n_max) {
    f.validate();
    if (n_max < 1) throw ValidationError("light pseudometric requires n_max >= 1");
    const auto& X = *f.domain;
    const int n = X.size();
    Eigen::MatrixXd delta = Eigen::MatrixXd::Constant(n, n, kInf);
    for (int i = 0; i < n; ++i) delta(i, i) = 0.0;
    for (int scale = 0; scale <= n_max; ++scale) {
        LightFamily fam = light_component_family(f, scale, scale);
        for (const auto& block : fam.blocks)
            for (std::size_t a = 0; a < block.size(); ++a)
                for (std::size_t b = a + 1; b < block.size(); ++b) {
                    double& lo = delta(block[a], block[b]);
                    lo = std::min(lo, static_cast<double>(scale));
                    delta(block[b], block[a]) = lo;
                }
    }
    // chain completion: largest metric below the one-block relation
    Eigen::MatrixXd d = delta;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (!is_finite(d(i, k))) continue;
            for (int j = 0; j < n; ++j) d(i, j) = std::min(d(i, j), d(i, k) + d(k, j));
        }
    LightPseudoMetric out;
    out.delta = std::move(delta);
    out.n_max = n_max;
    out.space = std::make_shared<FiniteMetricSpace>(std::move(d), X.basepoint(),
                                                    X.labels());
    return out;
}

Factorization factorize(const LSMap& f, int n_max) {
    LightPseudoMetric lpm = light_pseudometric(f, n_max);
    Factorization out;
    out.Xf = lpm.space;
    out.e = LSMap{f.domain, out.Xf, {}};
    out.e.values.resize(static_cast<std::size_t>(f.domain->size()));
    for (int i = 0; i < f.domain->size(); ++i) out.e.values[static_cast<std::size_t>(i)] = i;
    out.f_light = LSMap{out.Xf, f.codomain, f.values};
    return out;
}

bool MonotoneFrontier::finite() const {
    return std::all_of(rt.begin(), rt.end(), [](const auto& v) { return v.has_value(); });
}

MonotoneFrontier monotone_frontier(const LSMap& f, const std::vector<double>& s_grid,
                                   double r_bound, double t_bound) {
    f.validate();
    if (r_bound < 0 || t_bound < 0) throw ValidationError("frontier bounds must be >= 0");
    const auto& X = *f.domain;
    const auto& Y = *f.codomain;

    auto achieved = [&](double s, double r, double t) {
        for (int y = 0; y < Y.size(); ++y) {
            PointSet small, large;
            for (int x = 0; x < X.size(); ++x) {
                double dy = Y.d(f(x), y);
                if (dy <= t) large.push_back(x);
                if (dy <= s) small.push_back(x);
            }
            if (small.size() <= 1) continue;
            if (!std::includes(large.begin(), large.end(), small.begin(), small.end())) return false;
            Partition comps = components_at(X, large, r);
            bool inside_one = false;
            for (const auto& cls : comps.classes)
                if (std::includes(cls.begin(), cls.end(), small.begin(), small.end())) {
                    inside_one = true;
                    break;
                }
            if (!inside_one) return false;
        }
        return true;
    };

    MonotoneFrontier out;
    out.s_grid = s_grid;
    out.rt.resize(s_grid.size());
    const std::vector<double> ts = grid_range(0, t_bound);
    const std::vector<double> rs = grid_range(0, r_bound);
    for (std::size_t k = 0; k < s_grid.size(); ++k) {
        for (double t : ts) {
            bool found = false;
            for (double r : rs)
                if (achieved(s_grid[k], r, t)) {
                    out.rt[k] = std::make_pair(r, t);
                    found = true;
                    break;
                }
            if (found) break;
        }
    }
    return out;
}

FillReport verify_fill_square(const LSMap& u, const LSMap& v, const LSMap& e, const LSMap& e_prime,
                              const LSMap& m, const LSMap& m_prime, double tol,
                              const std::vector<double>& r_grid) {
    for (const LSMap* p : {&u, &v, &e, &e_prime, &m, &m_prime}) p->validate();
    auto same_space = [](const SpacePtr& a, const SpacePtr& b) {
        return a == b || (a->size() == b->size() && a->matrix() == b->matrix());
    };
    if (!same_space(e.domain, u.domain) || !same_space(m.domain, e.codomain) ||
        !same_space(m.codomain, v.domain) || !same_space(e_prime.domain, u.codomain) ||
        !same_space(m_prime.domain, e_prime.codomain) || !same_space(m_prime.codomain, v.codomain))
        throw ValidationError("fill square shapes do not compose");
    auto identity_on_points = [](const LSMap& g) {
        if (g.domain->size() != g.codomain->size()) return false;
        for (int i = 0; i < g.domain->size(); ++i)
            if (g(i) != i) return false;
        return true;
    };
    if (!identity_on_points(e) || !identity_on_points(e_prime))
        throw ValidationError("monotone parts must be identity on points");

    FillReport rep;
    rep.square_gap = closeness_gap(compose(v, compose(m, e)), compose(m_prime, compose(e_prime, u)));

    // the diagonal is forced: same as e' o u at point level
    LSMap g{m.domain, e_prime.codomain, {}};
    g.values.reserve(u.values.size());
    for (int x = 0; x < u.domain->size(); ++x) g.values.push_back(e_prime(u(x)));

    rep.gap_top = closeness_gap(compose(g, e), compose(e_prime, u));
    rep.gap_bottom = closeness_gap(compose(m_prime, g), compose(v, m));
    rep.modulus = control_modulus(g, r_grid);
    bool modulus_finite = std::all_of(rep.modulus.raw().begin(), rep.modulus.raw().end(),
                                      [](double x) { return is_finite(x); });
    rep.pass = rep.square_gap <= tol && rep.gap_top <= tol && rep.gap_bottom <= tol && modulus_finite;
    return rep;
}

} // namespace coarsekit
