#pragma once

#include <optional>
#include <utility>

#include "coarsekit/cover.hpp"
#include "coarsekit/lsmap.hpp"

namespace coarsekit {

/// c(U_r, f, V_s): the r-components of preimages of s-balls, grouped by the
/// codomain point generating the ball.
struct LightFamily {
    double r = 0.0;
    double s = 0.0;
    std::vector<PointSet> blocks;
    std::vector<int> parent; // codomain index whose ball generated each block
    double mesh = 0.0;

    ScaledCover as_cover(const FiniteMetricSpace& X) const;
};

LightFamily light_component_family(const LSMap& f, double r, double s);

/// c(U, f, V) for an arbitrary cover V of the codomain; chain steps are
/// d <= r inside each preimage.
ScaledCover light_family_over(const LSMap& f, double r, const ScaledCover& V);

/// L(r, s) = mesh of c(U_r, f, V_s).
ResponseTable light_response(const LSMap& f, const std::vector<double>& r_grid,
                             const std::vector<double>& s_grid);

struct NToOneResult {
    double r = kInf; // least achieved diameter bound; kInf when not achieved
    bool exact = false;
};

/// Least r <= r_bound such that every preimage of an s-ball is covered by n
/// sets of diameter <= r. Exact (clique-cover search) for n <= 3 and
/// preimages of <= 20 points; greedy upper bound otherwise.
NToOneResult n_to_1_response(const LSMap& f, double s, int n, double r_bound);

/// X re-metrized by the light structure: chain completion of the block
/// relation of the diagonal families c(U_n, f, V_n), n = 0..n_max.
struct LightPseudoMetric {
    SpacePtr space;          // carrier with the chain-completed d_f
    Eigen::MatrixXd delta;   // raw one-block relation before completion
    int n_max = 0;
};

LightPseudoMetric light_pseudometric(const LSMap& f, int n_max);

/// f = f_light o e through X_f; e is the identity on points.
struct Factorization {
    SpacePtr Xf;
    LSMap e;       // X -> X_f
    LSMap f_light; // X_f -> Y
};

Factorization factorize(const LSMap& f, int n_max);

/// For each s: least (t, r) - ascending in t, then r - such that every
/// preimage of an s-ball lies inside a single r-component of the preimage of
/// the matching t-ball. Unset when not achieved within the bounds.
struct MonotoneFrontier {
    std::vector<double> s_grid;
    std::vector<std::optional<std::pair<double, double>>> rt; // (r, t) per s

    bool finite() const;
};

MonotoneFrontier monotone_frontier(const LSMap& f, const std::vector<double>& s_grid,
                                   double r_bound, double t_bound);

/// Fill-in check for a closeness-commuting square between two
/// monotone-light factorizations. The diagonal is forced at point level
/// because the monotone parts are identities on points.
struct FillReport {
    double square_gap = 0.0;  // gap of the outer solid square
    double gap_top = 0.0;     // gap(g o e, e' o u)
    double gap_bottom = 0.0;  // gap(m' o g, v o m)
    ResponseTable modulus;    // control modulus of the diagonal
    bool pass = false;
};

FillReport verify_fill_square(const LSMap& u, const LSMap& v, const LSMap& e, const LSMap& e_prime,
                              const LSMap& m, const LSMap& m_prime, double tol,
                              const std::vector<double>& r_grid);

} // namespace coarsekit
