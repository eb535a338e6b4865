#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "coarsekit/metric_space.hpp"
#include "coarsekit/response_table.hpp"

namespace coarsekit {

using SpacePtr = std::shared_ptr<const FiniteMetricSpace>;

/// A point-to-point map between two finite metric windows.
struct LSMap {
    SpacePtr domain;
    SpacePtr codomain;
    std::vector<int> values; // codomain index per domain index

    int operator()(int x) const { return values[static_cast<std::size_t>(x)]; }
    void validate() const;
};

LSMap identity_map(const SpacePtr& X);
LSMap constant_map(const SpacePtr& X, const SpacePtr& Y, int target);
LSMap compose(const LSMap& g, const LSMap& f); // g after f

/// rho(r) = max d_Y(f x, f x') over pairs with d_X(x,x') <= r; non-decreasing.
ResponseTable control_modulus(const LSMap& f, const std::vector<double>& r_grid);

/// sup_x d(f x, g x); rejects mismatched spaces.
double closeness_gap(const LSMap& f, const LSMap& g);

/// max_y min_x d(y, f x); 0 iff surjective.
double surjectivity_defect(const LSMap& f);

/// E(s) = max_y diameter of f^{-1}(B(y, s)).
ResponseTable embedding_response(const LSMap& f, const std::vector<double>& s_grid);

/// P(s) = diameter of f^{-1}(B(basepoint_Y, s)); requires basepoints.
ResponseTable properness_response(const LSMap& f, const std::vector<double>& s_grid);

/// A x C with the max metric; points are (a, c) in a-major order.
SpacePtr product_space(const SpacePtr& A, const SpacePtr& C);

inline int product_index(const SpacePtr& C, int a, int c) { return a * C->size() + c; }

/// The subspace {(a,c) : d_B(h a, f c) <= S} of the max-metric product,
/// with its projections and the inclusion into the product.
struct FiberProduct {
    SpacePtr space;
    SpacePtr product;   // ambient A x C
    LSMap to_A;         // g
    LSMap to_C;         // j
    LSMap inclusion;    // into `product`
};

FiberProduct scaled_fiber_product(const LSMap& h, const LSMap& f, double S);

/// osc(R, w) = max |g(x) - g(x')|_1 over pairs with d(x,x') <= R and both
/// points at distance >= w from the basepoint.
ResponseTable oscillation_profile(const FiniteMetricSpace& X,
                                  const std::vector<std::pair<double, double>>& g, double R,
                                  const std::vector<double>& w_grid);

} // namespace coarsekit
