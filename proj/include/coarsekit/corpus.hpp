#pragma once

#include <string>
#include <vector>

#include "coarsekit/groups.hpp"
#include "coarsekit/lsmap.hpp"

namespace coarsekit {

/// Names accepted by corpus_map, in catalogue order.
std::vector<std::string> corpus_map_names();

/// Deterministic builtin maps parameterized by window size:
///   identity   id on [0..w]
///   constant   [0..w] -> point
///   fold       |n| on [-w..w] -> [0..w]
///   shift      n -> min(n+1, w) on [0..w]
///   parity     n mod 2 on [0..w] -> [0..1]
///   scale2     n -> 2n, the even inclusion [0..w] -> [0..2w]
///   proj0      first-coordinate projection of the strip [0..w] x [0..4]
LSMap corpus_map(const std::string& name, int window);

std::vector<std::string> corpus_hom_names();

/// Builtin homomorphisms: lamplighter_to_Z (positions forgotten), F2_to_Z
/// (a -> 1, b -> 0), Z_to_Z2 (first factor), Z_identity, double_Z (2Z in Z),
/// free_a_in_F2 (<a> in F2).
GroupHom corpus_hom(const std::string& name);

} // namespace coarsekit
