#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "coarsekit/cover.hpp"
#include "coarsekit/exactness.hpp"
#include "coarsekit/groups.hpp"
#include "coarsekit/lsmap.hpp"
#include "coarsekit/response_table.hpp"

namespace coarsekit {

inline constexpr const char* kToolkitVersion = "0.1.0";

/// Accepted space forms:
///   {"type":"graph","nodes":[...],"edges":[[i,j,w],...]}
///   {"type":"points","metric":"euclidean"|"linf","coords":[[...],...]}
///   {"type":"explicit","dist":[[...]]}  (null or "inf" entries mean +inf)
/// plus an optional "basepoint" index.
FiniteMetricSpace space_from_json(const nlohmann::json& j);

/// Explicit form; +inf distances are emitted as null.
nlohmann::json space_to_json(const FiniteMetricSpace& X);

/// {"values":[...]} against the given spaces, or
/// {"builtin": name, "window": w} from the corpus (spaces ignored).
LSMap map_from_json(const nlohmann::json& j, const SpacePtr& domain, const SpacePtr& codomain);

/// {"builtin":"zn"|"free"|"lamplighter"|"perm"|"product","params":{...}}.
GroupPtr group_from_json(const nlohmann::json& j);

/// {"source":..., "target":..., "gen_images":[[...],...]} or {"builtin": name}.
GroupHom hom_from_json(const nlohmann::json& j);

/// {"vertices":[...],"rows":[[[vertexIndex, weight],...],...]}.
PartitionOfUnity pou_from_json(const nlohmann::json& j);
nlohmann::json pou_to_json(const PartitionOfUnity& phi);

nlohmann::json cover_to_json(const ScaledCover& U);

/// Deterministic number text: "inf", integral without decimals, else %.9g.
std::string format_number(double v);

/// Provenance comment, axis header, one row per grid tuple; byte-stable.
void write_csv(std::ostream& os, const ResponseTable& t, const std::string& provenance);

} // namespace coarsekit
