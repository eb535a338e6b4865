#include "coarsekit/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "coarsekit/corpus.hpp"
#include "coarsekit/errors.hpp"

namespace coarsekit {

using nlohmann::json;

namespace {

double dist_entry(const json& v) {
    if (v.is_null()) return kInf;
    if (v.is_string()) {
        if (v.get<std::string>() == "inf") return kInf;
        throw ValidationError("distance entries must be numbers, null or \"inf\"");
    }
    return v.get<double>();
}

std::optional<int> read_basepoint(const json& j) {
    if (!j.contains("basepoint")) return std::nullopt;
    return j.at("basepoint").get<int>();
}

} // namespace

FiniteMetricSpace space_from_json(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    FiniteMetricSpace X;
    if (type == "graph") {
        const auto& nodes = j.at("nodes");
        std::vector<std::tuple<int, int, double>> edges;
        for (const auto& e : j.at("edges"))
            edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<double>());
        X = FiniteMetricSpace::from_graph(static_cast<int>(nodes.size()), edges, read_basepoint(j));
    } else if (type == "points") {
        std::vector<std::vector<double>> coords;
        for (const auto& row : j.at("coords")) coords.push_back(row.get<std::vector<double>>());
        X = FiniteMetricSpace::from_points(coords, j.at("metric").get<std::string>(), read_basepoint(j));
    } else if (type == "explicit") {
        const auto& rows = j.at("dist");
        const int n = static_cast<int>(rows.size());
        Eigen::MatrixXd d(n, n);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
                throw ValidationError("explicit distance matrix must be square");
            for (int k = 0; k < n; ++k)
                d(i, k) = dist_entry(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
        }
        X = FiniteMetricSpace(std::move(d), read_basepoint(j));
    } else {
        throw ValidationError("unknown space type: " + type);
    }
    X.validate();
    return X;
}

json space_to_json(const FiniteMetricSpace& X) {
    json rows = json::array();
    for (int i = 0; i < X.size(); ++i) {
        json row = json::array();
        for (int k = 0; k < X.size(); ++k) {
            double v = X.d(i, k);
            if (is_finite(v))
                row.push_back(v);
            else
                row.push_back(nullptr);
        }
        rows.push_back(std::move(row));
    }
    json j{{"type", "explicit"}, {"dist", std::move(rows)}};
    if (X.basepoint()) j["basepoint"] = *X.basepoint();
    return j;
}

LSMap map_from_json(const json& j, const SpacePtr& domain, const SpacePtr& codomain) {
    if (j.contains("builtin"))
        return corpus_map(j.at("builtin").get<std::string>(), j.value("window", 8));
    if (!domain || !codomain)
        throw ValidationError("map with explicit values requires domain and codomain spaces");
    LSMap f{domain, codomain, j.at("values").get<std::vector<int>>()};
    f.validate();
    return f;
}

GroupPtr group_from_json(const json& j) {
    const std::string tag = j.at("builtin").get<std::string>();
    const json params = j.value("params", json::object());
    if (tag == "zn") return GroupSpec::integers(params.value("k", 1));
    if (tag == "free") return GroupSpec::free_group(params.value("k", 2));
    if (tag == "lamplighter") return GroupSpec::lamplighter();
    if (tag == "perm")
        return GroupSpec::permutation(params.at("gens").get<std::vector<std::vector<int>>>());
    if (tag == "product")
        return GroupSpec::direct_product(group_from_json(params.at("a")), group_from_json(params.at("b")));
    throw ValidationError("unknown group builtin: " + tag);
}

GroupHom hom_from_json(const json& j) {
    if (j.contains("builtin")) {
        GroupHom h = corpus_hom(j.at("builtin").get<std::string>());
        h.validate();
        return h;
    }
    GroupHom h{group_from_json(j.at("source")), group_from_json(j.at("target")), {}};
    for (const auto& img : j.at("gen_images")) h.gen_images.push_back(img.get<Elem>());
    h.validate();
    return h;
}

PartitionOfUnity pou_from_json(const json& j) {
    PartitionOfUnity phi;
    phi.vertices = j.at("vertices").get<std::vector<std::string>>();
    for (const auto& row : j.at("rows")) {
        std::vector<std::pair<int, double>> r;
        for (const auto& cell : row) r.emplace_back(cell.at(0).get<int>(), cell.at(1).get<double>());
        phi.rows.push_back(std::move(r));
    }
    phi.validate();
    return phi;
}

json pou_to_json(const PartitionOfUnity& phi) {
    json rows = json::array();
    for (const auto& row : phi.rows) {
        json r = json::array();
        for (const auto& [v, w] : row) r.push_back(json::array({v, w}));
        rows.push_back(std::move(r));
    }
    return json{{"vertices", phi.vertices}, {"rows", std::move(rows)}};
}

json cover_to_json(const ScaledCover& U) {
    json blocks = json::array();
    for (const auto& b : U.blocks) blocks.push_back(b);
    return json{{"scale", U.scale},
                {"mesh", is_finite(U.mesh) ? json(U.mesh) : json(nullptr)},
                {"blocks", std::move(blocks)}};
}

std::string format_number(double v) {
    if (!is_finite(v)) return v > 0 ? "inf" : "-inf";
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.0f", v);
        return buf;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

void write_csv(std::ostream& os, const ResponseTable& t, const std::string& provenance) {
    os << "# " << provenance << "\n";
    for (const auto& ax : t.axes()) os << ax.name << ",";
    os << "value\n";
    for (std::size_t flat = 0; flat < t.cell_count(); ++flat) {
        const std::vector<std::size_t> idx = t.unflatten(flat);
        for (std::size_t a = 0; a < idx.size(); ++a)
            os << format_number(t.axes()[a].grid[idx[a]]) << ",";
        os << format_number(t.at(idx)) << "\n";
    }
}

} // namespace coarsekit
