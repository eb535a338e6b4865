#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "coarsekit/asdim.hpp"
#include "coarsekit/corpus.hpp"
#include "coarsekit/errors.hpp"
#include "coarsekit/exactness.hpp"
#include "coarsekit/groups.hpp"
#include "coarsekit/io.hpp"
#include "coarsekit/light.hpp"
#include "coarsekit/reflection.hpp"

using namespace coarsekit;
using nlohmann::json;

namespace {

std::vector<double> parse_grid(const std::string& text) {
    double start = 0, stop = 0, step = 1;
    char colon;
    std::istringstream is(text);
    if (!(is >> start >> colon >> stop) || colon != ':')
        throw ValidationError("grid must be start:stop[:step], got " + text);
    if (is.peek() == ':') {
        is >> colon >> step;
    }
    if (step <= 0 || stop < start) throw ValidationError("grid must be ascending: " + text);
    return grid_range(start, stop, step);
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    json j;
    in >> j;
    return j;
}

struct Output {
    std::ofstream file;
    std::ostream& stream(const std::string& path) {
        if (path.empty()) return std::cout;
        file.open(path);
        if (!file) throw ValidationError("cannot open output " + path);
        return file;
    }
};

/// Shared input options: a corpus builtin with windows, or explicit JSON files.
struct MapInput {
    std::string builtin;
    std::string map_path, domain_path, codomain_path;
    std::vector<int> windows{8};

    void attach(CLI::App* cmd) {
        cmd->add_option("--builtin", builtin, "corpus map name");
        cmd->add_option("--map", map_path, "map JSON ({\"values\":[...]})");
        cmd->add_option("--domain", domain_path, "domain space JSON");
        cmd->add_option("--codomain", codomain_path, "codomain space JSON");
        cmd->add_option("--windows", windows, "window sizes (builtin maps)")->delimiter(',');
    }

    LSMap load(int window) const {
        if (!builtin.empty()) return corpus_map(builtin, window);
        if (map_path.empty()) throw ValidationError("provide --builtin or --map");
        auto dom = std::make_shared<FiniteMetricSpace>(space_from_json(load_json(domain_path)));
        auto cod = std::make_shared<FiniteMetricSpace>(space_from_json(load_json(codomain_path)));
        return map_from_json(load_json(map_path), dom, cod);
    }
};

std::string provenance(const std::string& verb, const std::string& detail) {
    return std::string("coarsekit ") + kToolkitVersion + " | " + verb + " | " + detail;
}

/// Max cell ratio between two tables of identical shape; 1 when equal,
/// inf when a cell flips between bounded and unbounded.
double stability_ratio(const ResponseTable& a, const ResponseTable& b) {
    double worst = 1.0;
    for (std::size_t i = 0; i < a.cell_count(); ++i) {
        double x = a.raw()[i], y = b.raw()[i];
        if (x == y) continue;
        if (!is_finite(x) || !is_finite(y) || x == 0.0 || y == 0.0) return kInf;
        worst = std::max(worst, std::max(x, y) / std::min(x, y));
    }
    return worst;
}

void emit_windowed(std::ostream& os, const std::string& verb, const std::string& detail,
                   const std::vector<int>& windows, const std::vector<ResponseTable>& tables) {
    for (std::size_t k = 0; k < tables.size(); ++k) {
        write_csv(os, tables[k],
                  provenance(verb, detail + " | window=" + std::to_string(windows[k])));
        if (k + 1 < tables.size())
            os << "# stability " << windows[k] << "->" << windows[k + 1] << ": "
               << format_number(stability_ratio(tables[k], tables[k + 1])) << "\n";
    }
}

std::vector<Elem> parse_elems(const std::string& text) {
    json j = json::parse(text);
    std::vector<Elem> out;
    for (const auto& e : j) out.push_back(e.get<Elem>());
    return out;
}

int run_selftest() {
    LSMap fold = corpus_map("fold", 8);
    Factorization fac = factorize(fold, 8);
    for (int x = 0; x < fold.domain->size(); ++x)
        if (fac.f_light(fac.e(x)) != fold(x)) throw ValidationError("factorization not sound");
    ResponseTable L = light_response(fold, grid_range(0, 2), grid_range(0, 2));
    for (double v : L.raw())
        if (!is_finite(v)) throw ValidationError("fold light response unbounded");
    GroupWindow W = word_ball(GroupSpec::integers(1), 3);
    if (W.space->size() != 7) throw ValidationError("Z ball count wrong");
    std::cout << "selftest ok\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coarsekit: scale-response diagnostics for coarse geometry on finite windows"};
    app.require_subcommand(1);

    std::string out_path, grid_r = "0:8", grid_s = "0:8", grid_w = "0:8", format = "csv";
    double r = 1, s = 0, t_bound = 8, r_bound = 8, S = 0, L_sharp = 2, R = 1;
    int n = 1, n_max = 8, window = 8, grid_bound = 8;
    std::size_t cap = kDefaultBallCap, closure_cap = kDefaultClosureCap;
    std::string space_path, cover_path, pou_path, group_path, hom_path, values_path, fprime;

    app.add_option("--out", out_path, "output path (default stdout)");
    app.add_option("--format", format, "csv|json where applicable");

    MapInput mi;

    auto* c_light = app.add_subcommand("light-response", "L(r,s) tables across windows");
    mi.attach(c_light);
    c_light->add_option("--r-grid", grid_r);
    c_light->add_option("--s-grid", grid_s);

    auto* c_front = app.add_subcommand("monotone-frontier", "least (r,t) per s");
    mi.attach(c_front);
    c_front->add_option("--s-grid", grid_s);
    c_front->add_option("--r-bound", r_bound);
    c_front->add_option("--t-bound", t_bound);

    auto* c_fact = app.add_subcommand("factorize", "emit X_f as explicit-metric JSON");
    mi.attach(c_fact);
    c_fact->add_option("--n-max", n_max);

    auto* c_nto1 = app.add_subcommand("n-to-1", "least diameter bound for n-set preimage covers");
    mi.attach(c_nto1);
    c_nto1->add_option("--s", s);
    c_nto1->add_option("--n", n);
    c_nto1->add_option("--r-bound", r_bound);

    auto* c_ei = app.add_subcommand("ei-defect", "E_I defect per s");
    mi.attach(c_ei);
    c_ei->add_option("--s-grid", grid_s);
    c_ei->add_option("--r-bound", r_bound);

    auto* c_refl = app.add_subcommand("reflect", "asdim-0 reflection metric as explicit JSON");
    c_refl->add_option("--space", space_path)->required();
    c_refl->add_option("--grid-bound", grid_bound);

    auto* c_as0 = app.add_subcommand("asdim0", "component mesh per r");
    c_as0->add_option("--space", space_path)->required();
    c_as0->add_option("--r-grid", grid_r);

    auto* c_asup = app.add_subcommand("asdim-upper", "mesh-minimal cover of multiplicity <= n+1");
    c_asup->add_option("--space", space_path)->required();
    c_asup->add_option("--r", r);
    c_asup->add_option("--n", n);

    auto* c_tc = app.add_subcommand("transfer-cover", "pull a codomain cover back along a light map");
    mi.attach(c_tc);
    c_tc->add_option("--cover", cover_path)->required();
    c_tc->add_option("--r", r);

    auto* c_pm = app.add_subcommand("pou-mesh", "l1 mesh of a partition of unity at scale r");
    c_pm->add_option("--space", space_path)->required();
    c_pm->add_option("--pou", pou_path)->required();
    c_pm->add_option("--r", r);

    auto* c_pt = app.add_subcommand("pou-transfer", "transfer a partition of unity along a map");
    mi.attach(c_pt);
    c_pt->add_option("--pou", pou_path)->required();
    c_pt->add_option("--r", r);

    auto* c_gb = app.add_subcommand("group-ball", "word-metric ball as explicit JSON");
    c_gb->add_option("--group", group_path)->required();
    c_gb->add_option("--r", r);
    c_gb->add_option("--cap", cap);

    auto* c_kp = app.add_subcommand("kernel-probe", "local finiteness of the kernel subgroup");
    c_kp->add_option("--hom", hom_path)->required();
    c_kp->add_option("--r", r);
    c_kp->add_option("--cap", closure_cap);

    auto* c_hl = app.add_subcommand("hom-light", "light response of the induced window map");
    c_hl->add_option("--hom", hom_path)->required();
    c_hl->add_option("--windows", mi.windows, "window radii")->delimiter(',');
    c_hl->add_option("--r-grid", grid_r);
    c_hl->add_option("--s-grid", grid_s);
    c_hl->add_option("--cap", cap);

    auto* c_se = app.add_subcommand("subgroup-embed", "embedding response of a subgroup inclusion");
    c_se->add_option("--hom", hom_path)->required();
    c_se->add_option("--windows", mi.windows, "window radii")->delimiter(',');
    c_se->add_option("--s-grid", grid_s);
    c_se->add_option("--cap", cap);

    auto* c_gc = app.add_subcommand("gen-connectivity", "window connectivity under {x.F'} blocks");
    c_gc->add_option("--group", group_path)->required();
    c_gc->add_option("--fprime", fprime, "JSON list of elements")->required();
    c_gc->add_option("--window", window);
    c_gc->add_option("--cap", cap);

    auto* c_fp = app.add_subcommand("fiber-product", "scaled fiber product of two corpus maps");
    c_fp->add_option("--h-map", mi.builtin, "corpus name for h")->required();
    std::string f_name;
    c_fp->add_option("--f-map", f_name, "corpus name for f")->required();
    c_fp->add_option("--window", window);
    c_fp->add_option("--scale", S);

    auto* c_osc = app.add_subcommand("oscillation", "oscillation profile of a vector function");
    c_osc->add_option("--space", space_path)->required();
    c_osc->add_option("--values", values_path, "JSON [[g1,g2],...] per point")->required();
    c_osc->add_option("--radius", R);
    c_osc->add_option("--w-grid", grid_w);

    app.add_subcommand("selftest", "quick internal consistency run");

    CLI11_PARSE(app, argc, argv);

    try {
        Output out;
        std::ostream& os = out.stream(out_path);
        CLI::App* cmd = app.get_subcommands().front();
        const std::string verb = cmd->get_name();
        const std::string detail = !mi.builtin.empty() ? "builtin=" + mi.builtin
                                   : !hom_path.empty() ? "hom=" + hom_path
                                   : !space_path.empty() ? "space=" + space_path
                                                         : "map=" + mi.map_path;

        if (verb == "selftest") return run_selftest();
        if (verb == "light-response") {
            std::vector<ResponseTable> tables;
            for (int w : mi.windows)
                tables.push_back(light_response(mi.load(w), parse_grid(grid_r), parse_grid(grid_s)));
            emit_windowed(os, verb, detail, mi.windows, tables);
        } else if (verb == "monotone-frontier") {
            for (int w : mi.windows) {
                MonotoneFrontier fr =
                    monotone_frontier(mi.load(w), parse_grid(grid_s), r_bound, t_bound);
                os << "# " << provenance(verb, detail + " | window=" + std::to_string(w)) << "\n";
                os << "s,r,t\n";
                for (std::size_t k = 0; k < fr.s_grid.size(); ++k) {
                    os << format_number(fr.s_grid[k]) << ","
                       << format_number(fr.rt[k] ? fr.rt[k]->first : kInf) << ","
                       << format_number(fr.rt[k] ? fr.rt[k]->second : kInf) << "\n";
                }
            }
        } else if (verb == "factorize") {
            Factorization fac = factorize(mi.load(mi.windows.front()), n_max);
            json j{{"Xf", space_to_json(*fac.Xf)},
                   {"e_values", fac.e.values},
                   {"f_light_values", fac.f_light.values}};
            os << j.dump(2) << "\n";
        } else if (verb == "n-to-1") {
            os << "# " << provenance(verb, detail) << "\n";
            os << "window,r,exact\n";
            for (int w : mi.windows) {
                NToOneResult res = n_to_1_response(mi.load(w), s, n, r_bound);
                os << w << "," << format_number(res.r) << "," << (res.exact ? 1 : 0) << "\n";
            }
        } else if (verb == "ei-defect") {
            std::vector<ResponseTable> tables;
            for (int w : mi.windows)
                tables.push_back(ei_defect(mi.load(w), parse_grid(grid_s), r_bound));
            emit_windowed(os, verb, detail, mi.windows, tables);
        } else if (verb == "reflect") {
            FiniteMetricSpace X = space_from_json(load_json(space_path));
            ReflectionMetric I = reflect_0(X, grid_range(0, grid_bound));
            os << space_to_json(*I.space).dump(2) << "\n";
        } else if (verb == "asdim0") {
            FiniteMetricSpace X = space_from_json(load_json(space_path));
            write_csv(os, asdim0_response(X, parse_grid(grid_r)), provenance(verb, detail));
        } else if (verb == "asdim-upper") {
            FiniteMetricSpace X = space_from_json(load_json(space_path));
            AsdimUpperResult res = asdim_upper_at(X, r, n);
            json j{{"mesh", is_finite(res.mesh) ? json(res.mesh) : json(nullptr)},
                   {"exact", res.exact},
                   {"cover", cover_to_json(res.cover)}};
            os << j.dump(2) << "\n";
        } else if (verb == "transfer-cover") {
            LSMap f = mi.load(mi.windows.front());
            json cj = load_json(cover_path);
            ScaledCover V = make_cover(*f.codomain, cj.at("blocks").get<std::vector<PointSet>>(),
                                       cj.value("scale", 0.0));
            os << cover_to_json(transfer_cover(f, V, r)).dump(2) << "\n";
        } else if (verb == "pou-mesh") {
            FiniteMetricSpace X = space_from_json(load_json(space_path));
            PartitionOfUnity phi = pou_from_json(load_json(pou_path));
            os << "# " << provenance(verb, detail) << "\n";
            os << "r,mesh,star_preimage_mesh\n";
            os << format_number(r) << "," << format_number(pou_mesh(phi, X, r)) << ","
               << format_number(star_preimage_mesh(phi, X)) << "\n";
        } else if (verb == "pou-transfer") {
            LSMap f = mi.load(mi.windows.front());
            PartitionOfUnity phi = pou_from_json(load_json(pou_path));
            os << pou_to_json(transfer_pou(f, phi, r)).dump(2) << "\n";
        } else if (verb == "group-ball") {
            GroupWindow W = word_ball(group_from_json(load_json(group_path)), r, cap);
            json j = space_to_json(*W.space);
            j["labels"] = W.space->labels();
            os << j.dump(2) << "\n";
        } else if (verb == "kernel-probe") {
            GroupHom h = hom_from_json(load_json(hom_path));
            LocalFinitenessVerdict v = local_finiteness_probe(h, r, closure_cap);
            json j{{"verdict", v.finite ? "FINITE" : "CAP-EXCEEDED"}, {"size", v.size}};
            os << j.dump(2) << "\n";
        } else if (verb == "hom-light") {
            GroupHom h = hom_from_json(load_json(hom_path));
            std::vector<ResponseTable> tables;
            for (int w : mi.windows)
                tables.push_back(hom_light_window(h, w, parse_grid(grid_r), parse_grid(grid_s), cap));
            emit_windowed(os, verb, detail, mi.windows, tables);
        } else if (verb == "subgroup-embed") {
            GroupHom h = hom_from_json(load_json(hom_path));
            std::vector<ResponseTable> tables;
            for (int w : mi.windows)
                tables.push_back(subgroup_window_embedding(h, w, parse_grid(grid_s), cap));
            emit_windowed(os, verb, detail, mi.windows, tables);
        } else if (verb == "gen-connectivity") {
            ConnectivityResult res = connectivity_generators(group_from_json(load_json(group_path)),
                                                             parse_elems(fprime), window, cap);
            json j{{"connected", res.connected}, {"components", res.component_count}};
            os << j.dump(2) << "\n";
        } else if (verb == "fiber-product") {
            LSMap h = corpus_map(mi.builtin, window);
            LSMap f = corpus_map(f_name, window);
            FiberProduct fp = scaled_fiber_product(h, f, S);
            json j{{"size", fp.space->size()},
                   {"gap", closeness_gap(compose(h, fp.to_A), compose(f, fp.to_C))},
                   {"space", space_to_json(*fp.space)}};
            os << j.dump(2) << "\n";
        } else if (verb == "oscillation") {
            FiniteMetricSpace X = space_from_json(load_json(space_path));
            std::vector<std::pair<double, double>> g;
            for (const auto& row : load_json(values_path))
                g.emplace_back(row.at(0).get<double>(), row.at(1).get<double>());
            write_csv(os, oscillation_profile(X, g, R, parse_grid(grid_w)),
                      provenance(verb, detail));
        }
        return 0;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
}
