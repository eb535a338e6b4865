#include "coarsekit/groups.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "coarsekit/errors.hpp"
#include "coarsekit/light.hpp"

namespace coarsekit {

namespace {

std::string show_vec(const Elem& e) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << ")";
    return os.str();
}

} // namespace

GroupPtr GroupSpec::integers(int k) {
    if (k < 1) throw ValidationError("Z^k requires k >= 1");
    auto g = std::make_shared<GroupSpec>();
    g->name = "Z^" + std::to_string(k);
    g->identity = Elem(static_cast<std::size_t>(k), 0);
    g->mul = [](const Elem& a, const Elem& b) {
        Elem c = a;
        for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
        return c;
    };
    g->inv = [](const Elem& a) {
        Elem c = a;
        for (auto& v : c) v = -v;
        return c;
    };
    for (int i = 0; i < k; ++i)
        for (int sign : {+1, -1}) {
            Elem e(static_cast<std::size_t>(k), 0);
            e[static_cast<std::size_t>(i)] = sign;
            g->generators.push_back(e);
            g->gen_names.push_back((sign > 0 ? "x" : "X") + std::to_string(i));
            g->gen_inverse.push_back(static_cast<int>(g->generators.size()) - 1 + (sign > 0 ? 1 : -1));
        }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            g->relations.push_back({2 * i, 2 * j, 2 * i + 1, 2 * j + 1});
    g->word_length = [](const Elem& a) {
        double s = 0;
        for (auto v : a) s += std::abs(static_cast<double>(v));
        return s;
    };
    g->show = show_vec;
    return g;
}

GroupPtr GroupSpec::free_group(int k) {
    if (k < 1) throw ValidationError("free group requires k >= 1");
    auto g = std::make_shared<GroupSpec>();
    g->name = "F_" + std::to_string(k);
    g->identity = {};
    g->mul = [](const Elem& a, const Elem& b) {
        Elem c = a;
        for (auto letter : b) {
            if (!c.empty() && c.back() == -letter)
                c.pop_back();
            else
                c.push_back(letter);
        }
        return c;
    };
    g->inv = [](const Elem& a) {
        Elem c(a.rbegin(), a.rend());
        for (auto& v : c) v = -v;
        return c;
    };
    for (int i = 1; i <= k; ++i)
        for (int sign : {+1, -1}) {
            g->generators.push_back({sign * i});
            g->gen_names.push_back(std::string(1, static_cast<char>((sign > 0 ? 'a' : 'A') + i - 1)));
            g->gen_inverse.push_back(static_cast<int>(g->generators.size()) - 1 + (sign > 0 ? 1 : -1));
        }
    g->word_length = [](const Elem& a) { return static_cast<double>(a.size()); };
    g->show = show_vec;
    return g;
}

GroupPtr GroupSpec::lamplighter() {
    // element = [walker position, sorted lit lamp positions...]
    auto g = std::make_shared<GroupSpec>();
    g->name = "lamplighter";
    g->identity = {0};
    auto lamps = [](const Elem& e) { return std::set<long long>(e.begin() + 1, e.end()); };
    g->mul = [lamps](const Elem& a, const Elem& b) {
        std::set<long long> s = lamps(a);
        for (auto it = b.begin() + 1; it != b.end(); ++it) {
            long long p = a[0] + *it;
            if (!s.insert(p).second) s.erase(p); // Z/2 sum
        }
        Elem c{a[0] + b[0]};
        c.insert(c.end(), s.begin(), s.end());
        return c;
    };
    g->inv = [lamps](const Elem& a) {
        Elem c{-a[0]};
        std::set<long long> s;
        for (auto it = a.begin() + 1; it != a.end(); ++it) s.insert(*it - a[0]);
        c.insert(c.end(), s.begin(), s.end());
        return c;
    };
    g->generators = {{1}, {-1}, {0, 0}};
    g->gen_names = {"t", "T", "a"};
    g->gen_inverse = {1, 0, 2};
    g->relations = {{2, 2},
                    {2, 0, 2, 1, 2, 0, 2, 1},
                    {2, 0, 0, 2, 1, 1, 2, 0, 0, 2, 1, 1}};
    g->word_length = [](const Elem& a) {
        const long long t = a[0];
        double toggles = static_cast<double>(a.size() - 1);
        long long lo = std::min<long long>({0, t}), hi = std::max<long long>({0, t});
        for (auto it = a.begin() + 1; it != a.end(); ++it) {
            lo = std::min(lo, *it);
            hi = std::max(hi, *it);
        }
        // walk from 0 to t visiting every lit lamp: sweep one side first
        double left_first = static_cast<double>((0 - lo) + (hi - lo) + (hi - t));
        double right_first = static_cast<double>((hi - 0) + (hi - lo) + (t - lo));
        return toggles + std::min(left_first, right_first);
    };
    g->show = [](const Elem& e) {
        std::ostringstream os;
        os << "t=" << e[0] << ";lamps=";
        for (std::size_t i = 1; i < e.size(); ++i) os << (i > 1 ? "," : "") << e[i];
        return os.str();
    };
    return g;
}

GroupPtr GroupSpec::permutation(const std::vector<std::vector<int>>& gens) {
    if (gens.empty()) throw ValidationError("permutation group requires at least one generator");
    const std::size_t n = gens[0].size();
    auto g = std::make_shared<GroupSpec>();
    g->name = "perm" + std::to_string(n);
    g->identity.resize(n);
    for (std::size_t i = 0; i < n; ++i) g->identity[i] = static_cast<long long>(i);
    g->mul = [](const Elem& a, const Elem& b) {
        Elem c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i])];
        return c;
    };
    g->inv = [](const Elem& a) {
        Elem c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[static_cast<std::size_t>(a[i])] = static_cast<long long>(i);
        return c;
    };
    for (std::size_t k = 0; k < gens.size(); ++k) {
        Elem e;
        for (int v : gens[k]) {
            if (v < 0 || v >= static_cast<int>(n)) throw ValidationError("permutation image out of range");
            e.push_back(v);
        }
        if (e == g->identity) throw ValidationError("identity listed as a generator");
        Elem einv = g->inv(e);
        g->generators.push_back(e);
        g->gen_names.push_back("p" + std::to_string(k));
        if (einv == e) {
            g->gen_inverse.push_back(static_cast<int>(g->generators.size()) - 1);
        } else {
            g->gen_inverse.push_back(static_cast<int>(g->generators.size()));
            g->generators.push_back(einv);
            g->gen_names.push_back("P" + std::to_string(k));
            g->gen_inverse.push_back(static_cast<int>(g->generators.size()) - 2);
        }
    }
    g->show = show_vec;
    return g;
}

GroupPtr GroupSpec::direct_product(GroupPtr a, GroupPtr b) {
    auto g = std::make_shared<GroupSpec>();
    g->name = a->name + "x" + b->name;
    auto pack = [](const Elem& x, const Elem& y) {
        Elem c{static_cast<long long>(x.size())};
        c.insert(c.end(), x.begin(), x.end());
        c.insert(c.end(), y.begin(), y.end());
        return c;
    };
    auto first = [](const Elem& e) { return Elem(e.begin() + 1, e.begin() + 1 + e[0]); };
    auto second = [](const Elem& e) { return Elem(e.begin() + 1 + e[0], e.end()); };
    g->identity = pack(a->identity, b->identity);
    g->mul = [a, b, pack, first, second](const Elem& x, const Elem& y) {
        return pack(a->mul(first(x), first(y)), b->mul(second(x), second(y)));
    };
    g->inv = [a, b, pack, first, second](const Elem& x) {
        return pack(a->inv(first(x)), b->inv(second(x)));
    };
    const int ka = static_cast<int>(a->generators.size());
    for (int i = 0; i < ka; ++i) {
        g->generators.push_back(pack(a->generators[static_cast<std::size_t>(i)], b->identity));
        g->gen_names.push_back(a->gen_names[static_cast<std::size_t>(i)] + ".1");
        g->gen_inverse.push_back(a->gen_inverse[static_cast<std::size_t>(i)]);
    }
    for (std::size_t j = 0; j < b->generators.size(); ++j) {
        g->generators.push_back(pack(a->identity, b->generators[j]));
        g->gen_names.push_back(b->gen_names[j] + ".2");
        g->gen_inverse.push_back(ka + b->gen_inverse[j]);
    }
    for (const auto& rel : a->relations) g->relations.push_back(rel);
    for (const auto& rel : b->relations) {
        std::vector<int> shifted;
        for (int idx : rel) shifted.push_back(ka + idx);
        g->relations.push_back(shifted);
    }
    for (int i = 0; i < ka; ++i)
        for (std::size_t j = 0; j < b->generators.size(); ++j)
            g->relations.push_back({i, ka + static_cast<int>(j), a->gen_inverse[static_cast<std::size_t>(i)],
                                    ka + b->gen_inverse[j]});
    if (a->word_length && b->word_length) {
        auto wa = a->word_length, wb = b->word_length;
        g->word_length = [wa, wb, first, second](const Elem& e) { return wa(first(e)) + wb(second(e)); };
    }
    g->show = [a, b, first, second](const Elem& e) {
        return "(" + a->show(first(e)) + "," + b->show(second(e)) + ")";
    };
    return g;
}

void GroupHom::validate() const {
    if (gen_images.size() != source->generators.size())
        throw ValidationError("homomorphism must give one image per source generator");
    for (std::size_t i = 0; i < gen_images.size(); ++i) {
        const int j = source->gen_inverse[i];
        if (target->mul(gen_images[i], gen_images[static_cast<std::size_t>(j)]) != target->identity)
            throw ValidationError("generator images do not respect inverses");
    }
    for (const auto& rel : source->relations) {
        Elem acc = target->identity;
        for (int idx : rel) acc = target->mul(acc, gen_images[static_cast<std::size_t>(idx)]);
        if (acc != target->identity)
            throw ValidationError("generator images violate a defining relation of " + source->name);
    }
}

Elem GroupHom::apply_word(const std::vector<int>& gen_word) const {
    Elem acc = target->identity;
    for (int idx : gen_word) acc = target->mul(acc, gen_images[static_cast<std::size_t>(idx)]);
    return acc;
}

namespace {

struct BfsResult {
    std::vector<Elem> elems; // discovery order, identity first
    std::map<Elem, int> index;
    std::vector<double> len;
    std::vector<Elem> image; // filled when a hom is tracked
};

BfsResult bfs_ball(const GroupPtr& G, double r, std::size_t cap, const GroupHom* hom) {
    BfsResult res;
    res.elems.push_back(G->identity);
    res.index[G->identity] = 0;
    res.len.push_back(0.0);
    if (hom) res.image.push_back(hom->target->identity);
    std::deque<int> frontier{0};
    while (!frontier.empty()) {
        const int cur = frontier.front();
        frontier.pop_front();
        if (res.len[static_cast<std::size_t>(cur)] + 1 > r) continue;
        const Elem x = res.elems[static_cast<std::size_t>(cur)];
        for (std::size_t gi = 0; gi < G->generators.size(); ++gi) {
            Elem nxt = G->mul(x, G->generators[gi]);
            if (res.index.count(nxt)) continue;
            if (res.elems.size() >= cap)
                throw CapExceeded("word ball cap exceeded for " + G->name, res.elems.size());
            res.index[nxt] = static_cast<int>(res.elems.size());
            res.elems.push_back(nxt);
            res.len.push_back(res.len[static_cast<std::size_t>(cur)] + 1);
            if (hom)
                res.image.push_back(
                    hom->target->mul(res.image[static_cast<std::size_t>(cur)], hom->gen_images[gi]));
            frontier.push_back(static_cast<int>(res.elems.size()) - 1);
        }
    }
    return res;
}

} // namespace

int GroupWindow::find(const Elem& e) const {
    auto it = index.find(e);
    return it == index.end() ? -1 : it->second;
}

GroupWindow word_ball(const GroupPtr& G, double r, std::size_t cap) {
    if (r < 0) throw ValidationError("ball radius must be >= 0");
    BfsResult ball = bfs_ball(G, r, cap, nullptr);
    const int n = static_cast<int>(ball.elems.size());
    Eigen::MatrixXd d(n, n);
    if (G->word_length) {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                double w = G->word_length(
                    G->mul(G->inv(ball.elems[static_cast<std::size_t>(i)]), ball.elems[static_cast<std::size_t>(j)]));
                d(i, j) = w;
                d(j, i) = w;
            }
    } else {
        // distances certified within the 2r ball; inf beyond
        BfsResult wide = bfs_ball(G, 2 * r, cap, nullptr);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                Elem q = G->mul(G->inv(ball.elems[static_cast<std::size_t>(i)]), ball.elems[static_cast<std::size_t>(j)]);
                auto it = wide.index.find(q);
                double w = it == wide.index.end() ? kInf : wide.len[static_cast<std::size_t>(it->second)];
                d(i, j) = w;
                d(j, i) = w;
            }
    }
    GroupWindow W;
    W.group = G;
    W.radius = r;
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (const auto& e : ball.elems) labels.push_back(G->show(e));
    W.space = std::make_shared<FiniteMetricSpace>(std::move(d), 0, std::move(labels));
    W.elems = std::move(ball.elems);
    W.index = std::move(ball.index);
    return W;
}

ScaledCover group_cover(const GroupWindow& W, const std::vector<Elem>& F_prime) {
    std::vector<PointSet> blocks;
    for (const auto& x : W.elems) {
        PointSet block;
        for (const auto& f : F_prime) {
            int idx = W.find(W.group->mul(x, f));
            if (idx >= 0) block.push_back(idx);
        }
        if (!block.empty()) blocks.push_back(std::move(block));
    }
    return make_cover(*W.space, std::move(blocks));
}

std::vector<Elem> kernel_ball(const GroupHom& h, double r, std::size_t cap) {
    h.validate();
    BfsResult ball = bfs_ball(h.source, r, cap, &h);
    std::vector<Elem> out;
    for (std::size_t i = 0; i < ball.elems.size(); ++i)
        if (ball.image[i] == h.target->identity) out.push_back(ball.elems[i]);
    return out;
}

LocalFinitenessVerdict local_finiteness_probe(const GroupHom& h, double r, std::size_t cap) {
    std::vector<Elem> seed = kernel_ball(h, r);
    std::set<Elem> known(seed.begin(), seed.end());
    known.insert(h.source->identity);
    std::deque<Elem> work(known.begin(), known.end());
    std::vector<Elem> all(known.begin(), known.end());
    while (!work.empty()) {
        Elem x = work.front();
        work.pop_front();
        for (std::size_t i = 0; i < all.size(); ++i) {
            for (const Elem& p : {h.source->mul(x, all[i]), h.source->mul(all[i], x)}) {
                if (known.insert(p).second) {
                    if (known.size() > cap) return {false, known.size()};
                    all.push_back(p);
                    work.push_back(p);
                }
            }
        }
    }
    return {true, known.size()};
}

LSMap hom_window_map(const GroupHom& h, double window_r, std::size_t cap) {
    h.validate();
    BfsResult ball = bfs_ball(h.source, window_r, cap, &h);
    // stretch: the codomain window must hold every image
    double stretch = 0.0;
    if (h.target->word_length) {
        for (const auto& img : h.gen_images) stretch = std::max(stretch, h.target->word_length(img));
    } else {
        BfsResult probe = bfs_ball(h.target, window_r * static_cast<double>(h.gen_images.size() + 1), cap, nullptr);
        for (const auto& img : h.gen_images) {
            auto it = probe.index.find(img);
            if (it == probe.index.end()) throw ValidationError("generator image not reachable in target probe");
            stretch = std::max(stretch, probe.len[static_cast<std::size_t>(it->second)]);
        }
    }
    GroupWindow domain = word_ball(h.source, window_r, cap);
    GroupWindow codomain = word_ball(h.target, window_r * std::max(1.0, stretch), cap);
    LSMap f{domain.space, codomain.space, {}};
    f.values.reserve(ball.elems.size());
    for (std::size_t i = 0; i < ball.elems.size(); ++i) {
        int idx = codomain.find(ball.image[i]);
        if (idx < 0) throw ValidationError("image escaped the stretched codomain window");
        f.values.push_back(idx);
    }
    return f;
}

ResponseTable hom_light_window(const GroupHom& h, double window_r, const std::vector<double>& r_grid,
                               const std::vector<double>& s_grid, std::size_t cap) {
    LSMap f = hom_window_map(h, window_r, cap);
    return light_response(f, r_grid, s_grid);
}

ResponseTable subgroup_window_embedding(const GroupHom& inclusion, double window_r,
                                        const std::vector<double>& s_grid, std::size_t cap) {
    LSMap f = hom_window_map(inclusion, window_r, cap);
    std::set<int> seen(f.values.begin(), f.values.end());
    if (seen.size() != f.values.size())
        throw ValidationError("inclusion is not injective on the window");
    return embedding_response(f, s_grid);
}

ConnectivityResult connectivity_generators(const GroupPtr& G, const std::vector<Elem>& F_prime,
                                           double window_r, std::size_t cap) {
    GroupWindow W = word_ball(G, window_r, cap);
    ScaledCover cov = group_cover(W, F_prime);
    Partition p = components_under(*W.space, W.space->all_points(), cov);
    return {p.classes.size() == 1, static_cast<int>(p.classes.size())};
}

} // namespace coarsekit
