#include "coarsekit/corpus.hpp"

#include <algorithm>

#include "coarsekit/errors.hpp"

namespace coarsekit {

std::vector<std::string> corpus_map_names() {
    return {"identity", "constant", "fold", "shift", "parity", "scale2", "proj0"};
}

LSMap corpus_map(const std::string& name, int window) {
    if (window < 1) throw ValidationError("corpus window must be >= 1");
    const int w = window;
    auto zspace = [](int lo, int hi) {
        return std::make_shared<FiniteMetricSpace>(FiniteMetricSpace::z_window(lo, hi, 0));
    };
    if (name == "identity") return identity_map(zspace(0, w));
    if (name == "constant") {
        auto pt = std::make_shared<FiniteMetricSpace>(FiniteMetricSpace::point());
        return constant_map(zspace(0, w), pt, 0);
    }
    if (name == "fold") {
        LSMap f{zspace(-w, w), zspace(0, w), {}};
        for (int n = -w; n <= w; ++n) f.values.push_back(std::abs(n));
        return f;
    }
    if (name == "shift") {
        auto X = zspace(0, w);
        LSMap f{X, X, {}};
        for (int n = 0; n <= w; ++n) f.values.push_back(std::min(n + 1, w));
        return f;
    }
    if (name == "parity") {
        LSMap f{zspace(0, w), zspace(0, 1), {}};
        for (int n = 0; n <= w; ++n) f.values.push_back(n % 2);
        return f;
    }
    if (name == "scale2") {
        LSMap f{zspace(0, w), zspace(0, 2 * w), {}};
        for (int n = 0; n <= w; ++n) f.values.push_back(2 * n);
        return f;
    }
    if (name == "proj0") {
        const int h = std::min(w, 4);
        auto A = zspace(0, w);
        auto C = zspace(0, h);
        SpacePtr P = product_space(A, C);
        LSMap f{P, A, {}};
        for (int a = 0; a <= w; ++a)
            for (int c = 0; c <= h; ++c) f.values.push_back(a);
        return f;
    }
    throw ValidationError("unknown corpus map: " + name);
}

std::vector<std::string> corpus_hom_names() {
    return {"lamplighter_to_Z", "F2_to_Z", "Z_to_Z2", "Z_identity", "double_Z", "free_a_in_F2"};
}

GroupHom corpus_hom(const std::string& name) {
    if (name == "lamplighter_to_Z")
        return GroupHom{GroupSpec::lamplighter(), GroupSpec::integers(1), {{1}, {-1}, {0}}};
    if (name == "F2_to_Z")
        return GroupHom{GroupSpec::free_group(2), GroupSpec::integers(1), {{1}, {-1}, {0}, {0}}};
    if (name == "Z_to_Z2")
        return GroupHom{GroupSpec::integers(1), GroupSpec::integers(2), {{1, 0}, {-1, 0}}};
    if (name == "Z_identity")
        return GroupHom{GroupSpec::integers(1), GroupSpec::integers(1), {{1}, {-1}}};
    if (name == "double_Z")
        return GroupHom{GroupSpec::integers(1), GroupSpec::integers(1), {{2}, {-2}}};
    if (name == "free_a_in_F2")
        return GroupHom{GroupSpec::free_group(1), GroupSpec::free_group(2), {{1}, {-1}}};
    throw ValidationError("unknown corpus hom: " + name);
}

} // namespace coarsekit
