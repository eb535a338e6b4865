#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>

#include "coarsekit/cover.hpp"
#include "coarsekit/lsmap.hpp"

namespace coarsekit {

/// Canonical-form element encoding; lexicographic comparison gives the
/// deterministic order.
using Elem = std::vector<long long>;

/// A group with computable multiplication, canonical forms and a finite
/// symmetric generating set. Only builtins with decidable canonical forms
/// are constructed.
struct GroupSpec {
    std::string name;
    Elem identity;
    std::function<Elem(const Elem&, const Elem&)> mul;
    std::function<Elem(const Elem&)> inv;
    std::vector<Elem> generators;       // symmetric, identity excluded
    std::vector<std::string> gen_names;
    std::vector<int> gen_inverse;       // index of each generator's inverse
    std::vector<std::vector<int>> relations; // words over generator indices equal to identity
    std::function<double(const Elem&)> word_length; // exact word metric when available
    std::function<std::string(const Elem&)> show;

    static std::shared_ptr<const GroupSpec> integers(int k);           // Z^k, unit generators
    static std::shared_ptr<const GroupSpec> free_group(int k);         // F_k
    static std::shared_ptr<const GroupSpec> lamplighter();             // (+) Z/2 x| Z
    static std::shared_ptr<const GroupSpec> permutation(const std::vector<std::vector<int>>& gens);
    static std::shared_ptr<const GroupSpec> direct_product(std::shared_ptr<const GroupSpec> a,
                                                           std::shared_ptr<const GroupSpec> b);
};

using GroupPtr = std::shared_ptr<const GroupSpec>;

/// Homomorphism given by generator images; images of builtin relation words
/// are checked against the identity.
struct GroupHom {
    GroupPtr source;
    GroupPtr target;
    std::vector<Elem> gen_images; // aligned with source->generators

    void validate() const;
    /// Image of an arbitrary element reached through a generator word.
    Elem apply_word(const std::vector<int>& gen_word) const;
};

constexpr std::size_t kDefaultBallCap = 200000;
constexpr std::size_t kDefaultClosureCap = 100000;

/// A word-metric ball materialized as a finite metric window; basepoint is
/// the identity.
struct GroupWindow {
    GroupPtr group;
    double radius = 0.0;
    SpacePtr space;
    std::vector<Elem> elems;       // BFS order (by word length, then canonical form)
    std::map<Elem, int> index;

    int find(const Elem& e) const;
};

GroupWindow word_ball(const GroupPtr& G, double r, std::size_t cap = kDefaultBallCap);

/// Blocks {x . F'} intersected with the window, one per window element.
ScaledCover group_cover(const GroupWindow& W, const std::vector<Elem>& F_prime);

/// Elements of word length <= r mapped to the identity.
std::vector<Elem> kernel_ball(const GroupHom& h, double r, std::size_t cap = kDefaultBallCap);

struct LocalFinitenessVerdict {
    bool finite = false;
    std::size_t size = 0; // closure size when finite, partial count otherwise
};

/// Closure of <kernel_ball(h, r)> under multiplication, stopping at the cap.
LocalFinitenessVerdict local_finiteness_probe(const GroupHom& h, double r,
                                              std::size_t cap = kDefaultClosureCap);

/// The induced map between word-ball windows of source and target.
LSMap hom_window_map(const GroupHom& h, double window_r, std::size_t cap = kDefaultBallCap);

/// light_response of the induced window map.
ResponseTable hom_light_window(const GroupHom& h, double window_r,
                               const std::vector<double>& r_grid,
                               const std::vector<double>& s_grid,
                               std::size_t cap = kDefaultBallCap);

/// embedding_response of the induced window map of a subgroup inclusion;
/// rejects maps that fail to be injective on the window.
ResponseTable subgroup_window_embedding(const GroupHom& inclusion, double window_r,
                                        const std::vector<double>& s_grid,
                                        std::size_t cap = kDefaultBallCap);

struct ConnectivityResult {
    bool connected = false;
    int component_count = 0;
};

/// Chain connectivity of the window under the group_cover(G, F') relation.
ConnectivityResult connectivity_generators(const GroupPtr& G, const std::vector<Elem>& F_prime,
                                           double window_r, std::size_t cap = kDefaultBallCap);

} // namespace coarsekit
