#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bci/group.hpp"
#include "bci/perm_group.hpp"

namespace bci {

// A verified map between groups, stored as images of every source element.
struct GroupMap {
    std::vector<std::uint16_t> images;
    bool is_homomorphism = false;
    bool is_injective = false;
    bool is_surjective = false;
};

GroupMap verify_map(const FinGroup& src, const FinGroup& dst,
                    std::vector<std::uint16_t> images);

// Backtracking search for injective homomorphisms src -> dst. `gens` is a
// generating sequence of the domain subgroup; the first `seed.size()` images
// are prescribed. Calls `found` with the images of the generated subgroup
// (full image map over src indices, -1 where undefined); return false from
// the callback to stop the search. Returns the number of maps found.
std::size_t search_injective_homs(
    const FinGroup& src, const FinGroup& dst, const IndexSet& gens,
    const std::vector<std::uint16_t>& seed,
    const std::function<bool(const std::vector<int>&)>& found);

// Complete duplicate-free list of subgroups (sorted element lists, sorted
// lexicographically). Guarded by limits().max_subgroup_scan.
std::vector<IndexSet> all_subgroups(const FinGroup& g);

// All table-preserving bijections fixing the identity, as a permutation group
// on element indices (fully materialized).
PermGroup automorphism_group(const FinGroup& g);

// First isomorphism in search order, if any.
std::optional<GroupMap> find_isomorphism(const FinGroup& g, const FinGroup& h);

// First injective homomorphism in search order, if any.
std::optional<GroupMap> find_embedding(const FinGroup& g, const FinGroup& h);

// Does the partial map sending subgroup element sub[i] to images[i] extend to
// an automorphism of g? `sub` must be a subgroup element list; `images` the
// images of exactly those elements (an isomorphism onto another subgroup).
bool extends_to_automorphism(const FinGroup& g, const IndexSet& sub,
                             const std::vector<std::uint16_t>& images);

struct HomogeneityWitness {
    IndexSet subgroup_a, subgroup_b;            // element lists in g
    std::vector<std::uint16_t> iso_images;      // image in b of each element of a
};

struct HomogeneityResult {
    bool homogeneous = true;
    std::optional<HomogeneityWitness> witness;
};

// True iff every isomorphism between subgroups extends to an automorphism.
HomogeneityResult is_homogeneous(const FinGroup& g);

// The materialized permutation group as an abstract group; element i of the
// group is element i of pg.elements().
FinGroup perm_group_as_fingroup(const PermGroup& pg, const std::string& name = "P");

} // namespace bci
