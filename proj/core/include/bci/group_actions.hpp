#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bci/group.hpp"
#include "bci/group_ops.hpp"
#include "bci/perm_group.hpp"

namespace bci {

// A G-invariant partition of the domain. Validated on construction.
struct BlockSystem {
    std::vector<std::vector<std::uint16_t>> blocks;
    std::vector<std::uint16_t> block_of;

    static BlockSystem from_blocks(const PermGroup& g,
                                   std::vector<std::vector<std::uint16_t>> blocks);
    std::size_t size() const { return blocks.size(); }
};

std::vector<std::vector<std::uint16_t>> orbits(const PermGroup& g);
std::vector<std::vector<std::uint16_t>> orbits_on(const PermGroup& g,
                                                  std::span<const std::uint16_t> domain);
std::vector<std::uint16_t> orbit_of(const PermGroup& g, std::uint16_t v);

bool is_transitive(const PermGroup& g);
bool is_transitive_on(const PermGroup& g, std::span<const std::uint16_t> domain);

// Exact stabilizers by element filtering (materializes g).
PermGroup point_stabilizer(const PermGroup& g, std::uint16_t v);
PermGroup pointwise_stabilizer(const PermGroup& g, std::span<const std::uint16_t> points);
PermGroup setwise_stabilizer(const PermGroup& g, std::span<const std::uint16_t> set);

// Semiregular: every point stabilizer trivial (checked generator-free via
// element scan); regular: semiregular and transitive.
bool is_semiregular(const PermGroup& g);
bool is_semiregular_on(const PermGroup& g, std::span<const std::uint16_t> domain);
bool is_regular(const PermGroup& g);
bool is_regular_on(const PermGroup& g, std::span<const std::uint16_t> domain);

// The block system induced by the smallest block containing `seed`, for a
// transitive group: iterative union-find merge of seed images.
BlockSystem block_system_from_seed(const PermGroup& g, std::span<const std::uint16_t> seed);

// Alternative route for a two-point seed: the minimal block through {a,b} is
// the orbit of a under <G_a, h> for any h mapping a to b. Exposed for
// cross-checking against block_system_from_seed.
BlockSystem block_system_via_stabilizer(const PermGroup& g, std::uint16_t a, std::uint16_t b);

// Elementwise block-stabilizing kernel; normal in g.
PermGroup kernel_of_blocks(const PermGroup& g, const BlockSystem& delta);

// Largest normal subgroup of `a` contained in `h` (intersection of
// conjugates, iterated to a fixpoint).
PermGroup core_in(const PermGroup& a, const PermGroup& h);

// Generator-based normality test: h^g = h for every generator g of a.
bool is_normal(const PermGroup& a, const PermGroup& h);

// Conjugating element x with x^-1 H x = K, or verified absence. Scans the
// materialized elements when `a` is small; for big groups it walks the
// conjugation orbit of H under the generators, which decides the same
// question without touching every element.
std::optional<Perm> conjugating_element(const PermGroup& a, const PermGroup& h,
                                        const PermGroup& k);

struct SubgroupSearchOptions {
    bool require_semiregular = false;
    // When set: the orbit partition of the found subgroup must equal exactly
    // these sets (as unordered partition).
    std::optional<std::vector<std::vector<std::uint16_t>>> required_orbits;
    std::function<bool(const PermGroup&)> extra;  // final predicate
};

// All subgroups of `a` isomorphic to `g` satisfying the predicate, found by
// mapping a minimal generating sequence of g onto filtered element pools,
// deduplicated by element set, canonically sorted.
std::vector<PermGroup> find_isomorphic_subgroups(const PermGroup& a, const FinGroup& g,
                                                 const SubgroupSearchOptions& options = {});

// A Sylow p-subgroup, grown greedily by closure over p-elements.
PermGroup sylow_subgroup(const PermGroup& a, std::uint32_t p);

// Conjugacy classes of a family of subgroups under conjugation by `a`
// (breadth-first over the generators). Returns the class index per subgroup
// and, for each subgroup, an element conjugating its class representative
// onto it.
struct SubgroupConjugacy {
    std::vector<std::size_t> class_of;
    std::vector<std::size_t> class_reps;   // index into the input list
    std::vector<Perm> witness;             // rep^witness = subgroup
};
SubgroupConjugacy conjugacy_classes_of_subgroups(const PermGroup& a,
                                                 const std::vector<PermGroup>& subgroups);

} // namespace bci
