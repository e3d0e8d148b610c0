#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <vector>

#include "bci/bicayley.hpp"
#include "bci/graph.hpp"
#include "bci/group.hpp"
#include "bci/group_actions.hpp"

namespace bci {

// Witness for T = g S^alpha.
struct BiCayleyEquivalence {
    std::uint16_t g;
    std::vector<std::uint16_t> alpha;  // images of all group elements
};

struct EquivalenceScan {
    std::optional<BiCayleyEquivalence> witness;
    std::uint64_t pairs_tried = 0;  // exhaustion certificate on absence
};

// Exhaustive search over Aut(G) x translation candidates for T = g S^alpha.
EquivalenceScan bicayley_equivalent(const FinGroup& g, std::span<const std::uint16_t> s,
                                    std::span<const std::uint16_t> t);

// One lexicographically-least representative per orbit of k-subsets under
// T -> g T^alpha. Orbit sizes are validated to sum to C(n,k).
struct ConnectionSetClasses {
    std::vector<IndexSet> representatives;
    std::vector<std::uint64_t> orbit_sizes;
    std::uint64_t subset_count = 0;
};
ConnectionSetClasses connection_set_classes(const FinGroup& g, std::uint32_t k);

struct BCIWitness {
    IndexSet counterexample_set;       // T with an isomorphic, non-equivalent graph
    Perm graph_isomorphism;            // BCay(G,S) -> BCay(G,T), edge-verified
    std::uint64_t pairs_exhausted = 0; // (alpha, candidate) pairs ruled out
};

struct BCIVerdict {
    std::string group_name;
    IndexSet set;
    bool is_bci = false;
    // On a positive verdict: the single isomorphic class representative with
    // its algebraic witness.
    std::vector<std::pair<IndexSet, BiCayleyEquivalence>> equivalences;
    std::optional<BCIWitness> counterexample;
    std::string certificate;
    double elapsed_ms = 0.0;
};

nlohmann::json to_json(const FinGroup& g, const BCIVerdict& v);

BCIVerdict is_bci_graph(const FinGroup& g, std::span<const std::uint16_t> s);

struct MBCIClassEntry {
    std::uint32_t k = 0;
    IndexSet representative;
    bool is_bci = false;
};

struct MBCIReport {
    bool is_m_bci = false;
    std::vector<MBCIClassEntry> classes;
    std::optional<std::pair<IndexSet, IndexSet>> witness_pair;  // isomorphic non-equivalent
};

// Conjunction of is_bci_graph over all classes of size <= m, computed by
// certificate grouping (classes in one certificate group are pairwise
// isomorphic and never equivalent).
MBCIReport is_m_bci_group(const FinGroup& g, std::uint32_t m);

struct CIVerdict {
    bool is_ci = false;
    std::optional<IndexSet> counterexample_set;
    std::uint64_t automorphisms_exhausted = 0;
};

CIVerdict is_ci_digraph(const FinGroup& g, std::span<const std::uint16_t> s);
// Capped at m <= 2.
bool is_m_dci_group(const FinGroup& g, std::uint32_t m);

struct SemiregularClassReport {
    std::vector<PermGroup> members;  // of G(Aut Gamma), isomorphic to G
    bool all_conjugate = false;
    SubgroupConjugacy conjugacy;
    std::uint64_t aut_order = 0;
};

// Members of G(Aut(Gamma)) isomorphic to G -- the semiregular subgroups whose
// two orbits are the sides -- plus their conjugacy classification in
// Aut(Gamma).
SemiregularClassReport bipartite_semiregular_class(const Graph& gamma, const FinGroup& g);

// The conjugacy criterion: for G in the subgroup-closed class and |S| = 3,
// BCay(G,S) is a BCI-graph iff all members are conjugate.
bool bci_by_conjugacy(const FinGroup& g, std::span<const std::uint16_t> s);

struct TransferReport {
    bool hypothesis_holds = false;  // Aut(Gamma) fixes (1,0) iff it fixes (1,1)
    bool ci_verdict = false;        // Cay(G, S \ {1}) CI
    bool bci_verdict = false;       // BCay(G, S) BCI
};

// The CI <-> BCI transfer for 1 in S, |S| = 3: when the two vertex
// stabilizers coincide the verdicts must agree.
TransferReport ci_bci_transfer(const FinGroup& g, std::span<const std::uint16_t> s);

// (s, s^-1 S) with s the least element of S; the BCI status is invariant
// under this normalization.
std::pair<std::uint16_t, IndexSet> normalized_connection_set(const FinGroup& g,
                                                             std::span<const std::uint16_t> s);

} // namespace bci
