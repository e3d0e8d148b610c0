#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bci/graph.hpp"
#include "bci/perm_group.hpp"

namespace bci {

// An s-arc: consecutive vertices adjacent, no immediate backtracking.
struct SArc {
    std::vector<std::uint16_t> vertices;
};

// Number of s-arcs (ordered, s >= 1); enumeration available via callback.
std::uint64_t count_s_arcs(const Graph& g, std::uint32_t s);
std::vector<SArc> enumerate_s_arcs(const Graph& g, std::uint32_t s, std::uint64_t cap = 0);

// Is the group (generators must preserve edges, validated) transitive on the
// ordered adjacent pairs?
bool is_arc_transitive(const Graph& g, const PermGroup& a);
bool is_arc_transitive(const Graph& g);  // with the full automorphism group

// Transitivity on s-arcs under the given group, decided by breadth-first
// orbit closure on tuples.
bool is_s_arc_transitive(const Graph& g, const PermGroup& a, std::uint32_t s);

struct SRegularity {
    std::uint32_t max_transitive_s = 0;      // largest s with Aut transitive on s-arcs
    std::optional<std::uint32_t> regular_at; // s with |Aut| = number of s-arcs
    std::uint64_t aut_order = 0;
};

// Requires a connected cubic graph.
SRegularity s_regularity(const Graph& g);
SRegularity s_regularity(const Graph& g, const PermGroup& aut);

} // namespace bci
