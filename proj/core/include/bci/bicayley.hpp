#pragma once

#include <cstdint>

#include "bci/graph.hpp"
#include "bci/group.hpp"
#include "bci/perm_group.hpp"

namespace bci {

// A bi-Cayley instance: group plus connection set. Vertex convention for the
// graph on G x {0,1}: (x,0) -> idx(x), (x,1) -> |G| + idx(x).
struct BiCayleySpec {
    FinGroup group;
    IndexSet set;

    std::uint16_t left_vertex(std::uint16_t x) const { return x; }
    std::uint16_t right_vertex(std::uint16_t x) const {
        return static_cast<std::uint16_t>(group.order() + x);
    }
};

// Bipartite graph on 2|G| vertices with edges {(x,0),(sx,1)} for s in S.
Graph bcay(const FinGroup& g, std::span<const std::uint16_t> s);

// Cayley digraph with arcs (x, sx); the identity may not lie in S.
DiGraph cay(const FinGroup& g, std::span<const std::uint16_t> s);

// The two sides of the bi-Cayley vertex set as a partition-like pair.
std::pair<std::vector<std::uint16_t>, std::vector<std::uint16_t>> bcay_sides(std::uint16_t n);

// G acting on G x {0,1} by right translation, (x,i) -> (xg,i); isomorphic to
// G, semiregular with the two sides as orbits. Fully materialized.
PermGroup right_translation_group(const FinGroup& g);
Perm right_translation(const FinGroup& g, std::uint16_t x);

// G acting on itself by right translation (degree |G|), for Cayley digraphs.
PermGroup right_regular_representation(const FinGroup& g);

// True iff the bi-Cayley graph of (g, s) is connected, decided structurally:
// s0^-1 S must generate g.
bool bcay_connected_by_generation(const FinGroup& g, std::span<const std::uint16_t> s);

} // namespace bci
