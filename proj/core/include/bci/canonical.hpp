#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bci/graph.hpp"
#include "bci/perm_group.hpp"

namespace bci {

// Canonical labeling via iterated neighborhood refinement plus backtracking
// over the first smallest non-singleton cell, taking the lexicographically
// least adjacency encoding. Equal certificates iff isomorphic (colors, when
// given, must be matched by the isomorphism).
struct CanonicalCertificate {
    Perm labeling;            // original vertex -> canonical position
    std::string certificate;  // graph6 of the relabeled graph (+ color suffix)
};

struct CanonicalAnalysis {
    CanonicalCertificate canonical;
    std::vector<Perm> aut_generators;
};

CanonicalAnalysis canonical_analysis(const Graph& g,
                                     const std::vector<std::uint16_t>* colors = nullptr);
CanonicalCertificate canonical_form(const Graph& g);
CanonicalCertificate canonical_form_colored(const Graph& g,
                                            const std::vector<std::uint16_t>& colors);

// Full automorphism group from the canonical search (side swaps included).
PermGroup graph_automorphism_group(const Graph& g);
PermGroup graph_automorphism_group_colored(const Graph& g,
                                           const std::vector<std::uint16_t>& colors);

// Explicit edge-preserving bijection a -> b, or nullopt; every positive answer
// is re-verified edge by edge before being returned.
std::optional<Perm> isomorphism(const Graph& a, const Graph& b);

// Digraphs are handled by reduction: each arc (x,y) becomes a path
// x - t - h - y with fresh tail/head vertices colored 1 and 2 (vertices get
// color 0). Color-preserving isomorphisms of the encodings correspond exactly
// to digraph isomorphisms.
struct DigraphEncoding {
    Graph graph;
    std::vector<std::uint16_t> colors;
};
DigraphEncoding encode_digraph(const DiGraph& d);
std::string digraph_certificate(const DiGraph& d);
std::optional<Perm> digraph_isomorphism(const DiGraph& a, const DiGraph& b);
PermGroup digraph_automorphism_group(const DiGraph& d);

} // namespace bci
