#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bci/perm.hpp"

namespace bci {

// A simple undirected graph on vertices 0..n-1: sorted neighbor lists plus a
// packed adjacency bitset. Immutable after construction.
class Graph {
public:
    Graph(std::uint32_t n, std::span<const std::pair<std::uint16_t, std::uint16_t>> edges);
    static Graph from_edges(std::uint32_t n,
                            std::initializer_list<std::pair<std::uint16_t, std::uint16_t>> edges);

    std::uint32_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }
    bool has_edge(std::uint32_t u, std::uint32_t v) const {
        std::size_t bit = static_cast<std::size_t>(u) * n_ + v;
        return (bits_[bit >> 6] >> (bit & 63)) & 1;
    }
    const std::vector<std::uint16_t>& neighbors(std::uint32_t v) const { return adj_[v]; }
    std::size_t degree(std::uint32_t v) const { return adj_[v].size(); }
    bool is_regular(std::size_t k) const;

    std::vector<std::pair<std::uint16_t, std::uint16_t>> edges() const;
    Graph relabeled(const Perm& p) const;  // vertex v becomes p[v]

    bool operator==(const Graph& other) const;

private:
    std::uint32_t n_;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<std::uint16_t>> adj_;
    std::vector<std::uint64_t> bits_;
};

// A digraph as out-neighbor lists; no duplicate arcs, no loops.
class DiGraph {
public:
    DiGraph(std::uint32_t n, std::span<const std::pair<std::uint16_t, std::uint16_t>> arcs);

    std::uint32_t vertex_count() const { return n_; }
    std::size_t arc_count() const { return arc_count_; }
    const std::vector<std::uint16_t>& out_neighbors(std::uint32_t v) const { return out_[v]; }
    bool has_arc(std::uint32_t u, std::uint32_t v) const;
    std::vector<std::pair<std::uint16_t, std::uint16_t>> arcs() const;

private:
    std::uint32_t n_;
    std::size_t arc_count_ = 0;
    std::vector<std::vector<std::uint16_t>> out_;
};

// An ordered partition of 0..n-1 into nonempty parts.
struct VertexPartition {
    std::vector<std::vector<std::uint16_t>> parts;
    std::vector<std::uint16_t> part_of;  // vertex -> part index

    static VertexPartition from_parts(std::uint32_t n,
                                      std::vector<std::vector<std::uint16_t>> parts);
    static VertexPartition singletons(std::uint32_t n);
    std::uint32_t size() const { return static_cast<std::uint32_t>(parts.size()); }
    bool covers(std::uint32_t n) const;
};

std::vector<std::vector<std::uint16_t>> connected_components(const Graph& g);
Graph induced_subgraph(const Graph& g, std::span<const std::uint16_t> vertices);

// Girth via breadth-first search from every vertex; nullopt when acyclic.
std::optional<std::uint32_t> girth(const Graph& g);

// Quotient by a vertex partition: parts are adjacent iff some pair of their
// members is; the result is simple (no loops kept).
Graph quotient_graph(const Graph& g, const VertexPartition& partition);

// Sorted adjacency lists as a JSON-ish string: [[1,2],[0],[0]].
std::string adjacency_json(const Graph& g);

} // namespace bci
