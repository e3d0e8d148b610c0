#include "bci/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace bci {

Graph::Graph(std::uint32_t n, std::span<const std::pair<std::uint16_t, std::uint16_t>> edges)
    : n_(n), adj_(n), bits_((static_cast<std::size_t>(n) * n + 63) / 64, 0) {
    auto set_bit = [&](std::uint32_t u, std::uint32_t v) {
        std::size_t bit = static_cast<std::size_t>(u) * n_ + v;
        bits_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
    };
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw std::invalid_argument("Graph: vertex out of range");
        if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
        if (has_edge(u, v)) continue;  // collapse duplicates
        set_bit(u, v);
        set_bit(v, u);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        ++edge_count_;
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph Graph::from_edges(std::uint32_t n,
                        std::initializer_list<std::pair<std::uint16_t, std::uint16_t>> edges) {
    std::vector<std::pair<std::uint16_t, std::uint16_t>> e(edges);
    return Graph(n, e);
}

bool Graph::is_regular(std::size_t k) const {
    for (std::uint32_t v = 0; v < n_; ++v)
        if (adj_[v].size() != k) return false;
    return true;
}

std::vector<std::pair<std::uint16_t, std::uint16_t>> Graph::edges() const {
    std::vector<std::pair<std::uint16_t, std::uint16_t>> out;
    out.reserve(edge_count_);
    for (std::uint32_t u = 0; u < n_; ++u)
        for (std::uint16_t v : adj_[u])
            if (u < v) out.emplace_back(static_cast<std::uint16_t>(u), v);
    return out;
}

Graph Graph::relabeled(const Perm& p) const {
    if (p.degree() != n_) throw std::invalid_argument("Graph::relabeled: degree mismatch");
    std::vector<std::pair<std::uint16_t, std::uint16_t>> e;
    e.reserve(edge_count_);
    for (auto [u, v] : edges()) e.emplace_back(p[u], p[v]);
    return Graph(n_, e);
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
}

DiGraph::DiGraph(std::uint32_t n, std::span<const std::pair<std::uint16_t, std::uint16_t>> arcs)
    : n_(n), out_(n) {
    for (auto [u, v] : arcs) {
        if (u >= n || v >= n) throw std::invalid_argument("DiGraph: vertex out of range");
        if (u == v) throw std::invalid_argument("DiGraph: loops are not allowed");
        out_[u].push_back(v);
    }
    for (auto& nb : out_) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw std::invalid_argument("DiGraph: duplicate arc");
        arc_count_ += nb.size();
    }
}

bool DiGraph::has_arc(std::uint32_t u, std::uint32_t v) const {
    const auto& nb = out_[u];
    return std::binary_search(nb.begin(), nb.end(), static_cast<std::uint16_t>(v));
}

std::vector<std::pair<std::uint16_t, std::uint16_t>> DiGraph::arcs() const {
    std::vector<std::pair<std::uint16_t, std::uint16_t>> out;
    out.reserve(arc_count_);
    for (std::uint32_t u = 0; u < n_; ++u)
        for (std::uint16_t v : out_[u]) out.emplace_back(static_cast<std::uint16_t>(u), v);
    return out;
}

VertexPartition VertexPartition::from_parts(std::uint32_t n,
                                            std::vector<std::vector<std::uint16_t>> parts) {
    VertexPartition p;
    p.parts = std::move(parts);
    p.part_of.assign(n, 0xffff);
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (p.parts[i].empty()) throw std::invalid_argument("VertexPartition: empty part");
        std::sort(p.parts[i].begin(), p.parts[i].end());
        for (std::uint16_t v : p.parts[i]) {
            if (v >= n || p.part_of[v] != 0xffff)
                throw std::invalid_argument("VertexPartition: not a partition");
            p.part_of[v] = static_cast<std::uint16_t>(i);
        }
    }
    return p;
}

VertexPartition VertexPartition::singletons(std::uint32_t n) {
    std::vector<std::vector<std::uint16_t>> parts(n);
    for (std::uint32_t v = 0; v < n; ++v) parts[v] = {static_cast<std::uint16_t>(v)};
    return from_parts(n, std::move(parts));
}

bool VertexPartition::covers(std::uint32_t n) const {
    if (part_of.size() != n) return false;
    for (std::uint16_t p : part_of)
        if (p == 0xffff) return false;
    return true;
}

std::vector<std::vector<std::uint16_t>> connected_components(const Graph& g) {
    std::vector<std::vector<std::uint16_t>> comps;
    std::vector<bool> seen(g.vertex_count(), false);
    for (std::uint32_t s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        std::vector<std::uint16_t> comp{static_cast<std::uint16_t>(s)};
        seen[s] = true;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (std::uint16_t w : g.neighbors(comp[head]))
                if (!seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Graph induced_subgraph(const Graph& g, std::span<const std::uint16_t> vertices) {
    std::vector<std::uint16_t> verts(vertices.begin(), vertices.end());
    std::sort(verts.begin(), verts.end());
    std::vector<int> pos(g.vertex_count(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<std::uint16_t, std::uint16_t>> e;
    for (std::uint16_t v : verts)
        for (std::uint16_t w : g.neighbors(v))
            if (v < w && pos[w] >= 0)
                e.emplace_back(static_cast<std::uint16_t>(pos[v]),
                               static_cast<std::uint16_t>(pos[w]));
    return Graph(static_cast<std::uint32_t>(verts.size()), e);
}

std::optional<std::uint32_t> girth(const Graph& g) {
    std::uint32_t best = 0xffffffff;
    std::vector<std::int32_t> dist(g.vertex_count());
    std::vector<std::int32_t> parent(g.vertex_count());
    std::vector<std::uint16_t> queue;
    for (std::uint32_t s = 0; s < g.vertex_count(); ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        queue.clear();
        queue.push_back(static_cast<std::uint16_t>(s));
        dist[s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            std::uint16_t u = queue[head];
            if (static_cast<std::uint32_t>(2 * dist[u]) >= best) break;
            for (std::uint16_t w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u] && static_cast<std::int32_t>(w) != u) {
                    // Cycle through s of length dist[u] + dist[w] + 1 (only
                    // exact when the cycle passes near s; taking the minimum
                    // over all start vertices makes it exact overall).
                    std::uint32_t len = static_cast<std::uint32_t>(dist[u] + dist[w] + 1);
                    best = std::min(best, len);
                }
            }
        }
    }
    if (best == 0xffffffff) return std::nullopt;
    return best;
}

Graph quotient_graph(const Graph& g, const VertexPartition& partition) {
    if (!partition.covers(g.vertex_count()))
        throw std::invalid_argument("quotient_graph: partition does not cover the graph");
    std::vector<std::pair<std::uint16_t, std::uint16_t>> e;
    for (auto [u, v] : g.edges()) {
        std::uint16_t pu = partition.part_of[u], pv = partition.part_of[v];
        if (pu != pv) e.emplace_back(pu, pv);
    }
    return Graph(partition.size(), e);
}

std::string adjacency_json(const Graph& g) {
    std::string out = "[";
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        if (v) out += ",";
        out += "[";
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(nb[i]);
        }
        out += "]";
    }
    out += "]";
    return out;
}

} // namespace bci
