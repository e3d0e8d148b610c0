#include "bci/arcs.hpp"

#include <stdexcept>
#include <unordered_set>

#include "bci/canonical.hpp"
#include "bci/limits.hpp"

namespace bci {
namespace {

std::uint64_t count_extensions(const Graph& g, std::vector<std::uint16_t>& walk,
                               std::uint32_t remaining) {
    if (remaining == 0) return 1;
    std::uint64_t total = 0;
    std::uint16_t tip = walk.back();
    std::uint16_t prev = walk.size() >= 2 ? walk[walk.size() - 2] : static_cast<std::uint16_t>(0xffff);
    for (std::uint16_t w : g.neighbors(tip)) {
        if (walk.size() >= 2 && w == prev) continue;
        walk.push_back(w);
        total += count_extensions(g, walk, remaining - 1);
        walk.pop_back();
    }
    return total;
}

void check_preserves_edges(const Graph& g, const PermGroup& a) {
    for (const Perm& p : a.generators()) {
        if (p.degree() != g.vertex_count())
            throw std::invalid_argument("arc transitivity: group degree mismatch");
        for (auto [u, v] : g.edges())
            if (!g.has_edge(p[u], p[v]))
                throw std::invalid_argument("arc transitivity: group does not preserve edges");
    }
}

} // namespace

std::uint64_t count_s_arcs(const Graph& g, std::uint32_t s) {
    if (s < 1) throw std::invalid_argument("count_s_arcs: s must be >= 1");
    std::uint64_t total = 0;
    std::vector<std::uint16_t> walk;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        walk.assign(1, static_cast<std::uint16_t>(v));
        total += count_extensions(g, walk, s);
    }
    return total;
}

std::vector<SArc> enumerate_s_arcs(const Graph& g, std::uint32_t s, std::uint64_t cap) {
    if (cap == 0) cap = limits().max_elements;
    std::vector<SArc> out;
    std::vector<std::uint16_t> walk;
    auto extend = [&](auto&& self, std::uint32_t remaining) -> void {
        if (out.size() > cap) throw CapExceeded("enumerate_s_arcs: cap exceeded", out.size());
        if (remaining == 0) {
            out.push_back({walk});
            return;
        }
        std::uint16_t tip = walk.back();
        for (std::uint16_t w : g.neighbors(tip)) {
            if (walk.size() >= 2 && w == walk[walk.size() - 2]) continue;
            walk.push_back(w);
            self(self, remaining - 1);
            walk.pop_back();
        }
    };
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        walk.assign(1, static_cast<std::uint16_t>(v));
        extend(extend, s);
    }
    return out;
}

bool is_arc_transitive(const Graph& g, const PermGroup& a) {
    check_preserves_edges(g, a);
    if (g.edge_count() == 0) return true;
    std::uint64_t arc_total = 2 * g.edge_count();
    auto first_edge = g.edges().front();
    std::unordered_set<std::uint32_t> seen;
    std::vector<std::pair<std::uint16_t, std::uint16_t>> queue{first_edge};
    auto key = [&](std::uint16_t u, std::uint16_t v) {
        return static_cast<std::uint32_t>(u) << 16 | v;
    };
    seen.insert(key(first_edge.first, first_edge.second));
    for (std::size_t head = 0; head < queue.size(); ++head) {
        auto [u, v] = queue[head];
        for (const Perm& p : a.generators()) {
            std::uint16_t nu = p[u], nv = p[v];
            if (seen.insert(key(nu, nv)).second) queue.emplace_back(nu, nv);
        }
    }
    return seen.size() == arc_total;
}

bool is_arc_transitive(const Graph& g) {
    return is_arc_transitive(g, graph_automorphism_group(g));
}

bool is_s_arc_transitive(const Graph& g, const PermGroup& a, std::uint32_t s) {
    std::uint64_t total = count_s_arcs(g, s);
    if (total == 0) return false;
    // Orbit of the first s-arc under the generators.
    std::vector<std::uint16_t> start;
    {
        auto arcs = enumerate_s_arcs(g, s, total + 1);
        start = arcs.front().vertices;
    }
    struct TupleHash {
        std::size_t operator()(const std::vector<std::uint16_t>& w) const {
            return static_cast<std::size_t>(hash_span(w));
        }
    };
    std::unordered_set<std::vector<std::uint16_t>, TupleHash> seen;
    std::vector<std::vector<std::uint16_t>> queue{start};
    seen.insert(start);
    std::vector<std::uint16_t> img(start.size());
    for (std::size_t head = 0; head < queue.size(); ++head) {
        auto cur = queue[head];
        for (const Perm& p : a.generators()) {
            for (std::size_t i = 0; i < cur.size(); ++i) img[i] = p[cur[i]];
            if (seen.insert(img).second) queue.push_back(img);
        }
    }
    return seen.size() == total;
}

SRegularity s_regularity(const Graph& g) {
    return s_regularity(g, graph_automorphism_group(g));
}

SRegularity s_regularity(const Graph& g, const PermGroup& aut) {
    if (!g.is_regular(3)) throw std::invalid_argument("s_regularity: graph is not cubic");
    if (connected_components(g).size() != 1)
        throw std::invalid_argument("s_regularity: graph is not connected");
    check_preserves_edges(g, aut);
    SRegularity r;
    r.aut_order = aut.order();
    std::uint32_t s = 1;
    while (is_s_arc_transitive(g, aut, s)) {
        r.max_transitive_s = s;
        if (count_s_arcs(g, s) == r.aut_order) {
            r.regular_at = s;
            break;  // regular on s-arcs => not transitive on (s+1)-arcs
        }
        ++s;
        if (s > 16) break;
    }
    return r;
}

} // namespace bci
