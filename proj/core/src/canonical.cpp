#include "bci/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "bci/graph6.hpp"
#include "bci/limits.hpp"

namespace bci {
namespace {

using Cells = std::vector<std::vector<std::uint16_t>>;

// One refinement round: split every cell by the per-cell neighbor counts of
// its vertices; fragments ordered by count signature. Iterated to a fixpoint,
// this yields the standard equitable refinement and is invariant under vertex
// relabeling.
Cells refine(const Graph& g, Cells cells) {
    std::uint32_t n = g.vertex_count();
    std::vector<std::uint16_t> cell_of(n);
    while (true) {
        std::size_t k = cells.size();
        if (k == n) return cells;
        for (std::size_t c = 0; c < k; ++c)
            for (std::uint16_t v : cells[c]) cell_of[v] = static_cast<std::uint16_t>(c);
        std::vector<std::vector<std::uint16_t>> sig(n, std::vector<std::uint16_t>(k, 0));
        for (std::uint32_t v = 0; v < n; ++v)
            for (std::uint16_t w : g.neighbors(v)) ++sig[v][cell_of[w]];

        Cells next;
        next.reserve(k);
        bool changed = false;
        for (auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(std::move(cell));
                continue;
            }
            std::stable_sort(cell.begin(), cell.end(), [&](std::uint16_t a, std::uint16_t b) {
                if (sig[a] != sig[b]) return sig[a] < sig[b];
                return a < b;
            });
            std::size_t start = 0;
            for (std::size_t i = 1; i <= cell.size(); ++i) {
                if (i == cell.size() || sig[cell[i]] != sig[cell[start]]) {
                    next.emplace_back(cell.begin() + start, cell.begin() + i);
                    start = i;
                }
            }
            if (next.back().size() != cell.size()) changed = true;
        }
        cells = std::move(next);
        if (!changed) return cells;
    }
}

// Adjacency bytes of the graph relabeled so that position p holds order[p];
// same bit order as graph6 (upper triangle, column-major), 6 bits per byte.
std::string leaf_bytes(const Graph& g, const std::vector<std::uint16_t>& order) {
    std::string out;
    int bits = 0, current = 0;
    std::uint32_t n = g.vertex_count();
    out.reserve(n * n / 12 + 2);
    for (std::uint32_t j = 1; j < n; ++j)
        for (std::uint32_t i = 0; i < j; ++i) {
            current = (current << 1) | (g.has_edge(order[i], order[j]) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(current + 63));
                bits = 0;
                current = 0;
            }
        }
    if (bits > 0) out.push_back(static_cast<char>((current << (6 - bits)) + 63));
    return out;
}

struct Searcher {
    const Graph& g;
    std::vector<Perm> auts;
    std::string first_bytes, best_bytes;
    std::vector<std::uint16_t> first_order, best_order;
    bool have_first = false;
    std::vector<std::uint16_t> prefix;
    std::uint64_t nodes = 0;

    explicit Searcher(const Graph& graph) : g(graph) {}

    void record_aut(const std::vector<std::uint16_t>& order_a,
                    const std::vector<std::uint16_t>& order_b) {
        // Both orders induce the same relabeled graph; the map sending
        // order_a[p] to order_b[p] is an automorphism.
        std::uint32_t n = g.vertex_count();
        std::vector<std::uint16_t> img(n);
        for (std::uint32_t p = 0; p < n; ++p) img[order_a[p]] = order_b[p];
        Perm a(std::move(img));
        if (a.is_identity()) return;
        for (auto [u, v] : g.edges())
            if (!g.has_edge(a[u], a[v]))
                throw std::logic_error("canonical search: recorded map is not an automorphism");
        auts.push_back(std::move(a));
    }

    void leaf(const Cells& cells) {
        std::vector<std::uint16_t> order(g.vertex_count());
        for (std::size_t p = 0; p < cells.size(); ++p) order[p] = cells[p][0];
        std::string bytes = leaf_bytes(g, order);
        if (!have_first) {
            have_first = true;
            first_bytes = bytes;
            first_order = order;
            best_bytes = std::move(bytes);
            best_order = std::move(order);
            return;
        }
        if (bytes == first_bytes) {
            record_aut(first_order, order);
            return;
        }
        if (bytes < best_bytes) {
            best_bytes = std::move(bytes);
            best_order = std::move(order);
        } else if (bytes == best_bytes) {
            record_aut(best_order, order);
        }
    }

    void explore(Cells cells) {
        if (++nodes > 5'000'000)
            throw CapExceeded("canonical search: node cap exceeded", nodes);
        cells = refine(g, std::move(cells));
        std::size_t target = cells.size();
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (cells[c].size() > 1 &&
                (target == cells.size() || cells[c].size() < cells[target].size()))
                target = c;
        }
        if (target == cells.size()) {
            leaf(cells);
            return;
        }

        std::vector<std::uint16_t> processed;
        for (std::uint16_t v : cells[target]) {
            if (equivalent_to_processed(v, processed)) continue;
            processed.push_back(v);
            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c == target) {
                    child.push_back({v});
                    std::vector<std::uint16_t> rest;
                    for (std::uint16_t w : cells[c])
                        if (w != v) rest.push_back(w);
                    child.push_back(std::move(rest));
                } else {
                    child.push_back(cells[c]);
                }
            }
            prefix.push_back(v);
            explore(std::move(child));
            prefix.pop_back();
        }
    }

    // Orbit pruning: skip v if some discovered automorphism fixing the
    // current prefix pointwise maps an already-processed sibling to v.
    bool equivalent_to_processed(std::uint16_t v, const std::vector<std::uint16_t>& processed) {
        if (processed.empty() || auts.empty()) return false;
        std::uint32_t n = g.vertex_count();
        std::vector<std::uint16_t> parent(n);
        for (std::uint32_t i = 0; i < n; ++i) parent[i] = static_cast<std::uint16_t>(i);
        auto find = [&](std::uint16_t x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        auto unite = [&](std::uint16_t a, std::uint16_t b) {
            a = find(a);
            b = find(b);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        };
        for (const Perm& a : auts) {
            bool fixes = true;
            for (std::uint16_t p : prefix)
                if (a[p] != p) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (std::uint32_t i = 0; i < n; ++i) unite(static_cast<std::uint16_t>(i), a[i]);
        }
        std::uint16_t rv = find(v);
        for (std::uint16_t u : processed)
            if (find(u) == rv) return true;
        return false;
    }
};

Cells initial_cells(std::uint32_t n, const std::vector<std::uint16_t>* colors) {
    if (!colors) {
        Cells cells(1);
        for (std::uint32_t v = 0; v < n; ++v) cells[0].push_back(static_cast<std::uint16_t>(v));
        return cells;
    }
    if (colors->size() != n)
        throw std::invalid_argument("canonical: color vector size mismatch");
    std::map<std::uint16_t, std::vector<std::uint16_t>> by_color;
    for (std::uint32_t v = 0; v < n; ++v)
        by_color[(*colors)[v]].push_back(static_cast<std::uint16_t>(v));
    Cells cells;
    for (auto& [c, vs] : by_color) cells.push_back(std::move(vs));
    return cells;
}

std::string color_suffix(std::uint32_t n, const std::vector<std::uint16_t>* colors) {
    if (!colors) return "";
    std::map<std::uint16_t, std::uint32_t> counts;
    for (std::uint32_t v = 0; v < n; ++v) ++counts[(*colors)[v]];
    std::string out = ";colors=";
    bool first = true;
    for (auto [c, cnt] : counts) {
        if (!first) out += ",";
        first = false;
        out += std::to_string(c) + "x" + std::to_string(cnt);
    }
    return out;
}

// Canonical analysis of one connected graph (or any graph when splitting is
// not wanted).
CanonicalAnalysis analyze_single(const Graph& g, const std::vector<std::uint16_t>* colors) {
    Searcher s(g);
    if (g.vertex_count() == 0) {
        return {{Perm(0), graph6_encode(g) + color_suffix(0, colors)}, {}};
    }
    s.explore(initial_cells(g.vertex_count(), colors));
    std::vector<std::uint16_t> labeling(g.vertex_count());
    for (std::uint32_t p = 0; p < g.vertex_count(); ++p) labeling[s.best_order[p]] = static_cast<std::uint16_t>(p);
    Perm lab(std::move(labeling));
    std::string cert = graph6_encode(g.relabeled(lab)) + color_suffix(g.vertex_count(), colors);
    return {{std::move(lab), std::move(cert)}, std::move(s.auts)};
}

CanonicalAnalysis analyze(const Graph& g, const std::vector<std::uint16_t>* colors) {
    if (g.vertex_count() > limits().max_canonical_vertices)
        throw CapExceeded("canonical: vertex cap exceeded", g.vertex_count());
    auto comps = connected_components(g);
    if (comps.size() <= 1) return analyze_single(g, colors);

    struct Comp {
        std::vector<std::uint16_t> vertices;  // global, sorted
        CanonicalAnalysis local;
        std::size_t original_index;
    };
    std::vector<Comp> parts;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        Graph sub = induced_subgraph(g, comps[i]);
        std::vector<std::uint16_t> local_colors;
        std::vector<std::uint16_t>* lc = nullptr;
        if (colors) {
            for (std::uint16_t v : comps[i]) local_colors.push_back((*colors)[v]);
            lc = &local_colors;
        }
        parts.push_back({comps[i], analyze_single(sub, lc), i});
    }
    std::stable_sort(parts.begin(), parts.end(), [](const Comp& a, const Comp& b) {
        if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
        return a.local.canonical.certificate < b.local.canonical.certificate;
    });

    // Assemble the global labeling: sorted components occupy consecutive
    // position blocks, each internally in its local canonical order.
    std::uint32_t n = g.vertex_count();
    std::vector<std::uint16_t> labeling(n);
    std::uint32_t base = 0;
    for (const Comp& c : parts) {
        for (std::size_t li = 0; li < c.vertices.size(); ++li)
            labeling[c.vertices[li]] =
                static_cast<std::uint16_t>(base + c.local.canonical.labeling[li]);
        base += static_cast<std::uint32_t>(c.vertices.size());
    }
    Perm lab(std::move(labeling));

    // Automorphism generators: local generators embedded, plus a swap between
    // each adjacent pair of certificate-equal components.
    std::vector<Perm> gens;
    for (const Comp& c : parts) {
        for (const Perm& a : c.local.aut_generators) {
            std::vector<std::uint16_t> img(n);
            for (std::uint32_t v = 0; v < n; ++v) img[v] = static_cast<std::uint16_t>(v);
            for (std::size_t li = 0; li < c.vertices.size(); ++li)
                img[c.vertices[li]] = c.vertices[a[li]];
            gens.push_back(Perm(std::move(img)));
        }
    }
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        const Comp& a = parts[i];
        const Comp& b = parts[i + 1];
        if (a.local.canonical.certificate != b.local.canonical.certificate) continue;
        // a.vertices[x] has canonical position p = lab_a[x]; send it to the
        // vertex of b at the same local position, and vice versa.
        std::vector<std::uint16_t> img(n);
        for (std::uint32_t v = 0; v < n; ++v) img[v] = static_cast<std::uint16_t>(v);
        std::vector<std::uint16_t> a_by_pos(a.vertices.size()), b_by_pos(b.vertices.size());
        for (std::size_t x = 0; x < a.vertices.size(); ++x)
            a_by_pos[a.local.canonical.labeling[x]] = a.vertices[x];
        for (std::size_t x = 0; x < b.vertices.size(); ++x)
            b_by_pos[b.local.canonical.labeling[x]] = b.vertices[x];
        for (std::size_t p = 0; p < a_by_pos.size(); ++p) {
            img[a_by_pos[p]] = b_by_pos[p];
            img[b_by_pos[p]] = a_by_pos[p];
        }
        gens.push_back(Perm(std::move(img)));
    }

    std::string cert = graph6_encode(g.relabeled(lab)) + color_suffix(n, colors);
    return {{std::move(lab), std::move(cert)}, std::move(gens)};
}

} // namespace

CanonicalAnalysis canonical_analysis(const Graph& g, const std::vector<std::uint16_t>* colors) {
    return analyze(g, colors);
}

CanonicalCertificate canonical_form(const Graph& g) { return analyze(g, nullptr).canonical; }

CanonicalCertificate canonical_form_colored(const Graph& g,
                                            const std::vector<std::uint16_t>& colors) {
    return analyze(g, &colors).canonical;
}

PermGroup graph_automorphism_group(const Graph& g) {
    auto res = analyze(g, nullptr);
    return PermGroup(static_cast<std::uint16_t>(g.vertex_count()), std::move(res.aut_generators));
}

PermGroup graph_automorphism_group_colored(const Graph& g,
                                           const std::vector<std::uint16_t>& colors) {
    auto res = analyze(g, &colors);
    return PermGroup(static_cast<std::uint16_t>(g.vertex_count()), std::move(res.aut_generators));
}

std::optional<Perm> isomorphism(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return std::nullopt;
    auto ca = analyze(a, nullptr);
    auto cb = analyze(b, nullptr);
    if (ca.canonical.certificate != cb.canonical.certificate) return std::nullopt;
    Perm map = ca.canonical.labeling.then(cb.canonical.labeling.inverse());
    for (auto [u, v] : a.edges())
        if (!b.has_edge(map[u], map[v]))
            throw std::logic_error("isomorphism: certificate match without edge preservation");
    return map;
}

DigraphEncoding encode_digraph(const DiGraph& d) {
    std::uint32_t n = d.vertex_count();
    std::uint32_t total = n + 2 * static_cast<std::uint32_t>(d.arc_count());
    std::vector<std::pair<std::uint16_t, std::uint16_t>> edges;
    std::vector<std::uint16_t> colors(total, 0);
    std::uint32_t next = n;
    for (auto [x, y] : d.arcs()) {
        std::uint16_t t = static_cast<std::uint16_t>(next++);
        std::uint16_t h = static_cast<std::uint16_t>(next++);
        colors[t] = 1;
        colors[h] = 2;
        edges.emplace_back(x, t);
        edges.emplace_back(t, h);
        edges.emplace_back(h, y);
    }
    return {Graph(total, edges), std::move(colors)};
}

std::string digraph_certificate(const DiGraph& d) {
    auto enc = encode_digraph(d);
    return canonical_form_colored(enc.graph, enc.colors).certificate +
           ";arcs=" + std::to_string(d.arc_count());
}

std::optional<Perm> digraph_isomorphism(const DiGraph& a, const DiGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count())
        return std::nullopt;
    auto ea = encode_digraph(a);
    auto eb = encode_digraph(b);
    auto ca = canonical_form_colored(ea.graph, ea.colors);
    auto cb = canonical_form_colored(eb.graph, eb.colors);
    if (ca.certificate != cb.certificate) return std::nullopt;
    Perm full = ca.labeling.then(cb.labeling.inverse());
    std::vector<std::uint16_t> img(a.vertex_count());
    for (std::uint32_t v = 0; v < a.vertex_count(); ++v) {
        if (full[v] >= a.vertex_count())
            throw std::logic_error("digraph_isomorphism: color class was not preserved");
        img[v] = full[v];
    }
    Perm map(std::move(img));
    for (auto [x, y] : a.arcs())
        if (!b.has_arc(map[x], map[y]))
            throw std::logic_error("digraph_isomorphism: certificate match without arc preservation");
    return map;
}

PermGroup digraph_automorphism_group(const DiGraph& d) {
    auto enc = encode_digraph(d);
    auto res = analyze(enc.graph, &enc.colors);
    std::vector<Perm> gens;
    for (const Perm& a : res.aut_generators) {
        std::vector<std::uint16_t> img(d.vertex_count());
        for (std::uint32_t v = 0; v < d.vertex_count(); ++v) {
            if (a[v] >= d.vertex_count())
                throw std::logic_error("digraph_automorphism_group: color class not preserved");
            img[v] = a[v];
        }
        Perm p(std::move(img));
        if (!p.is_identity()) gens.push_back(std::move(p));
    }
    return PermGroup(static_cast<std::uint16_t>(d.vertex_count()), std::move(gens));
}

} // namespace bci
