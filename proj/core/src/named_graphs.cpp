#include "bci/named_graphs.hpp"

#include <stdexcept>

#include "bci/bicayley.hpp"
#include "bci/group_spec.hpp"

namespace bci {

Graph lcf_graph(const std::vector<int>& code, int reps) {
    int n = static_cast<int>(code.size()) * reps;
    if (n < 3) throw std::invalid_argument("lcf_graph: too few vertices");
    std::vector<std::pair<std::uint16_t, std::uint16_t>> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(static_cast<std::uint16_t>(i), static_cast<std::uint16_t>((i + 1) % n));
    for (int i = 0; i < n; ++i) {
        int j = ((i + code[i % code.size()]) % n + n) % n;
        if (i < j) edges.emplace_back(static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j));
    }
    return Graph(static_cast<std::uint32_t>(n), edges);
}

namespace {

Graph validated_lcf(const std::vector<int>& code, int reps, std::uint32_t want_n,
                    std::uint32_t want_girth, const std::string& name) {
    Graph g = lcf_graph(code, reps);
    if (g.vertex_count() != want_n || !g.is_regular(3))
        throw std::runtime_error("named_graph: " + name + " failed order/regularity validation");
    auto gi = girth(g);
    if (!gi || *gi != want_girth)
        throw std::runtime_error("named_graph: " + name + " failed girth validation");
    return g;
}

} // namespace

Graph named_graph(const std::string& name) {
    if (name == "K33") {
        FinGroup c3 = build_group(GroupSpec::cyclic(3));
        IndexSet all{0, 1, 2};
        Graph g = bcay(c3, all);
        auto gi = girth(g);
        if (g.vertex_count() != 6 || !g.is_regular(3) || !gi || *gi != 4)
            throw std::runtime_error("named_graph: K33 failed validation");
        return g;
    }
    if (name == "cube") return validated_lcf({3, -3}, 4, 8, 4, name);
    if (name == "heawood") return validated_lcf({5, -5}, 7, 14, 6, name);
    if (name == "moebius_kantor") return validated_lcf({5, -5}, 8, 16, 8, name);
    if (name == "pappus") return validated_lcf({5, 7, -7, 7, -7, -5}, 3, 18, 6, name);
    if (name == "desargues") return validated_lcf({5, -5, 9, -9}, 5, 20, 6, name);
    if (name == "tutte_coxeter") return validated_lcf({-13, -9, 7, -7, 9, 13}, 5, 30, 8, name);
    throw std::invalid_argument("named_graph: unknown name '" + name + "'");
}

std::vector<std::string> named_graph_names() {
    return {"K33", "cube", "heawood", "pappus", "desargues", "moebius_kantor", "tutte_coxeter"};
}

} // namespace bci
