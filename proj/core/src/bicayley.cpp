#include "bci/bicayley.hpp"

#include <stdexcept>

namespace bci {

Graph bcay(const FinGroup& g, std::span<const std::uint16_t> s) {
    if (s.empty()) throw std::invalid_argument("bcay: empty connection set");
    std::uint16_t n = g.order();
    std::vector<std::pair<std::uint16_t, std::uint16_t>> edges;
    edges.reserve(static_cast<std::size_t>(n) * s.size());
    for (std::uint16_t x = 0; x < n; ++x)
        for (std::uint16_t v : s) {
            if (v >= n) throw std::invalid_argument("bcay: connection set element out of range");
            edges.emplace_back(x, static_cast<std::uint16_t>(n + g.mul(v, x)));
        }
    return Graph(2u * n, edges);
}

DiGraph cay(const FinGroup& g, std::span<const std::uint16_t> s) {
    std::uint16_t n = g.order();
    std::vector<std::pair<std::uint16_t, std::uint16_t>> arcs;
    for (std::uint16_t x = 0; x < n; ++x)
        for (std::uint16_t v : s) {
            if (v >= n) throw std::invalid_argument("cay: connection set element out of range");
            if (v == g.identity())
                throw std::invalid_argument("cay: identity in the connection set");
            arcs.emplace_back(x, g.mul(v, x));
        }
    return DiGraph(n, arcs);
}

std::pair<std::vector<std::uint16_t>, std::vector<std::uint16_t>> bcay_sides(std::uint16_t n) {
    std::vector<std::uint16_t> left(n), right(n);
    for (std::uint16_t i = 0; i < n; ++i) {
        left[i] = i;
        right[i] = static_cast<std::uint16_t>(n + i);
    }
    return {left, right};
}

Perm right_translation(const FinGroup& g, std::uint16_t x) {
    std::uint16_t n = g.order();
    std::vector<std::uint16_t> img(2u * n);
    for (std::uint16_t a = 0; a < n; ++a) {
        img[a] = g.mul(a, x);
        img[n + a] = static_cast<std::uint16_t>(n + g.mul(a, x));
    }
    return Perm(std::move(img));
}

PermGroup right_translation_group(const FinGroup& g) {
    std::uint16_t n = g.order();
    PermArena arena(static_cast<std::uint16_t>(2 * n));
    std::vector<Perm> gens;
    for (std::uint16_t x : g.generating_sequence()) gens.push_back(right_translation(g, x));
    for (std::uint16_t x = 0; x < n; ++x) arena.insert(right_translation(g, x).images());
    return PermGroup::from_elements(static_cast<std::uint16_t>(2 * n), std::move(arena),
                                    std::move(gens));
}

PermGroup right_regular_representation(const FinGroup& g) {
    std::uint16_t n = g.order();
    PermArena arena(n);
    std::vector<Perm> gens;
    for (std::uint16_t x : g.generating_sequence()) {
        std::vector<std::uint16_t> img(n);
        for (std::uint16_t a = 0; a < n; ++a) img[a] = g.mul(a, x);
        gens.push_back(Perm(std::move(img)));
    }
    for (std::uint16_t x = 0; x < n; ++x) {
        std::vector<std::uint16_t> img(n);
        for (std::uint16_t a = 0; a < n; ++a) img[a] = g.mul(a, x);
        arena.insert(img);
    }
    return PermGroup::from_elements(n, std::move(arena), std::move(gens));
}

bool bcay_connected_by_generation(const FinGroup& g, std::span<const std::uint16_t> s) {
    if (s.empty()) return false;
    std::uint16_t s0 = s[0];
    IndexSet shifted;
    for (std::uint16_t v : s) shifted.push_back(g.mul(g.inv(s0), v));
    return g.closure(shifted).size() == g.order();
}

} // namespace bci
