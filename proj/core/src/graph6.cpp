#include "bci/graph6.hpp"

#include <stdexcept>

namespace bci {

std::string graph6_encode(const Graph& g) {
    std::uint32_t n = g.vertex_count();
    if (n > 258047) throw std::invalid_argument("graph6_encode: graph too large");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);  // '~'
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int bits = 0;
    int current = 0;
    for (std::uint32_t j = 1; j < n; ++j) {
        for (std::uint32_t i = 0; i < j; ++i) {
            current = (current << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(current + 63));
                bits = 0;
                current = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((current << (6 - bits)) + 63));
    return out;
}

Graph graph6_decode(const std::string& bytes) {
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= bytes.size()) throw std::invalid_argument("graph6_decode: truncated input");
        int c = static_cast<unsigned char>(bytes[pos++]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6_decode: byte out of range");
        return c - 63;
    };
    std::uint32_t n = 0;
    int first = next();
    if (first == 63) {  // '~'
        std::uint32_t a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = static_cast<std::uint32_t>(first);
    }
    std::vector<std::pair<std::uint16_t, std::uint16_t>> edges;
    int bits = 0;
    int current = 0;
    for (std::uint32_t j = 1; j < n; ++j) {
        for (std::uint32_t i = 0; i < j; ++i) {
            if (bits == 0) {
                current = next();
                bits = 6;
            }
            if ((current >> (bits - 1)) & 1)
                edges.emplace_back(static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j));
            --bits;
        }
    }
    if (pos != bytes.size()) throw std::invalid_argument("graph6_decode: trailing bytes");
    return Graph(n, edges);
}

} // namespace bci
