#pragma once

#include <string>

#include "bci/graph.hpp"

namespace bci {

// Standard graph6 encoding: size field N(n) (one byte n+63 for n <= 62, else
// '~' plus three bytes of an 18-bit big-endian value, all offset by 63), then
// the upper triangle in column-major order, packed 6 bits per byte, zero
// padded, each byte offset by 63.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& bytes);

} // namespace bci
