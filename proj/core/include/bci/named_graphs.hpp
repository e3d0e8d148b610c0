#pragma once

#include <string>
#include <vector>

#include "bci/graph.hpp"

namespace bci {

// Cubic graph from an LCF code [c_1..c_k]^reps: Hamiltonian cycle 0..n-1 plus
// chords i ~ i + c_{i mod k} (mod n).
Graph lcf_graph(const std::vector<int>& code, int reps);

// K33, cube, heawood, pappus, desargues, moebius_kantor, tutte_coxeter.
// Every LCF build is validated against (order, cubic, girth) at construction.
Graph named_graph(const std::string& name);

std::vector<std::string> named_graph_names();

} // namespace bci
