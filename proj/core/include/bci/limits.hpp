#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bci {

// Desk-scale guard rails for the exhaustive searches. Every cap is a mutable
// process-global knob; the CLI maps the BCI_MAX_ELEMENTS environment variable
// onto max_elements at startup.
struct Limits {
    std::uint64_t max_elements = 4'000'000;      // permutation group materialization
    std::uint32_t max_group_order = 1024;        // multiplication table construction
    std::uint32_t max_subgroup_scan = 256;       // all_subgroups enumeration
    std::uint32_t max_homogeneity_order = 32;    // is_homogeneous exhaustive bound
    std::uint32_t max_canonical_vertices = 1024; // canonical labeling
    std::uint64_t max_subset_orbits = 4'000'000; // connection-set class scans
};

Limits& limits();

class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what, std::uint64_t partial = 0)
        : std::runtime_error(what), partial_(partial) {}

    // How far the search got before hitting the cap (element count so far).
    std::uint64_t partial_count() const { return partial_; }

private:
    std::uint64_t partial_;
};

} // namespace bci
