#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bci/group.hpp"

namespace bci {

// One factor of a direct-product group spec.
struct GroupAtom {
    enum class Kind { Cyclic, CyclicPower, Quaternion8 };
    Kind kind = Kind::Cyclic;
    std::uint32_t n = 1;  // cyclic order
    std::uint32_t k = 1;  // power (CyclicPower)

    std::uint64_t order() const;
    std::string to_string() const;
};

struct GroupSpec {
    std::vector<GroupAtom> factors;

    std::uint64_t order() const;
    std::string to_string() const;

    static GroupSpec cyclic(std::uint32_t n) {
        return {{GroupAtom{GroupAtom::Kind::Cyclic, n, 1}}};
    }
    static GroupSpec cyclic_power(std::uint32_t n, std::uint32_t k) {
        return {{GroupAtom{GroupAtom::Kind::CyclicPower, n, k}}};
    }
    static GroupSpec q8() { return {{GroupAtom{GroupAtom::Kind::Quaternion8}}}; }
    GroupSpec times(const GroupSpec& other) const;
};

// Builds the direct product described by the spec. Q8 carries the labels
// 1,-1,i,-i,j,-j,k,-k; cyclic factors use 0..n-1. Product element labels are
// "(a:b:...)" tuples in factor order.
FinGroup build_group(const GroupSpec& spec);

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Grammar: atom := C<int> | C<int>^<int> | Q8 ; spec := atom ('x' atom)*.
// Example: "C9^2xQ8". Throws ParseError with the offending position.
GroupSpec parse_group_spec(const std::string& text);

// Experimental, outside the spec grammar: Z_p^k semidirect Z_m, the cyclic
// part acting through an order-m matrix over Z_p (row-convention, v -> vM).
// Elements are pairs (v, t) with (v,s)(w,t) = (v*M^t + w... see impl), labels
// "[v1,..,vk|t]".
FinGroup build_semidirect_cyclic_power(std::uint32_t p, std::uint32_t k, std::uint32_t m,
                                       const std::vector<std::uint32_t>& matrix);

// All order-m subgroups of GL(k,p) up to conjugacy are expensive; this helper
// just enumerates matrices of multiplicative order m (row-major, entries mod
// p), optionally requiring the action to be fixed-point-free.
std::vector<std::vector<std::uint32_t>> order_m_matrices(std::uint32_t p, std::uint32_t k,
                                                         std::uint32_t m,
                                                         bool fixed_point_free_only,
                                                         std::size_t max_results);

} // namespace bci
