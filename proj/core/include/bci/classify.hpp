#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bci/group.hpp"
#include "bci/group_spec.hpp"

namespace bci {

enum class TwoPartTag { Trivial, Cyclic, ElementaryAbelian, Q8, Other };

std::string to_string(TwoPartTag tag);

// Membership in the class of groups U x V (U homocyclic of odd order, V
// trivial / cyclic 2-group / elementary abelian 2-group / Q8) and in the
// class of their subgroups.
struct ClassCRecord {
    bool nilpotent = false;
    bool in_C = false;
    bool in_Cstar = false;
    // Odd-part abelian type: (prime, descending exponent partition) per prime.
    // Empty when the odd part is trivial or non-abelian.
    std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>> odd_type;
    bool odd_part_abelian = false;
    TwoPartTag two_part = TwoPartTag::Trivial;
    std::optional<GroupSpec> overgroup;  // witness overgroup in C when in_Cstar

    // Element sets of the decomposition (indices into the classified group).
    IndexSet odd_part_elements;
    IndexSet two_part_elements;
};

ClassCRecord classify_class_C(const FinGroup& g);

} // namespace bci
