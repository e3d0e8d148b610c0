#pragma once

#include "bci/classify.hpp"
#include "bci/group.hpp"
#include "bci/group_ops.hpp"
#include "bci/perm.hpp"

namespace bci {

// The side-swapping automorphism tau of a bi-Cayley graph over a group X
// that decomposes as U x V (U odd abelian, V trivial/cyclic/elementary
// abelian/Q8): an automorphism iota of X with S^iota = S^-1, inverting the
// abelian parts elementwise and acting on a Q8 part by conjugation, and the
// involution (x,i) -> (x^iota, 1-i).
struct ReverserBundle {
    GroupMap iota;              // automorphism of X
    std::uint16_t conjugator;   // element of X (identity unless the Q8 part is used)
    Perm tau;                   // degree 2|X|
};

// Throws std::invalid_argument when X is not in the subgroup-closed class or
// the identity is missing from S, and std::runtime_error when no valid Q8
// conjugator exists (unreachable for |S| <= 3 with identity).
ReverserBundle build_reverser(const FinGroup& x, std::span<const std::uint16_t> s);

} // namespace bci
