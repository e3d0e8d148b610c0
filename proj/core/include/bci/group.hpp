#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace bci {

using IndexSet = std::vector<std::uint16_t>;  // sorted, duplicate-free element indices

// A finite group given by an explicit multiplication table over elements
// indexed 0..n-1. Construction validates the Latin square property, the
// two-sided identity, inverses, and (for n <= 512) associativity of every
// triple. Instances are immutable.
class FinGroup {
public:
    FinGroup(std::vector<std::uint16_t> table, std::vector<std::string> labels,
             std::string name);

    std::uint16_t order() const { return n_; }
    std::uint16_t mul(std::uint16_t a, std::uint16_t b) const { return table_[a * n_ + b]; }
    std::uint16_t inv(std::uint16_t a) const { return inverse_[a]; }
    std::uint16_t identity() const { return identity_; }
    const std::string& label(std::uint16_t i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& name() const { return name_; }

    std::uint16_t power(std::uint16_t a, std::int64_t e) const;
    std::uint32_t element_order(std::uint16_t a) const;
    std::uint16_t conjugate(std::uint16_t x, std::uint16_t by) const {
        return mul(mul(inv(by), x), by);
    }
    bool is_abelian() const;
    std::uint32_t exponent() const;

    // Index of the element carrying this label, or -1.
    int element_by_label(const std::string& label) const;

    // First-not-in-closure greedy generating sequence (deterministic).
    IndexSet generating_sequence() const;

    // Closure of a subset as a sorted element list.
    IndexSet closure(std::span<const std::uint16_t> seed) const;

    // Line-oriented text format: first line n, then n rows of n indices, then
    // n lines of labels.
    std::string to_text() const;
    static FinGroup from_text(std::istream& in);

private:
    std::uint16_t n_;
    std::vector<std::uint16_t> table_;
    std::vector<std::string> labels_;
    std::string name_;
    std::uint16_t identity_ = 0;
    std::vector<std::uint16_t> inverse_;
};

// Product over a subset: g * S or S * g as a sorted set.
IndexSet left_translate(const FinGroup& g, std::uint16_t a, std::span<const std::uint16_t> s);
IndexSet set_inverse(const FinGroup& g, std::span<const std::uint16_t> s);
std::string set_labels(const FinGroup& g, std::span<const std::uint16_t> s);

// The subgroup generated by `elements` as its own FinGroup, along with the
// parent indices of its elements (position i of the returned set corresponds
// to element i of the subgroup).
struct SubgroupGroup {
    FinGroup group;
    IndexSet parent_index;
};
SubgroupGroup subgroup_as_group(const FinGroup& g, std::span<const std::uint16_t> elements,
                                const std::string& name = "H");

// Quotient G/N for N normal in G (validated). Element i of the quotient is
// the coset whose least parent element is coset_rep[i].
struct QuotientGroup {
    FinGroup group;
    std::vector<std::uint16_t> coset_of;  // parent element -> quotient index
    IndexSet coset_rep;
};
QuotientGroup quotient_group(const FinGroup& g, std::span<const std::uint16_t> normal_subgroup);

} // namespace bci
