#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bci {

// A permutation of {0, ..., d-1}, stored as its image list. Products use the
// right-action convention: x^(p*q) = (x^p)^q.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::size_t degree);                 // identity
    explicit Perm(std::vector<std::uint16_t> images);  // validated

    static Perm identity(std::size_t degree) { return Perm(degree); }
    static Perm from_cycle(std::size_t degree, std::span<const std::uint16_t> cycle);

    std::size_t degree() const { return img_.size(); }
    std::uint16_t operator[](std::size_t i) const { return img_[i]; }
    const std::vector<std::uint16_t>& images() const { return img_; }

    bool is_identity() const;
    Perm then(const Perm& other) const;  // apply *this, then other
    Perm inverse() const;
    Perm conjugated_by(const Perm& a) const;  // a^-1 * (*this) * a
    Perm power(std::int64_t e) const;
    std::uint64_t order() const;

    // Nontrivial cycles, each rotated to start at its least point, sorted by
    // that point.
    std::vector<std::vector<std::uint16_t>> cycles() const;
    std::string cycle_string() const;  // "(0 1 2)(4 5)" or "()" for identity
    std::string image_line() const;    // "1 2 0 3"

    bool operator==(const Perm&) const = default;
    auto operator<=>(const Perm&) const = default;

private:
    std::vector<std::uint16_t> img_;
};

std::uint64_t hash_span(std::span<const std::uint16_t> data);

} // namespace bci
