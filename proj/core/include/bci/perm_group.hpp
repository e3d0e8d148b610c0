#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "bci/limits.hpp"
#include "bci/perm.hpp"

namespace bci {

// Flat, hashed storage for a set of permutations of one degree. Rows live in a
// single arena so that groups in the millions of elements stay compact.
class PermArena {
public:
    explicit PermArena(std::uint16_t degree);

    std::uint16_t degree() const { return degree_; }
    std::size_t size() const { return count_; }
    std::span<const std::uint16_t> row(std::size_t i) const {
        return {data_.data() + i * degree_, degree_};
    }
    Perm perm(std::size_t i) const;

    // Returns (index, true) when inserted, (existing index, false) otherwise.
    std::pair<std::size_t, bool> insert(std::span<const std::uint16_t> images);
    std::optional<std::size_t> find(std::span<const std::uint16_t> images) const;
    bool contains(const Perm& p) const { return find(p.images()).has_value(); }

    void reserve(std::size_t n);

private:
    std::size_t probe(std::span<const std::uint16_t> images, bool& found) const;
    void rehash(std::size_t buckets);

    std::uint16_t degree_;
    std::size_t count_ = 0;
    std::vector<std::uint16_t> data_;
    std::vector<std::uint32_t> table_;  // index + 1; 0 = empty
};

// Breadth-first closure of the generators. Throws CapExceeded (carrying the
// partial element count) when the closure grows past `cap`.
PermArena close_generators(std::uint16_t degree, const std::vector<Perm>& gens,
                           std::uint64_t cap = 0);

// A finitely generated permutation group. Elements are materialized lazily
// and at most once; the materialized arena is immutable afterwards, so
// concurrent reads are safe.
class PermGroup {
public:
    PermGroup(std::uint16_t degree, std::vector<Perm> generators);

    // Wraps an already-closed element set (no re-closure).
    static PermGroup from_elements(std::uint16_t degree, PermArena elements,
                                   std::vector<Perm> generators = {});

    static PermGroup trivial(std::uint16_t degree) { return PermGroup(degree, {}); }

    std::uint16_t degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return gens_; }

    const PermArena& elements(std::uint64_t cap = 0) const;
    std::uint64_t order(std::uint64_t cap = 0) const { return elements(cap).size(); }
    bool contains(const Perm& p, std::uint64_t cap = 0) const {
        return elements(cap).contains(p);
    }
    bool is_trivial() const;

    // Greedy redundancy-free generating subset of the materialized elements.
    std::vector<Perm> small_generating_set(std::uint64_t cap = 0) const;

private:
    std::uint16_t degree_;
    std::vector<Perm> gens_;

    struct Cache {
        std::mutex mutex;
        std::unique_ptr<PermArena> elements;
    };
    std::shared_ptr<Cache> cache_;
};

} // namespace bci
