#include "bci/perm_group.hpp"

#include <algorithm>
#include <stdexcept>

namespace bci {

PermArena::PermArena(std::uint16_t degree) : degree_(degree) { rehash(64); }

Perm PermArena::perm(std::size_t i) const {
    auto r = row(i);
    return Perm(std::vector<std::uint16_t>(r.begin(), r.end()));
}

void PermArena::reserve(std::size_t n) {
    data_.reserve(n * degree_);
    std::size_t buckets = 64;
    while (buckets < n * 2) buckets <<= 1;
    if (buckets > table_.size()) rehash(buckets);
}

std::size_t PermArena::probe(std::span<const std::uint16_t> images, bool& found) const {
    std::size_t mask = table_.size() - 1;
    std::size_t pos = hash_span(images) & mask;
    while (true) {
        std::uint32_t slot = table_[pos];
        if (slot == 0) {
            found = false;
            return pos;
        }
        std::size_t idx = slot - 1;
        if (std::equal(images.begin(), images.end(), data_.begin() + idx * degree_)) {
            found = true;
            return pos;
        }
        pos = (pos + 1) & mask;
    }
}

void PermArena::rehash(std::size_t buckets) {
    table_.assign(buckets, 0);
    std::size_t mask = buckets - 1;
    for (std::size_t i = 0; i < count_; ++i) {
        std::size_t pos = hash_span(row(i)) & mask;
        while (table_[pos] != 0) pos = (pos + 1) & mask;
        table_[pos] = static_cast<std::uint32_t>(i + 1);
    }
}

std::pair<std::size_t, bool> PermArena::insert(std::span<const std::uint16_t> images) {
    if (images.size() != degree_)
        throw std::invalid_argument("PermArena::insert: degree mismatch");
    bool found = false;
    std::size_t pos = probe(images, found);
    if (found) return {table_[pos] - 1, false};
    data_.insert(data_.end(), images.begin(), images.end());
    std::size_t idx = count_++;
    table_[pos] = static_cast<std::uint32_t>(idx + 1);
    if (count_ * 3 >= table_.size() * 2) rehash(table_.size() * 2);
    return {idx, true};
}

std::optional<std::size_t> PermArena::find(std::span<const std::uint16_t> images) const {
    if (images.size() != degree_) return std::nullopt;
    bool found = false;
    std::size_t pos = probe(images, found);
    if (!found) return std::nullopt;
    return table_[pos] - 1;
}

PermArena close_generators(std::uint16_t degree, const std::vector<Perm>& gens,
                           std::uint64_t cap) {
    if (cap == 0) cap = limits().max_elements;
    for (const Perm& g : gens)
        if (g.degree() != degree)
            throw std::invalid_argument("close_generators: generator degree mismatch");

    PermArena arena(degree);
    arena.insert(Perm::identity(degree).images());
    std::vector<std::uint16_t> product(degree);
    for (std::size_t head = 0; head < arena.size(); ++head) {
        for (const Perm& g : gens) {
            auto base = arena.row(head);
            for (std::size_t i = 0; i < degree; ++i) product[i] = g[base[i]];
            auto [idx, inserted] = arena.insert(product);
            (void)idx;
            if (inserted && arena.size() > cap)
                throw CapExceeded("close_generators: element cap exceeded", arena.size());
        }
    }
    return arena;
}

PermGroup::PermGroup(std::uint16_t degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)), cache_(std::make_shared<Cache>()) {
    for (const Perm& g : gens_)
        if (g.degree() != degree_)
            throw std::invalid_argument("PermGroup: generator degree mismatch");
    std::erase_if(gens_, [](const Perm& g) { return g.is_identity(); });
}

PermGroup PermGroup::from_elements(std::uint16_t degree, PermArena elements,
                                   std::vector<Perm> generators) {
    if (generators.empty()) {
        // Fall back to the whole element list; callers that care pass real
        // generators or extract a small set afterwards.
        for (std::size_t i = 0; i < elements.size(); ++i) {
            Perm p = elements.perm(i);
            if (!p.is_identity()) generators.push_back(std::move(p));
        }
    }
    PermGroup g(degree, std::move(generators));
    g.cache_->elements = std::make_unique<PermArena>(std::move(elements));
    return g;
}

const PermArena& PermGroup::elements(std::uint64_t cap) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (!cache_->elements)
        cache_->elements = std::make_unique<PermArena>(close_generators(degree_, gens_, cap));
    return *cache_->elements;
}

bool PermGroup::is_trivial() const {
    for (const Perm& g : gens_)
        if (!g.is_identity()) return false;
    return true;
}

std::vector<Perm> PermGroup::small_generating_set(std::uint64_t cap) const {
    const PermArena& all = elements(cap);
    std::vector<Perm> gens;
    if (all.size() == 1) return gens;
    std::uint64_t have = 1;
    PermArena closed(degree_);
    closed.insert(Perm::identity(degree_).images());
    for (std::size_t i = 0; i < all.size() && have < all.size(); ++i) {
        if (closed.contains(all.perm(i))) continue;
        gens.push_back(all.perm(i));
        closed = close_generators(degree_, gens, cap);
        have = closed.size();
    }
    return gens;
}

} // namespace bci
