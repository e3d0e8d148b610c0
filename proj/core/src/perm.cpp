#include "bci/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace bci {

Perm::Perm(std::size_t degree) : img_(degree) {
    std::iota(img_.begin(), img_.end(), std::uint16_t{0});
}

Perm::Perm(std::vector<std::uint16_t> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (std::uint16_t v : img_) {
        if (v >= img_.size() || seen[v])
            throw std::invalid_argument("Perm: image list is not a bijection");
        seen[v] = true;
    }
}

Perm Perm::from_cycle(std::size_t degree, std::span<const std::uint16_t> cycle) {
    Perm p(degree);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        std::uint16_t from = cycle[i];
        std::uint16_t to = cycle[(i + 1) % cycle.size()];
        if (from >= degree || to >= degree)
            throw std::invalid_argument("Perm::from_cycle: point out of range");
        p.img_[from] = to;
    }
    std::vector<bool> seen(degree, false);
    for (std::uint16_t v : p.img_) {
        if (seen[v]) throw std::invalid_argument("Perm::from_cycle: repeated point");
        seen[v] = true;
    }
    return p;
}

bool Perm::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Perm Perm::then(const Perm& other) const {
    if (other.degree() != degree())
        throw std::invalid_argument("Perm::then: degree mismatch");
    Perm r;
    r.img_.resize(degree());
    for (std::size_t i = 0; i < degree(); ++i) r.img_[i] = other.img_[img_[i]];
    return r;
}

Perm Perm::inverse() const {
    Perm r;
    r.img_.resize(degree());
    for (std::size_t i = 0; i < degree(); ++i) r.img_[img_[i]] = static_cast<std::uint16_t>(i);
    return r;
}

Perm Perm::conjugated_by(const Perm& a) const { return a.inverse().then(*this).then(a); }

Perm Perm::power(std::int64_t e) const {
    std::uint64_t o = order();
    std::int64_t m = e % static_cast<std::int64_t>(o);
    if (m < 0) m += static_cast<std::int64_t>(o);
    Perm acc = identity(degree());
    Perm base = *this;
    while (m > 0) {
        if (m & 1) acc = acc.then(base);
        base = base.then(base);
        m >>= 1;
    }
    return acc;
}

std::uint64_t Perm::order() const {
    std::uint64_t ord = 1;
    std::vector<bool> seen(degree(), false);
    for (std::size_t i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = img_[j];
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

std::vector<std::vector<std::uint16_t>> Perm::cycles() const {
    std::vector<std::vector<std::uint16_t>> out;
    std::vector<bool> seen(degree(), false);
    for (std::size_t i = 0; i < degree(); ++i) {
        if (seen[i] || img_[i] == i) {
            seen[i] = true;
            continue;
        }
        std::vector<std::uint16_t> cyc;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            cyc.push_back(static_cast<std::uint16_t>(j));
            j = img_[j];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::string Perm::cycle_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::string out;
    for (const auto& c : cs) {
        out += '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(c[i]);
        }
        out += ')';
    }
    return out;
}

std::string Perm::image_line() const {
    std::string out;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(img_[i]);
    }
    return out;
}

std::uint64_t hash_span(std::span<const std::uint16_t> data) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint16_t v : data) {
        h ^= static_cast<std::uint64_t>(v) + 1;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace bci
