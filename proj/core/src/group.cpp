#include "bci/group.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "bci/limits.hpp"

namespace bci {

FinGroup::FinGroup(std::vector<std::uint16_t> table, std::vector<std::string> labels,
                   std::string name)
    : table_(std::move(table)), labels_(std::move(labels)), name_(std::move(name)) {
    std::size_t n = labels_.size();
    if (n == 0 || n > limits().max_group_order)
        throw std::invalid_argument("FinGroup: order out of range");
    if (table_.size() != n * n) throw std::invalid_argument("FinGroup: table size mismatch");
    n_ = static_cast<std::uint16_t>(n);

    // Latin square in both directions.
    std::vector<bool> seen(n);
    for (std::size_t r = 0; r < n; ++r) {
        std::fill(seen.begin(), seen.end(), false);
        for (std::size_t c = 0; c < n; ++c) {
            std::uint16_t v = table_[r * n + c];
            if (v >= n || seen[v]) throw std::invalid_argument("FinGroup: row is not a permutation");
            seen[v] = true;
        }
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::fill(seen.begin(), seen.end(), false);
        for (std::size_t r = 0; r < n; ++r) {
            std::uint16_t v = table_[r * n + c];
            if (seen[v]) throw std::invalid_argument("FinGroup: column is not a permutation");
            seen[v] = true;
        }
    }

    // Two-sided identity.
    bool have_identity = false;
    for (std::uint16_t e = 0; e < n_; ++e) {
        bool ok = true;
        for (std::uint16_t x = 0; x < n_ && ok; ++x)
            ok = mul(e, x) == x && mul(x, e) == x;
        if (ok) {
            identity_ = e;
            have_identity = true;
            break;
        }
    }
    if (!have_identity) throw std::invalid_argument("FinGroup: no two-sided identity");

    // Two-sided inverses.
    inverse_.assign(n, 0);
    for (std::uint16_t x = 0; x < n_; ++x) {
        bool ok = false;
        for (std::uint16_t y = 0; y < n_; ++y) {
            if (mul(x, y) == identity_ && mul(y, x) == identity_) {
                inverse_[x] = y;
                ok = true;
                break;
            }
        }
        if (!ok) throw std::invalid_argument("FinGroup: element without inverse");
    }

    // Associativity, O(n^3), enforced up to order 512.
    if (n_ <= 512) {
        for (std::uint16_t a = 0; a < n_; ++a)
            for (std::uint16_t b = 0; b < n_; ++b)
                for (std::uint16_t c = 0; c < n_; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw std::invalid_argument("FinGroup: table is not associative");
    }
}

std::uint16_t FinGroup::power(std::uint16_t a, std::int64_t e) const {
    std::uint32_t o = element_order(a);
    std::int64_t m = e % o;
    if (m < 0) m += o;
    std::uint16_t acc = identity_;
    std::uint16_t base = a;
    while (m > 0) {
        if (m & 1) acc = mul(acc, base);
        base = mul(base, base);
        m >>= 1;
    }
    return acc;
}

std::uint32_t FinGroup::element_order(std::uint16_t a) const {
    std::uint32_t o = 1;
    std::uint16_t x = a;
    while (x != identity_) {
        x = mul(x, a);
        ++o;
    }
    return o;
}

bool FinGroup::is_abelian() const {
    for (std::uint16_t a = 0; a < n_; ++a)
        for (std::uint16_t b = static_cast<std::uint16_t>(a + 1); b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::uint32_t FinGroup::exponent() const {
    std::uint32_t e = 1;
    for (std::uint16_t a = 0; a < n_; ++a) e = std::lcm(e, element_order(a));
    return e;
}

int FinGroup::element_by_label(const std::string& label) const {
    for (std::uint16_t i = 0; i < n_; ++i)
        if (labels_[i] == label) return i;
    return -1;
}

IndexSet FinGroup::generating_sequence() const {
    IndexSet gens;
    IndexSet closed = closure({});
    while (closed.size() < n_) {
        for (std::uint16_t x = 0; x < n_; ++x) {
            if (!std::binary_search(closed.begin(), closed.end(), x)) {
                gens.push_back(x);
                break;
            }
        }
        closed = closure(gens);
    }
    return gens;
}

IndexSet FinGroup::closure(std::span<const std::uint16_t> seed) const {
    std::vector<bool> in(n_, false);
    IndexSet queue;
    in[identity_] = true;
    queue.push_back(identity_);
    for (std::uint16_t s : seed) {
        if (s >= n_) throw std::invalid_argument("FinGroup::closure: element out of range");
        if (!in[s]) {
            in[s] = true;
            queue.push_back(s);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (std::uint16_t s : seed) {
            std::uint16_t p = mul(queue[head], s);
            if (!in[p]) {
                in[p] = true;
                queue.push_back(p);
            }
            p = mul(s, queue[head]);
            if (!in[p]) {
                in[p] = true;
                queue.push_back(p);
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

std::string FinGroup::to_text() const {
    std::ostringstream out;
    out << n_ << '\n';
    for (std::uint16_t r = 0; r < n_; ++r) {
        for (std::uint16_t c = 0; c < n_; ++c) {
            if (c) out << ' ';
            out << mul(r, c);
        }
        out << '\n';
    }
    for (std::uint16_t i = 0; i < n_; ++i) out << labels_[i] << '\n';
    return out.str();
}

FinGroup FinGroup::from_text(std::istream& in) {
    std::size_t n = 0;
    if (!(in >> n) || n == 0) throw std::invalid_argument("FinGroup::from_text: bad order line");
    std::vector<std::uint16_t> table(n * n);
    for (auto& v : table) {
        long x;
        if (!(in >> x) || x < 0 || static_cast<std::size_t>(x) >= n)
            throw std::invalid_argument("FinGroup::from_text: bad table entry");
        v = static_cast<std::uint16_t>(x);
    }
    std::string line;
    std::getline(in, line);  // finish the last table row
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::getline(in, line)) throw std::invalid_argument("FinGroup::from_text: missing label");
        labels.push_back(line);
    }
    return FinGroup(std::move(table), std::move(labels), "from_text");
}

IndexSet left_translate(const FinGroup& g, std::uint16_t a, std::span<const std::uint16_t> s) {
    IndexSet out;
    out.reserve(s.size());
    for (std::uint16_t x : s) out.push_back(g.mul(a, x));
    std::sort(out.begin(), out.end());
    return out;
}

IndexSet set_inverse(const FinGroup& g, std::span<const std::uint16_t> s) {
    IndexSet out;
    out.reserve(s.size());
    for (std::uint16_t x : s) out.push_back(g.inv(x));
    std::sort(out.begin(), out.end());
    return out;
}

std::string set_labels(const FinGroup& g, std::span<const std::uint16_t> s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += g.label(s[i]);
    }
    out += "}";
    return out;
}

SubgroupGroup subgroup_as_group(const FinGroup& g, std::span<const std::uint16_t> elements,
                                const std::string& name) {
    IndexSet elems(elements.begin(), elements.end());
    std::sort(elems.begin(), elems.end());
    std::vector<int> pos(g.order(), -1);
    for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
    std::size_t m = elems.size();
    std::vector<std::uint16_t> table(m * m);
    std::vector<std::string> labels(m);
    for (std::size_t i = 0; i < m; ++i) {
        labels[i] = g.label(elems[i]);
        for (std::size_t j = 0; j < m; ++j) {
            int p = pos[g.mul(elems[i], elems[j])];
            if (p < 0) throw std::invalid_argument("subgroup_as_group: set is not closed");
            table[i * m + j] = static_cast<std::uint16_t>(p);
        }
    }
    return {FinGroup(std::move(table), std::move(labels), name), std::move(elems)};
}

QuotientGroup quotient_group(const FinGroup& g, std::span<const std::uint16_t> normal_subgroup) {
    IndexSet nset(normal_subgroup.begin(), normal_subgroup.end());
    std::sort(nset.begin(), nset.end());
    auto in_n = [&](std::uint16_t x) { return std::binary_search(nset.begin(), nset.end(), x); };
    if (!in_n(g.identity())) throw std::invalid_argument("quotient_group: missing identity");
    for (std::uint16_t x : nset)
        for (std::uint16_t y : nset)
            if (!in_n(g.mul(x, y))) throw std::invalid_argument("quotient_group: not a subgroup");
    for (std::uint16_t a = 0; a < g.order(); ++a)
        for (std::uint16_t x : nset)
            if (!in_n(g.conjugate(x, a)))
                throw std::invalid_argument("quotient_group: subgroup is not normal");

    std::vector<std::uint16_t> coset_of(g.order(), 0xffff);
    IndexSet reps;
    for (std::uint16_t a = 0; a < g.order(); ++a) {
        if (coset_of[a] != 0xffff) continue;
        std::uint16_t q = static_cast<std::uint16_t>(reps.size());
        reps.push_back(a);
        for (std::uint16_t x : nset) coset_of[g.mul(a, x)] = q;
    }
    std::size_t m = reps.size();
    std::vector<std::uint16_t> table(m * m);
    std::vector<std::string> labels(m);
    for (std::size_t i = 0; i < m; ++i) {
        labels[i] = g.label(reps[i]) + "N";
        for (std::size_t j = 0; j < m; ++j)
            table[i * m + j] = coset_of[g.mul(reps[i], reps[j])];
    }
    return {FinGroup(std::move(table), std::move(labels), g.name() + "/N"),
            std::move(coset_of), std::move(reps)};
}

} // namespace bci
