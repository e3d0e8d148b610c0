#include "bci/group_actions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "bci/limits.hpp"

namespace bci {
namespace {

std::vector<std::uint16_t> sorted_copy(std::span<const std::uint16_t> s) {
    std::vector<std::uint16_t> v(s.begin(), s.end());
    std::sort(v.begin(), v.end());
    return v;
}

// Flattened sorted element rows; canonical key for a subgroup's element set.
std::vector<std::uint16_t> subgroup_key(const PermArena& elements) {
    std::vector<std::vector<std::uint16_t>> rows;
    rows.reserve(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
        auto r = elements.row(i);
        rows.emplace_back(r.begin(), r.end());
    }
    std::sort(rows.begin(), rows.end());
    std::vector<std::uint16_t> key;
    key.reserve(rows.size() * elements.degree());
    for (const auto& r : rows) key.insert(key.end(), r.begin(), r.end());
    return key;
}

std::vector<std::uint16_t> conjugate_key(const PermArena& elements, const Perm& by) {
    Perm inv = by.inverse();
    std::vector<std::vector<std::uint16_t>> rows;
    rows.reserve(elements.size());
    std::uint16_t d = elements.degree();
    for (std::size_t i = 0; i < elements.size(); ++i) {
        auto r = elements.row(i);
        std::vector<std::uint16_t> c(d);
        for (std::uint16_t x = 0; x < d; ++x) c[x] = by[r[inv[x]]];
        rows.push_back(std::move(c));
    }
    std::sort(rows.begin(), rows.end());
    std::vector<std::uint16_t> key;
    key.reserve(rows.size() * d);
    for (const auto& r : rows) key.insert(key.end(), r.begin(), r.end());
    return key;
}

struct KeyHash {
    std::size_t operator()(const std::vector<std::uint16_t>& v) const {
        return static_cast<std::size_t>(hash_span(v));
    }
};

} // namespace

BlockSystem BlockSystem::from_blocks(const PermGroup& g,
                                     std::vector<std::vector<std::uint16_t>> blocks) {
    BlockSystem bs;
    bs.blocks = std::move(blocks);
    bs.block_of.assign(g.degree(), 0xffff);
    for (std::size_t b = 0; b < bs.blocks.size(); ++b) {
        std::sort(bs.blocks[b].begin(), bs.blocks[b].end());
        for (std::uint16_t v : bs.blocks[b]) {
            if (v >= g.degree() || bs.block_of[v] != 0xffff)
                throw std::invalid_argument("BlockSystem: not a partition of the domain");
            bs.block_of[v] = static_cast<std::uint16_t>(b);
        }
    }
    for (std::uint16_t v = 0; v < g.degree(); ++v)
        if (bs.block_of[v] == 0xffff)
            throw std::invalid_argument("BlockSystem: partition does not cover the domain");
    // G-invariance: the image of every block under every generator is a block.
    for (const Perm& p : g.generators()) {
        for (const auto& block : bs.blocks) {
            std::uint16_t target = bs.block_of[p[block[0]]];
            for (std::uint16_t v : block)
                if (bs.block_of[p[v]] != target)
                    throw std::invalid_argument("BlockSystem: partition is not invariant");
        }
    }
    std::sort(bs.blocks.begin(), bs.blocks.end());
    for (std::size_t b = 0; b < bs.blocks.size(); ++b)
        for (std::uint16_t v : bs.blocks[b]) bs.block_of[v] = static_cast<std::uint16_t>(b);
    return bs;
}

std::vector<std::uint16_t> orbit_of(const PermGroup& g, std::uint16_t v) {
    std::vector<bool> seen(g.degree(), false);
    std::vector<std::uint16_t> queue{v};
    seen[v] = true;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (const Perm& p : g.generators()) {
            std::uint16_t w = p[queue[head]];
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    std::sort(queue.begin(), queue.end());
    return queue;
}

std::vector<std::vector<std::uint16_t>> orbits(const PermGroup& g) {
    std::vector<std::vector<std::uint16_t>> out;
    std::vector<bool> covered(g.degree(), false);
    for (std::uint16_t v = 0; v < g.degree(); ++v) {
        if (covered[v]) continue;
        auto orb = orbit_of(g, v);
        for (std::uint16_t w : orb) covered[w] = true;
        out.push_back(std::move(orb));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::uint16_t>> orbits_on(const PermGroup& g,
                                                  std::span<const std::uint16_t> domain) {
    auto dom = sorted_copy(domain);
    std::vector<std::vector<std::uint16_t>> out;
    for (const auto& orb : orbits(g)) {
        std::vector<std::uint16_t> trace;
        std::set_intersection(orb.begin(), orb.end(), dom.begin(), dom.end(),
                              std::back_inserter(trace));
        if (!trace.empty()) out.push_back(std::move(trace));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_transitive(const PermGroup& g) {
    return g.degree() == 0 || orbit_of(g, 0).size() == g.degree();
}

bool is_transitive_on(const PermGroup& g, std::span<const std::uint16_t> domain) {
    if (domain.empty()) return true;
    auto orb = orbit_of(g, domain[0]);
    return orb == sorted_copy(domain);
}

PermGroup point_stabilizer(const PermGroup& g, std::uint16_t v) {
    std::vector<std::uint16_t> pts{v};
    return pointwise_stabilizer(g, pts);
}

PermGroup pointwise_stabilizer(const PermGroup& g, std::span<const std::uint16_t> points) {
    const PermArena& all = g.elements();
    PermArena keep(g.degree());
    for (std::size_t i = 0; i < all.size(); ++i) {
        auto r = all.row(i);
        bool ok = true;
        for (std::uint16_t p : points)
            if (r[p] != p) {
                ok = false;
                break;
            }
        if (ok) keep.insert(r);
    }
    return PermGroup::from_elements(g.degree(), std::move(keep));
}

PermGroup setwise_stabilizer(const PermGroup& g, std::span<const std::uint16_t> set) {
    auto s = sorted_copy(set);
    std::vector<bool> in(g.degree(), false);
    for (std::uint16_t v : s) in[v] = true;
    const PermArena& all = g.elements();
    PermArena keep(g.degree());
    for (std::size_t i = 0; i < all.size(); ++i) {
        auto r = all.row(i);
        bool ok = true;
        for (std::uint16_t v : s)
            if (!in[r[v]]) {
                ok = false;
                break;
            }
        if (ok) keep.insert(r);
    }
    return PermGroup::from_elements(g.degree(), std::move(keep));
}

namespace {

bool arena_semiregular_on(const PermArena& all, const std::vector<bool>& in_domain) {
    for (std::size_t i = 0; i < all.size(); ++i) {
        auto r = all.row(i);
        bool ident = true;
        bool fixes = false;
        for (std::uint16_t v = 0; v < all.degree(); ++v) {
            if (!in_domain[v]) continue;
            if (r[v] != v)
                ident = false;
            else
                fixes = true;
        }
        if (!ident && fixes) return false;
    }
    return true;
}

} // namespace

bool is_semiregular_on(const PermGroup& g, std::span<const std::uint16_t> domain) {
    std::vector<bool> in(g.degree(), false);
    for (std::uint16_t v : domain) in[v] = true;
    return arena_semiregular_on(g.elements(), in);
}

bool is_semiregular(const PermGroup& g) {
    std::vector<bool> in(g.degree(), true);
    return arena_semiregular_on(g.elements(), in);
}

bool is_regular(const PermGroup& g) { return is_semiregular(g) && is_transitive(g); }

bool is_regular_on(const PermGroup& g, std::span<const std::uint16_t> domain) {
    return is_semiregular_on(g, domain) && is_transitive_on(g, domain);
}

BlockSystem block_system_from_seed(const PermGroup& g, std::span<const std::uint16_t> seed) {
    if (!is_transitive(g))
        throw std::invalid_argument("block_system_from_seed: group is not transitive");
    if (seed.empty()) throw std::invalid_argument("block_system_from_seed: empty seed");
    std::uint16_t n = g.degree();
    std::vector<std::uint16_t> parent(n);
    for (std::uint16_t i = 0; i < n; ++i) parent[i] = i;
    std::function<std::uint16_t(std::uint16_t)> find = [&](std::uint16_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    std::vector<std::pair<std::uint16_t, std::uint16_t>> queue;
    auto unite = [&](std::uint16_t a, std::uint16_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        queue.emplace_back(a, b);
    };
    for (std::size_t i = 1; i < seed.size(); ++i) unite(seed[0], seed[i]);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        auto [a, b] = queue[head];
        for (const Perm& p : g.generators()) unite(p[a], p[b]);
    }
    std::map<std::uint16_t, std::vector<std::uint16_t>> classes;
    for (std::uint16_t v = 0; v < n; ++v) classes[find(v)].push_back(v);
    std::vector<std::vector<std::uint16_t>> blocks;
    for (auto& [root, vs] : classes) blocks.push_back(std::move(vs));
    return BlockSystem::from_blocks(g, std::move(blocks));
}

BlockSystem block_system_via_stabilizer(const PermGroup& g, std::uint16_t a, std::uint16_t b) {
    if (!is_transitive(g))
        throw std::invalid_argument("block_system_via_stabilizer: group is not transitive");
    const PermArena& all = g.elements();
    PermGroup stab = point_stabilizer(g, a);
    std::vector<Perm> gens = stab.small_generating_set();
    bool found = false;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (all.row(i)[a] == b) {
            gens.push_back(all.perm(i));
            found = true;
            break;
        }
    }
    if (!found) throw std::invalid_argument("block_system_via_stabilizer: no element maps a to b");
    PermGroup h(g.degree(), std::move(gens));
    std::vector<std::uint16_t> block = orbit_of(h, a);

    // Translate the block around by the generators until the partition closes.
    std::vector<std::vector<std::uint16_t>> blocks{block};
    std::unordered_map<std::vector<std::uint16_t>, std::size_t, KeyHash> seen;
    seen.emplace(block, 0);
    for (std::size_t head = 0; head < blocks.size(); ++head) {
        auto cur = blocks[head];
        for (const Perm& p : g.generators()) {
            std::vector<std::uint16_t> img;
            img.reserve(cur.size());
            for (std::uint16_t v : cur) img.push_back(p[v]);
            std::sort(img.begin(), img.end());
            if (seen.emplace(img, blocks.size()).second) blocks.push_back(std::move(img));
        }
    }
    return BlockSystem::from_blocks(g, std::move(blocks));
}

PermGroup kernel_of_blocks(const PermGroup& g, const BlockSystem& delta) {
    const PermArena& all = g.elements();
    PermArena keep(g.degree());
    for (std::size_t i = 0; i < all.size(); ++i) {
        auto r = all.row(i);
        bool ok = true;
        for (std::uint16_t v = 0; v < g.degree() && ok; ++v)
            ok = delta.block_of[r[v]] == delta.block_of[v];
        if (ok) keep.insert(r);
    }
    return PermGroup::from_elements(g.degree(), std::move(keep));
}

PermGroup core_in(const PermGroup& a, const PermGroup& h) {
    const PermArena& helems = h.elements();
    PermArena current(a.degree());
    for (std::size_t i = 0; i < helems.size(); ++i) current.insert(helems.row(i));

    bool changed = true;
    std::uint16_t d = a.degree();
    while (changed) {
        changed = false;
        for (const Perm& g : a.generators()) {
            Perm ginv = g.inverse();
            PermArena next(d);
            for (std::size_t i = 0; i < current.size(); ++i) {
                auto r = current.row(i);
                std::vector<std::uint16_t> conj(d);
                for (std::uint16_t x = 0; x < d; ++x) conj[x] = g[r[ginv[x]]];
                if (current.contains(Perm(conj))) next.insert(conj);
            }
            if (next.size() != current.size()) {
                current = std::move(next);
                changed = true;
            }
        }
    }
    return PermGroup::from_elements(a.degree(), std::move(current));
}

bool is_normal(const PermGroup& a, const PermGroup& h) {
    const PermArena& helems = h.elements();
    for (const Perm& g : a.generators()) {
        Perm ginv = g.inverse();
        for (const Perm& hg : h.generators()) {
            Perm conj = ginv.then(hg).then(g);
            if (!helems.contains(conj)) return false;
        }
    }
    return true;
}

namespace {

std::multiset<std::vector<std::uint16_t>> cycle_shape_multiset(const PermArena& elements) {
    std::multiset<std::vector<std::uint16_t>> shapes;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        Perm p = elements.perm(i);
        std::vector<std::uint16_t> shape;
        for (const auto& c : p.cycles()) shape.push_back(static_cast<std::uint16_t>(c.size()));
        std::sort(shape.begin(), shape.end());
        shapes.insert(std::move(shape));
    }
    return shapes;
}

} // namespace

std::optional<Perm> conjugating_element(const PermGroup& a, const PermGroup& h,
                                        const PermGroup& k) {
    const PermArena& he = h.elements();
    const PermArena& ke = k.elements();
    if (he.size() != ke.size()) return std::nullopt;
    if (cycle_shape_multiset(he) != cycle_shape_multiset(ke)) return std::nullopt;

    std::uint16_t d = a.degree();
    auto conjugates_onto = [&](const Perm& x) {
        Perm xinv = x.inverse();
        for (const Perm& hg : h.generators()) {
            Perm conj = xinv.then(hg).then(x);
            if (!ke.contains(conj)) return false;
        }
        return true;
    };

    constexpr std::uint64_t kScanThreshold = 200'000;
    bool small = false;
    {
        // Probe the order without forcing a huge materialization twice.
        try {
            small = a.order(kScanThreshold) <= kScanThreshold;
        } catch (const CapExceeded&) {
            small = false;
        }
    }
    if (small) {
        const PermArena& all = a.elements();
        for (std::size_t i = 0; i < all.size(); ++i) {
            Perm x = all.perm(i);
            if (conjugates_onto(x)) return x;
        }
        return std::nullopt;
    }

    // Conjugation-orbit walk from H under the generators of a; reaches K iff
    // the two are conjugate, and the accumulated word is the witness.
    auto start_key = subgroup_key(he);
    auto target_key = subgroup_key(ke);
    std::unordered_map<std::vector<std::uint16_t>, std::size_t, KeyHash> seen;
    std::vector<Perm> witness{Perm::identity(d)};
    std::vector<std::vector<std::uint16_t>> queue_keys{start_key};
    seen.emplace(start_key, 0);
    if (start_key == target_key) return Perm::identity(d);
    // Store the element rows per node to conjugate further.
    std::vector<std::vector<Perm>> node_elems;
    {
        std::vector<Perm> rows;
        for (std::size_t i = 0; i < he.size(); ++i) rows.push_back(he.perm(i));
        node_elems.push_back(std::move(rows));
    }
    for (std::size_t head = 0; head < queue_keys.size(); ++head) {
        for (const Perm& g : a.generators()) {
            Perm ginv = g.inverse();
            std::vector<Perm> conj_rows;
            conj_rows.reserve(node_elems[head].size());
            for (const Perm& r : node_elems[head]) conj_rows.push_back(ginv.then(r).then(g));
            std::vector<std::vector<std::uint16_t>> rows;
            for (const Perm& r : conj_rows) rows.push_back(r.images());
            std::sort(rows.begin(), rows.end());
            std::vector<std::uint16_t> key;
            for (const auto& r : rows) key.insert(key.end(), r.begin(), r.end());
            if (seen.count(key)) continue;
            Perm w = witness[head].then(g);
            if (key == target_key) return w;
            seen.emplace(key, queue_keys.size());
            queue_keys.push_back(std::move(key));
            witness.push_back(std::move(w));
            node_elems.push_back(std::move(conj_rows));
        }
    }
    return std::nullopt;
}

std::vector<PermGroup> find_isomorphic_subgroups(const PermGroup& a, const FinGroup& g,
                                                 const SubgroupSearchOptions& options) {
    const PermArena& all = a.elements();
    std::uint16_t d = a.degree();
    IndexSet gens = g.generating_sequence();
    if (gens.empty()) {
        // Trivial target group: the trivial subgroup, if it satisfies the predicate.
        PermGroup triv = PermGroup::trivial(d);
        std::vector<PermGroup> out;
        bool ok = true;
        if (options.required_orbits) ok = false;  // trivial group has singleton orbits
        if (ok && options.extra && !options.extra(triv)) ok = false;
        if (ok) out.push_back(triv);
        return out;
    }

    std::vector<bool> in_orbit_mask;  // block id per point, for orbit filters
    std::vector<std::uint16_t> orbit_id;
    if (options.required_orbits) {
        orbit_id.assign(d, 0xffff);
        for (std::size_t b = 0; b < options.required_orbits->size(); ++b)
            for (std::uint16_t v : (*options.required_orbits)[b]) {
                if (v >= d || orbit_id[v] != 0xffff)
                    throw std::invalid_argument("find_isomorphic_subgroups: bad orbit constraint");
                orbit_id[v] = static_cast<std::uint16_t>(b);
            }
        for (std::uint16_t v = 0; v < d; ++v)
            if (orbit_id[v] == 0xffff)
                throw std::invalid_argument("find_isomorphic_subgroups: orbit constraint must cover the domain");
    }

    // Pools of candidate images per generator level: order match, plus cheap
    // structural filters implied by the predicate.
    std::vector<std::uint32_t> want_order;
    for (std::uint16_t gen : gens) want_order.push_back(g.element_order(gen));
    bool abelian = g.is_abelian();

    auto element_ok = [&](const Perm& p, std::uint32_t want) {
        if (p.order() != want) return false;
        if (options.require_semiregular) {
            for (std::uint16_t v = 0; v < d; ++v)
                if (p[v] == v) return false;
        }
        if (options.required_orbits) {
            for (std::uint16_t v = 0; v < d; ++v)
                if (orbit_id[p[v]] != orbit_id[v]) return false;
        }
        return true;
    };

    std::map<std::uint32_t, std::vector<std::uint32_t>> pool_by_order;
    for (std::uint32_t o : want_order) pool_by_order[o];
    for (std::size_t i = 0; i < all.size(); ++i) {
        Perm p = all.perm(i);
        std::uint64_t o = p.order();
        auto it = pool_by_order.find(static_cast<std::uint32_t>(o));
        if (it == pool_by_order.end()) continue;
        if (element_ok(p, it->first)) it->second.push_back(static_cast<std::uint32_t>(i));
    }

    // Subgroup orders of the chain <g_0..g_i> in the abstract group.
    std::vector<std::size_t> chain_order(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        IndexSet head(gens.begin(), gens.begin() + i + 1);
        chain_order[i] = g.closure(head).size();
    }

    std::vector<PermGroup> found;
    std::unordered_map<std::vector<std::uint16_t>, bool, KeyHash> dedup;
    std::vector<Perm> chosen;

    std::function<void(std::size_t)> recurse = [&](std::size_t level) {
        if (level == gens.size()) {
            PermArena sub = close_generators(d, chosen, g.order() + 1);
            if (sub.size() != g.order()) return;
            auto key = subgroup_key(sub);
            auto [it, inserted] = dedup.emplace(key, true);
            if (!inserted) return;
            PermGroup candidate =
                PermGroup::from_elements(d, std::move(sub), std::vector<Perm>(chosen));
            // Abstract isomorphism check (word consistency comes free from
            // find_isomorphism on the converted copy).
            FinGroup as_group = perm_group_as_fingroup(candidate, "X");
            if (!find_isomorphism(g, as_group)) return;
            if (options.require_semiregular && !is_semiregular(candidate)) return;
            if (options.required_orbits) {
                auto orbs = orbits(candidate);
                std::vector<std::vector<std::uint16_t>> want = *options.required_orbits;
                for (auto& w : want) std::sort(w.begin(), w.end());
                std::sort(want.begin(), want.end());
                if (orbs != want) return;
            }
            if (options.extra && !options.extra(candidate)) return;
            found.push_back(std::move(candidate));
            return;
        }
        const auto& pool = pool_by_order[want_order[level]];
        for (std::uint32_t idx : pool) {
            Perm cand = all.perm(idx);
            if (abelian) {
                bool commutes = true;
                for (const Perm& prev : chosen) {
                    for (std::uint16_t v = 0; v < d; ++v)
                        if (prev[cand[v]] != cand[prev[v]]) {
                            commutes = false;
                            break;
                        }
                    if (!commutes) break;
                }
                if (!commutes) continue;
            }
            chosen.push_back(cand);
            bool ok = true;
            if (level + 1 < gens.size() || chosen.size() > 1) {
                try {
                    PermArena part = close_generators(d, chosen, g.order() + 1);
                    ok = part.size() == chain_order[level];
                } catch (const CapExceeded&) {
                    ok = false;
                }
            } else {
                ok = cand.order() == chain_order[level];
            }
            if (ok) recurse(level + 1);
            chosen.pop_back();
        }
    };
    recurse(0);

    std::sort(found.begin(), found.end(), [](const PermGroup& x, const PermGroup& y) {
        return subgroup_key(x.elements()) < subgroup_key(y.elements());
    });
    return found;
}

PermGroup sylow_subgroup(const PermGroup& a, std::uint32_t p) {
    std::uint64_t order = a.order();
    if (order % p != 0)
        throw std::invalid_argument("sylow_subgroup: p does not divide the group order");
    std::uint64_t target = 1;
    while (order % p == 0) {
        order /= p;
        target *= p;
    }
    const PermArena& all = a.elements();
    std::uint16_t d = a.degree();
    auto is_p_power = [&](std::uint64_t v) {
        while (v > 1) {
            if (v % p != 0) return false;
            v /= p;
        }
        return true;
    };

    std::vector<Perm> gens;
    PermArena current(d);
    current.insert(Perm::identity(d).images());
    while (current.size() < target) {
        bool grown = false;
        for (std::size_t i = 0; i < all.size() && !grown; ++i) {
            Perm x = all.perm(i);
            if (!is_p_power(x.order())) continue;
            if (current.contains(x)) continue;
            std::vector<Perm> trial = gens;
            trial.push_back(x);
            try {
                PermArena closed = close_generators(d, trial, target);
                if (is_p_power(closed.size())) {
                    gens = std::move(trial);
                    current = std::move(closed);
                    grown = true;
                }
            } catch (const CapExceeded&) {
                // subgroup grew past the p-part; not a p-group, skip
            }
        }
        if (!grown) throw std::logic_error("sylow_subgroup: could not grow to the full p-part");
    }
    return PermGroup::from_elements(d, std::move(current), std::move(gens));
}

SubgroupConjugacy conjugacy_classes_of_subgroups(const PermGroup& a,
                                                 const std::vector<PermGroup>& subgroups) {
    SubgroupConjugacy out;
    out.class_of.assign(subgroups.size(), static_cast<std::size_t>(-1));
    out.witness.assign(subgroups.size(), Perm::identity(a.degree()));

    std::unordered_map<std::vector<std::uint16_t>, std::size_t, KeyHash> index_of;
    for (std::size_t i = 0; i < subgroups.size(); ++i)
        index_of.emplace(subgroup_key(subgroups[i].elements()), i);

    for (std::size_t s = 0; s < subgroups.size(); ++s) {
        if (out.class_of[s] != static_cast<std::size_t>(-1)) continue;
        std::size_t cls = out.class_reps.size();
        out.class_reps.push_back(s);
        // BFS over conjugates by generators.
        struct Node {
            std::vector<Perm> elems;
            Perm witness;
        };
        std::vector<Node> queue;
        {
            std::vector<Perm> rows;
            const PermArena& e = subgroups[s].elements();
            for (std::size_t i = 0; i < e.size(); ++i) rows.push_back(e.perm(i));
            queue.push_back({std::move(rows), Perm::identity(a.degree())});
        }
        std::unordered_map<std::vector<std::uint16_t>, bool, KeyHash> visited;
        visited.emplace(subgroup_key(subgroups[s].elements()), true);
        out.class_of[s] = cls;
        out.witness[s] = Perm::identity(a.degree());
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (const Perm& g : a.generators()) {
                Perm ginv = g.inverse();
                std::vector<Perm> conj;
                conj.reserve(queue[head].elems.size());
                for (const Perm& r : queue[head].elems) conj.push_back(ginv.then(r).then(g));
                std::vector<std::vector<std::uint16_t>> rows;
                for (const Perm& r : conj) rows.push_back(r.images());
                std::sort(rows.begin(), rows.end());
                std::vector<std::uint16_t> key;
                for (const auto& r : rows) key.insert(key.end(), r.begin(), r.end());
                if (visited.count(key)) continue;
                visited.emplace(key, true);
                Perm w = queue[head].witness.then(g);
                auto it = index_of.find(key);
                if (it != index_of.end()) {
                    out.class_of[it->second] = cls;
                    out.witness[it->second] = w;
                }
                queue.push_back({std::move(conj), std::move(w)});
            }
        }
    }
    return out;
}

} // namespace bci
