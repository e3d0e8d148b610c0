#include "bci/group_ops.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "bci/limits.hpp"

namespace bci {

GroupMap verify_map(const FinGroup& src, const FinGroup& dst,
                    std::vector<std::uint16_t> images) {
    if (images.size() != src.order())
        throw std::invalid_argument("verify_map: image list size mismatch");
    GroupMap m;
    m.images = std::move(images);
    m.is_homomorphism = true;
    for (std::uint16_t a = 0; a < src.order() && m.is_homomorphism; ++a)
        for (std::uint16_t b = 0; b < src.order(); ++b)
            if (m.images[src.mul(a, b)] != dst.mul(m.images[a], m.images[b])) {
                m.is_homomorphism = false;
                break;
            }
    std::vector<bool> hit(dst.order(), false);
    m.is_injective = true;
    for (std::uint16_t a = 0; a < src.order(); ++a) {
        if (hit[m.images[a]]) m.is_injective = false;
        hit[m.images[a]] = true;
    }
    m.is_surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    return m;
}

namespace {

struct HomSearcher {
    const FinGroup& src;
    const FinGroup& dst;
    const IndexSet& gens;
    const std::function<bool(const std::vector<int>&)>& found;
    std::size_t hits = 0;
    bool stopped = false;
    std::vector<std::uint16_t> chosen;
    std::vector<std::uint32_t> dst_orders;

    // Expand the partial subgroup generated by gens[0..level] and its images;
    // returns false on any homomorphism/injectivity conflict.
    bool expand(std::size_t level, std::vector<int>& map, std::vector<bool>& used) const {
        std::fill(map.begin(), map.end(), -1);
        std::fill(used.begin(), used.end(), false);
        map[src.identity()] = dst.identity();
        used[dst.identity()] = true;
        std::vector<std::uint16_t> queue{src.identity()};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            std::uint16_t x = queue[head];
            for (std::size_t j = 0; j <= level; ++j) {
                std::uint16_t y = src.mul(x, gens[j]);
                std::uint16_t ym = dst.mul(static_cast<std::uint16_t>(map[x]), chosen[j]);
                if (map[y] == -1) {
                    if (used[ym]) return false;  // injectivity
                    map[y] = ym;
                    used[ym] = true;
                    queue.push_back(y);
                } else if (map[y] != ym) {
                    return false;  // not a homomorphism
                }
            }
        }
        return true;
    }

    void recurse(std::size_t level, std::size_t seed_size) {
        if (stopped) return;
        if (level == gens.size()) {
            std::vector<int> map(src.order(), -1);
            std::vector<bool> used(dst.order(), false);
            if (gens.empty()) map[src.identity()] = dst.identity();
            if (!gens.empty() && !expand(gens.size() - 1, map, used)) return;
            ++hits;
            if (!found(map)) stopped = true;
            return;
        }
        std::uint32_t want = src.element_order(gens[level]);
        std::vector<int> map(src.order(), -1);
        std::vector<bool> used(dst.order(), false);
        auto try_candidate = [&](std::uint16_t cand) {
            if (dst_orders[cand] != want) return;
            chosen[level] = cand;
            if (!expand(level, map, used)) return;
            recurse(level + 1, seed_size);
        };
        if (level < seed_size) {
            try_candidate(chosen[level]);
        } else {
            for (std::uint16_t cand = 0; cand < dst.order() && !stopped; ++cand)
                try_candidate(cand);
        }
    }
};

} // namespace

std::size_t search_injective_homs(
    const FinGroup& src, const FinGroup& dst, const IndexSet& gens,
    const std::vector<std::uint16_t>& seed,
    const std::function<bool(const std::vector<int>&)>& found) {
    HomSearcher s{src, dst, gens, found};
    s.chosen.assign(gens.size(), 0);
    for (std::size_t i = 0; i < seed.size(); ++i) s.chosen[i] = seed[i];
    s.dst_orders.resize(dst.order());
    for (std::uint16_t i = 0; i < dst.order(); ++i) s.dst_orders[i] = dst.element_order(i);
    s.recurse(0, seed.size());
    return s.hits;
}

std::vector<IndexSet> all_subgroups(const FinGroup& g) {
    if (g.order() > limits().max_subgroup_scan)
        throw CapExceeded("all_subgroups: order cap exceeded", g.order());

    struct Entry {
        IndexSet elements;
        IndexSet gens;
        std::uint64_t key;
    };
    std::vector<Entry> subs;
    std::unordered_multimap<std::uint64_t, std::size_t> index;
    auto push = [&](IndexSet elements, IndexSet gens) {
        std::uint64_t key = hash_span(elements);
        auto [lo, hi] = index.equal_range(key);
        for (auto it = lo; it != hi; ++it)
            if (subs[it->second].elements == elements) return;
        index.emplace(key, subs.size());
        subs.push_back({std::move(elements), std::move(gens), key});
    };

    push(g.closure({}), {});
    for (std::size_t i = 0; i < subs.size(); ++i) {
        for (std::uint16_t x = 0; x < g.order(); ++x) {
            if (std::binary_search(subs[i].elements.begin(), subs[i].elements.end(), x)) continue;
            IndexSet gens = subs[i].gens;
            gens.push_back(x);
            push(g.closure(gens), std::move(gens));
        }
    }

    std::vector<IndexSet> out;
    out.reserve(subs.size());
    for (auto& e : subs) out.push_back(std::move(e.elements));
    std::sort(out.begin(), out.end());
    return out;
}

PermGroup automorphism_group(const FinGroup& g) {
    if (g.order() > limits().max_subgroup_scan)
        throw CapExceeded("automorphism_group: order cap exceeded", g.order());
    IndexSet gens = g.generating_sequence();
    PermArena arena(g.order());
    search_injective_homs(g, g, gens, {}, [&](const std::vector<int>& map) {
        std::vector<std::uint16_t> img(g.order());
        for (std::uint16_t i = 0; i < g.order(); ++i) img[i] = static_cast<std::uint16_t>(map[i]);
        arena.insert(img);
        return true;
    });
    // Every returned map is total (gens generate g) and bijective.
    std::vector<Perm> small;
    {
        PermGroup full = PermGroup::from_elements(g.order(), std::move(arena));
        small = full.small_generating_set();
        return PermGroup::from_elements(g.order(), PermArena(full.elements()), std::move(small));
    }
}

std::optional<GroupMap> find_isomorphism(const FinGroup& g, const FinGroup& h) {
    if (g.order() != h.order()) return std::nullopt;
    // Cheap invariant: element-order multisets must agree.
    std::map<std::uint32_t, int> og, oh;
    for (std::uint16_t i = 0; i < g.order(); ++i) ++og[g.element_order(i)];
    for (std::uint16_t i = 0; i < h.order(); ++i) ++oh[h.element_order(i)];
    if (og != oh) return std::nullopt;

    std::optional<GroupMap> result;
    IndexSet gens = g.generating_sequence();
    search_injective_homs(g, h, gens, {}, [&](const std::vector<int>& map) {
        std::vector<std::uint16_t> img(g.order());
        for (std::uint16_t i = 0; i < g.order(); ++i) img[i] = static_cast<std::uint16_t>(map[i]);
        result = verify_map(g, h, std::move(img));
        return false;  // first in search order
    });
    return result;
}

std::optional<GroupMap> find_embedding(const FinGroup& g, const FinGroup& h) {
    if (h.order() % g.order() != 0) return std::nullopt;
    std::optional<GroupMap> result;
    IndexSet gens = g.generating_sequence();
    search_injective_homs(g, h, gens, {}, [&](const std::vector<int>& map) {
        GroupMap m;
        m.images.assign(g.order(), 0);
        for (std::uint16_t i = 0; i < g.order(); ++i)
            m.images[i] = static_cast<std::uint16_t>(map[i]);
        m.is_homomorphism = true;
        m.is_injective = true;
        m.is_surjective = g.order() == h.order();
        result = std::move(m);
        return false;
    });
    return result;
}

namespace {

// Generating sequence of g that starts with a generating sequence of the
// subgroup `sub` (element list).
std::pair<IndexSet, std::size_t> extended_generating_sequence(const FinGroup& g,
                                                              const IndexSet& sub) {
    IndexSet gens;
    IndexSet closed = g.closure({});
    auto missing_in = [&](const IndexSet& pool) -> int {
        for (std::uint16_t x : pool)
            if (!std::binary_search(closed.begin(), closed.end(), x)) return x;
        return -1;
    };
    while (true) {
        int x = missing_in(sub);
        if (x < 0) break;
        gens.push_back(static_cast<std::uint16_t>(x));
        closed = g.closure(gens);
    }
    std::size_t sub_gens = gens.size();
    while (closed.size() < g.order()) {
        for (std::uint16_t x = 0; x < g.order(); ++x) {
            if (!std::binary_search(closed.begin(), closed.end(), x)) {
                gens.push_back(x);
                break;
            }
        }
        closed = g.closure(gens);
    }
    return {gens, sub_gens};
}

} // namespace

bool extends_to_automorphism(const FinGroup& g, const IndexSet& sub,
                             const std::vector<std::uint16_t>& images) {
    auto [gens, sub_gen_count] = extended_generating_sequence(g, sub);
    std::vector<std::uint16_t> seed(sub_gen_count);
    for (std::size_t i = 0; i < sub_gen_count; ++i) {
        auto it = std::lower_bound(sub.begin(), sub.end(), gens[i]);
        if (it == sub.end() || *it != gens[i])
            throw std::logic_error("extends_to_automorphism: generator not in subgroup");
        seed[i] = images[static_cast<std::size_t>(it - sub.begin())];
    }
    bool ok = false;
    search_injective_homs(g, g, gens, seed, [&](const std::vector<int>&) {
        ok = true;
        return false;
    });
    return ok;
}

HomogeneityResult is_homogeneous(const FinGroup& g) {
    if (g.order() > limits().max_homogeneity_order)
        throw CapExceeded("is_homogeneous: order cap exceeded", g.order());
    auto subs = all_subgroups(g);

    // Partition into isomorphism classes.
    std::vector<int> class_of(subs.size(), -1);
    std::vector<std::size_t> reps;
    std::vector<SubgroupGroup> rep_groups;
    std::vector<std::vector<std::pair<std::size_t, GroupMap>>> members;  // (index, iso rep->member)
    for (std::size_t i = 0; i < subs.size(); ++i) {
        SubgroupGroup sg = subgroup_as_group(g, subs[i]);
        bool placed = false;
        for (std::size_t c = 0; c < reps.size() && !placed; ++c) {
            if (rep_groups[c].group.order() != sg.group.order()) continue;
            if (auto iso = find_isomorphism(rep_groups[c].group, sg.group)) {
                class_of[i] = static_cast<int>(c);
                members[c].emplace_back(i, *iso);
                placed = true;
            }
        }
        if (!placed) {
            class_of[i] = static_cast<int>(reps.size());
            reps.push_back(i);
            rep_groups.push_back(std::move(sg));
            members.push_back({{i, verify_map(rep_groups.back().group, rep_groups.back().group,
                                              [&] {
                                                  std::vector<std::uint16_t> id(
                                                      rep_groups.back().group.order());
                                                  for (std::uint16_t t = 0; t < id.size(); ++t)
                                                      id[t] = t;
                                                  return id;
                                              }())}});
        }
    }

    // For each class: (1) the setwise stabilizer of the representative inside
    // Aut(g) must restrict onto all of Aut(rep); checking the generators of
    // Aut(rep) suffices. (2) one transporter rep -> member must exist for
    // every member; with (1) this makes every subgroup isomorphism extendable.
    for (std::size_t c = 0; c < reps.size(); ++c) {
        const SubgroupGroup& rep = rep_groups[c];
        const IndexSet& amb = subs[reps[c]];
        PermGroup aut_rep = automorphism_group(rep.group);
        for (const Perm& psi : aut_rep.generators()) {
            std::vector<std::uint16_t> images(amb.size());
            for (std::size_t t = 0; t < amb.size(); ++t)
                images[t] = rep.parent_index[psi[t]];
            if (!extends_to_automorphism(g, amb, images)) {
                HomogeneityWitness w;
                w.subgroup_a = amb;
                w.subgroup_b = amb;
                w.iso_images = images;
                return {false, w};
            }
        }
        for (const auto& [idx, iso] : members[c]) {
            if (idx == reps[c]) continue;
            SubgroupGroup member = subgroup_as_group(g, subs[idx]);
            std::vector<std::uint16_t> images(amb.size());
            for (std::size_t t = 0; t < amb.size(); ++t)
                images[t] = member.parent_index[iso.images[t]];
            if (!extends_to_automorphism(g, amb, images)) {
                HomogeneityWitness w;
                w.subgroup_a = amb;
                w.subgroup_b = subs[idx];
                w.iso_images = images;
                return {false, w};
            }
        }
    }
    return {true, std::nullopt};
}

FinGroup perm_group_as_fingroup(const PermGroup& pg, const std::string& name) {
    const PermArena& el = pg.elements();
    if (el.size() > limits().max_group_order)
        throw CapExceeded("perm_group_as_fingroup: order cap exceeded", el.size());
    std::size_t n = el.size();
    std::vector<std::uint16_t> table(n * n);
    std::vector<std::string> labels(n);
    std::vector<std::uint16_t> prod(pg.degree());
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = "g" + std::to_string(i);
        auto a = el.row(i);
        for (std::size_t j = 0; j < n; ++j) {
            auto b = el.row(j);
            for (std::size_t t = 0; t < pg.degree(); ++t) prod[t] = b[a[t]];
            auto found = el.find(prod);
            if (!found) throw std::logic_error("perm_group_as_fingroup: set not closed");
            table[i * n + j] = static_cast<std::uint16_t>(*found);
        }
    }
    return FinGroup(std::move(table), std::move(labels), name);
}

} // namespace bci
