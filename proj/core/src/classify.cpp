#include "bci/classify.hpp"

#include <algorithm>
#include <map>

#include "bci/group_ops.hpp"

namespace bci {

std::string to_string(TwoPartTag tag) {
    switch (tag) {
        case TwoPartTag::Trivial: return "trivial";
        case TwoPartTag::Cyclic: return "cyclic";
        case TwoPartTag::ElementaryAbelian: return "elementary-abelian";
        case TwoPartTag::Q8: return "Q8";
        case TwoPartTag::Other: return "other";
    }
    return "?";
}

namespace {

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> ps;
    for (std::uint32_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Invariant-factor exponents of an abelian p-group from order counts: the
// number of elements x with x^(p^k) = 1 is p^(sum of min(k, e_i)), so the
// successive log ratios give the conjugate partition.
std::vector<std::uint32_t> abelian_p_type(const FinGroup& g, const IndexSet& sylow,
                                          std::uint32_t p) {
    std::vector<std::uint64_t> counts;  // counts[k] = #elements of order dividing p^k
    counts.push_back(1);
    std::uint64_t pk = 1;
    while (counts.back() < sylow.size()) {
        pk *= p;
        std::uint64_t c = 0;
        for (std::uint16_t x : sylow)
            if (g.power(x, static_cast<std::int64_t>(pk)) == g.identity()) ++c;
        counts.push_back(c);
    }
    auto logp = [&](std::uint64_t v) {
        std::uint32_t e = 0;
        while (v > 1) {
            v /= p;
            ++e;
        }
        return e;
    };
    // conj[k] = number of invariant factors with exponent >= k.
    std::vector<std::uint32_t> conj;
    for (std::size_t k = 1; k < counts.size(); ++k)
        conj.push_back(logp(counts[k]) - logp(counts[k - 1]));
    std::vector<std::uint32_t> exps;
    for (std::uint32_t i = 0; i < (conj.empty() ? 0 : conj[0]); ++i) {
        std::uint32_t e = 0;
        for (std::uint32_t c : conj)
            if (c > i) ++e;
        exps.push_back(e);
    }
    std::sort(exps.rbegin(), exps.rend());
    return exps;
}

} // namespace

ClassCRecord classify_class_C(const FinGroup& g) {
    ClassCRecord rec;
    std::uint32_t n = g.order();

    // p-element sets; the group is nilpotent iff each is closed under
    // multiplication (then it is the unique Sylow p-subgroup).
    auto primes = prime_factors(n);
    std::map<std::uint32_t, IndexSet> sylow;
    rec.nilpotent = true;
    for (std::uint32_t p : primes) {
        IndexSet set;
        for (std::uint16_t x = 0; x < n; ++x) {
            std::uint32_t o = g.element_order(x);
            bool ppower = true;
            while (o > 1) {
                if (o % p != 0) {
                    ppower = false;
                    break;
                }
                o /= p;
            }
            if (ppower) set.push_back(x);
        }
        std::uint32_t ppart = 1, rest = n;
        while (rest % p == 0) {
            rest /= p;
            ppart *= p;
        }
        bool closed = set.size() == ppart;
        for (std::size_t a = 0; a < set.size() && closed; ++a)
            for (std::size_t b = 0; b < set.size(); ++b)
                if (!std::binary_search(set.begin(), set.end(), g.mul(set[a], set[b]))) {
                    closed = false;
                    break;
                }
        if (!closed) {
            rec.nilpotent = false;
            break;
        }
        sylow[p] = std::move(set);
    }
    if (!rec.nilpotent) return rec;

    // Odd part = product of the odd Sylows; in a nilpotent group this is the
    // set of odd-order elements.
    IndexSet odd;
    for (std::uint16_t x = 0; x < n; ++x)
        if (g.element_order(x) % 2 != 0) odd.push_back(x);
    rec.odd_part_elements = odd;
    IndexSet two = sylow.count(2) ? sylow[2] : IndexSet{g.identity()};
    rec.two_part_elements = two;

    rec.odd_part_abelian = true;
    for (std::size_t a = 0; a < odd.size() && rec.odd_part_abelian; ++a)
        for (std::size_t b = a + 1; b < odd.size(); ++b)
            if (g.mul(odd[a], odd[b]) != g.mul(odd[b], odd[a])) {
                rec.odd_part_abelian = false;
                break;
            }

    if (rec.odd_part_abelian) {
        for (std::uint32_t p : primes) {
            if (p == 2) continue;
            rec.odd_type.emplace_back(p, abelian_p_type(g, sylow[p], p));
        }
    }

    // Tag the 2-part.
    if (two.size() == 1) {
        rec.two_part = TwoPartTag::Trivial;
    } else {
        SubgroupGroup v = subgroup_as_group(g, two, "V");
        bool cyclic = false;
        for (std::uint16_t x = 0; x < v.group.order() && !cyclic; ++x)
            cyclic = v.group.element_order(x) == v.group.order();
        bool elem = v.group.exponent() == 2;
        if (cyclic) {
            rec.two_part = TwoPartTag::Cyclic;
        } else if (elem) {
            rec.two_part = TwoPartTag::ElementaryAbelian;
        } else if (v.group.order() == 8 &&
                   find_isomorphism(v.group, build_group(GroupSpec::q8())).has_value()) {
            rec.two_part = TwoPartTag::Q8;
        } else {
            rec.two_part = TwoPartTag::Other;
        }
    }

    bool two_ok = rec.two_part != TwoPartTag::Other;
    rec.in_Cstar = rec.odd_part_abelian && two_ok;

    // Homocyclic odd part: one common rank across primes, one common exponent
    // within each prime.
    bool homocyclic = true;
    std::size_t rank = 0;
    bool first = true;
    for (const auto& [p, exps] : rec.odd_type) {
        (void)p;
        if (exps.empty()) continue;
        for (std::uint32_t e : exps)
            if (e != exps[0]) homocyclic = false;
        if (first) {
            rank = exps.size();
            first = false;
        } else if (exps.size() != rank) {
            homocyclic = false;
        }
    }
    rec.in_C = rec.in_Cstar && homocyclic;

    if (rec.in_Cstar) {
        GroupSpec over;
        for (const auto& [p, exps] : rec.odd_type) {
            if (exps.empty()) continue;
            std::uint32_t pe = 1;
            for (std::uint32_t i = 0; i < exps[0]; ++i) pe *= p;
            over.factors.push_back(
                GroupAtom{GroupAtom::Kind::CyclicPower, pe,
                          static_cast<std::uint32_t>(exps.size())});
        }
        switch (rec.two_part) {
            case TwoPartTag::Trivial: break;
            case TwoPartTag::Cyclic:
                over.factors.push_back(GroupAtom{GroupAtom::Kind::Cyclic,
                                                 static_cast<std::uint32_t>(two.size()), 1});
                break;
            case TwoPartTag::ElementaryAbelian: {
                std::uint32_t r = 0;
                std::size_t sz = two.size();
                while (sz > 1) {
                    sz /= 2;
                    ++r;
                }
                over.factors.push_back(GroupAtom{GroupAtom::Kind::CyclicPower, 2, r});
                break;
            }
            case TwoPartTag::Q8:
                over.factors.push_back(GroupAtom{GroupAtom::Kind::Quaternion8});
                break;
            case TwoPartTag::Other: break;
        }
        rec.overgroup = over;  // empty factor list = trivial group
    }
    return rec;
}

} // namespace bci
