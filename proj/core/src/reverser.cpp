#include "bci/reverser.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bci/bicayley.hpp"
#include "bci/group_actions.hpp"

namespace bci {
namespace {

// x = u * v with u of odd order and v of 2-power order (unique in a nilpotent
// group; both are powers of x).
std::pair<std::uint16_t, std::uint16_t> coprime_parts(const FinGroup& g, std::uint16_t x) {
    std::uint32_t o = g.element_order(x);
    std::uint32_t o2 = 1;
    std::uint32_t odd = o;
    while (odd % 2 == 0) {
        odd /= 2;
        o2 *= 2;
    }
    // u = x^(o2 * a) with o2*a = 1 mod odd; v = x^(odd * b) with odd*b = 1 mod o2.
    auto inv_mod = [](std::uint32_t a, std::uint32_t m) -> std::uint32_t {
        if (m == 1) return 0;
        for (std::uint32_t c = 0; c < m; ++c)
            if ((static_cast<std::uint64_t>(a % m) * c) % m == 1) return c;
        throw std::logic_error("coprime_parts: no modular inverse");
    };
    std::uint32_t a = inv_mod(o2, odd);
    std::uint32_t b = inv_mod(odd, o2);
    std::uint16_t u = g.power(x, static_cast<std::int64_t>(o2) * a);
    std::uint16_t v = g.power(x, static_cast<std::int64_t>(odd) * b);
    if (g.mul(u, v) != x) throw std::logic_error("coprime_parts: decomposition failed");
    return {u, v};
}

} // namespace

ReverserBundle build_reverser(const FinGroup& x, std::span<const std::uint16_t> s) {
    ClassCRecord rec = classify_class_C(x);
    if (!rec.in_Cstar)
        throw std::invalid_argument("build_reverser: group is outside the subgroup-closed class");
    IndexSet set(s.begin(), s.end());
    std::sort(set.begin(), set.end());
    if (!std::binary_search(set.begin(), set.end(), x.identity()))
        throw std::invalid_argument("build_reverser: identity must lie in the connection set");

    std::uint16_t n = x.order();
    std::vector<std::uint16_t> upart(n), vpart(n);
    for (std::uint16_t e = 0; e < n; ++e) {
        auto [u, v] = coprime_parts(x, e);
        upart[e] = u;
        vpart[e] = v;
    }

    // Conjugator for the two-part: identity when the 2-part is abelian
    // (inversion is then an automorphism); for Q8, an element c with
    // v^c = v^-1 for every v in the projection of S.
    std::uint16_t conj = x.identity();
    bool q8 = rec.two_part == TwoPartTag::Q8;
    if (q8) {
        bool found = false;
        for (std::uint16_t c : rec.two_part_elements) {
            bool ok = true;
            for (std::uint16_t e : set) {
                std::uint16_t v = vpart[e];
                if (x.conjugate(v, c) != x.inv(v)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                conj = c;
                found = true;
                break;
            }
        }
        if (!found)
            throw std::runtime_error(
                "build_reverser: no conjugator inverts the two-part projection of S");
    }

    std::vector<std::uint16_t> iota_images(n);
    for (std::uint16_t e = 0; e < n; ++e) {
        std::uint16_t ui = x.inv(upart[e]);
        std::uint16_t vi = q8 ? x.conjugate(vpart[e], conj) : x.inv(vpart[e]);
        iota_images[e] = x.mul(ui, vi);
    }
    GroupMap iota = verify_map(x, x, std::move(iota_images));
    if (!iota.is_homomorphism || !iota.is_injective || !iota.is_surjective)
        throw std::runtime_error("build_reverser: iota is not an automorphism");

    // S^iota must be S^-1.
    IndexSet s_iota, s_inv;
    for (std::uint16_t e : set) {
        s_iota.push_back(iota.images[e]);
        s_inv.push_back(x.inv(e));
    }
    std::sort(s_iota.begin(), s_iota.end());
    std::sort(s_inv.begin(), s_inv.end());
    if (s_iota != s_inv) throw std::runtime_error("build_reverser: iota does not invert S");

    std::vector<std::uint16_t> tau_images(2u * n);
    for (std::uint16_t e = 0; e < n; ++e) {
        tau_images[e] = static_cast<std::uint16_t>(n + iota.images[e]);
        tau_images[n + e] = iota.images[e];
    }
    Perm tau(std::move(tau_images));
    if (!tau.then(tau).is_identity())
        throw std::runtime_error("build_reverser: tau is not an involution");

    // tau must preserve the edges of BCay(X, S).
    Graph gamma = bcay(x, set);
    for (auto [u, v] : gamma.edges())
        if (!gamma.has_edge(tau[u], tau[v]))
            throw std::runtime_error("build_reverser: tau is not a graph automorphism");

    // <X^, tau> must be regular on the 2n vertices.
    {
        std::vector<Perm> gens;
        for (std::uint16_t e : x.generating_sequence()) gens.push_back(right_translation(x, e));
        gens.push_back(tau);
        PermGroup l(static_cast<std::uint16_t>(2 * n), std::move(gens));
        if (l.order() != 2ull * n || !is_regular(l))
            throw std::runtime_error("build_reverser: <X^, tau> is not regular");
        // For small groups, check that every subgroup of X^ is normal in it.
        if (n <= 64) {
            for (const auto& sub : all_subgroups(x)) {
                std::vector<Perm> sub_gens;
                for (std::uint16_t e : sub) sub_gens.push_back(right_translation(x, e));
                PermGroup hat_sub(static_cast<std::uint16_t>(2 * n), std::move(sub_gens));
                if (!is_normal(l, hat_sub))
                    throw std::runtime_error("build_reverser: a subgroup of X^ is not normal");
            }
        }
    }

    return {std::move(iota), conj, std::move(tau)};
}

} // namespace bci
