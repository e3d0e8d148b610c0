#include "bci/group_spec.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

#include "bci/limits.hpp"

namespace bci {
namespace {

struct RawGroup {
    std::vector<std::uint16_t> table;
    std::vector<std::string> labels;
};

RawGroup make_cyclic(std::uint32_t n) {
    RawGroup g;
    g.table.resize(static_cast<std::size_t>(n) * n);
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            g.table[a * n + b] = static_cast<std::uint16_t>((a + b) % n);
    for (std::uint32_t a = 0; a < n; ++a) g.labels.push_back(std::to_string(a));
    return g;
}

// Quaternion units as (sign, axis) with axis in {1, i, j, k}. Index layout:
// 1,-1,i,-i,j,-j,k,-k.
RawGroup make_q8() {
    auto axis = [](std::uint16_t e) { return e / 2; };
    auto sign = [](std::uint16_t e) { return e % 2 == 0 ? 1 : -1; };
    auto enc = [](int ax, int sg) {
        return static_cast<std::uint16_t>(2 * ax + (sg > 0 ? 0 : 1));
    };
    // axis multiplication: 0=1, 1=i, 2=j, 3=k; sgn table for i*j = k etc.
    static const int ax_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sg_mul[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    RawGroup g;
    g.table.resize(64);
    for (std::uint16_t a = 0; a < 8; ++a) {
        for (std::uint16_t b = 0; b < 8; ++b) {
            int ax = ax_mul[axis(a)][axis(b)];
            int sg = sign(a) * sign(b) * sg_mul[axis(a)][axis(b)];
            g.table[a * 8 + b] = enc(ax, sg);
        }
    }
    g.labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return g;
}

RawGroup direct_product(const RawGroup& a, const RawGroup& b) {
    std::size_t na = a.labels.size(), nb = b.labels.size();
    std::size_t n = na * nb;
    RawGroup g;
    g.table.resize(n * n);
    g.labels.resize(n);
    auto idx = [&](std::size_t x, std::size_t y) { return x * nb + y; };
    for (std::size_t x1 = 0; x1 < na; ++x1)
        for (std::size_t y1 = 0; y1 < nb; ++y1)
            for (std::size_t x2 = 0; x2 < na; ++x2)
                for (std::size_t y2 = 0; y2 < nb; ++y2)
                    g.table[idx(x1, y1) * n + idx(x2, y2)] = static_cast<std::uint16_t>(
                        idx(a.table[x1 * na + x2], b.table[y1 * nb + y2]));
    for (std::size_t x = 0; x < na; ++x)
        for (std::size_t y = 0; y < nb; ++y) {
            // Strip inner parens so nested products stay flat: (a:b):c -> (a:b:c).
            std::string la = a.labels[x], lb = b.labels[y];
            if (la.size() >= 2 && la.front() == '(' && la.back() == ')')
                la = la.substr(1, la.size() - 2);
            if (lb.size() >= 2 && lb.front() == '(' && lb.back() == ')')
                lb = lb.substr(1, lb.size() - 2);
            g.labels[idx(x, y)] = "(" + la + ":" + lb + ")";
        }
    return g;
}

} // namespace

std::uint64_t GroupAtom::order() const {
    switch (kind) {
        case Kind::Cyclic: return n;
        case Kind::CyclicPower: {
            std::uint64_t o = 1;
            for (std::uint32_t i = 0; i < k; ++i) o *= n;
            return o;
        }
        case Kind::Quaternion8: return 8;
    }
    return 0;
}

std::string GroupAtom::to_string() const {
    switch (kind) {
        case Kind::Cyclic: return "C" + std::to_string(n);
        case Kind::CyclicPower: return "C" + std::to_string(n) + "^" + std::to_string(k);
        case Kind::Quaternion8: return "Q8";
    }
    return "?";
}

std::uint64_t GroupSpec::order() const {
    std::uint64_t o = 1;
    for (const auto& a : factors) o *= a.order();
    return o;
}

std::string GroupSpec::to_string() const {
    if (factors.empty()) return "C1";
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += "x";
        out += factors[i].to_string();
    }
    return out;
}

GroupSpec GroupSpec::times(const GroupSpec& other) const {
    GroupSpec out = *this;
    out.factors.insert(out.factors.end(), other.factors.begin(), other.factors.end());
    return out;
}

FinGroup build_group(const GroupSpec& spec) {
    if (spec.order() > limits().max_group_order)
        throw CapExceeded("build_group: order cap exceeded", spec.order());
    for (const auto& atom : spec.factors) {
        if (atom.kind != GroupAtom::Kind::Quaternion8 && atom.n < 2)
            throw std::invalid_argument("build_group: cyclic order must be >= 2");
        if (atom.kind == GroupAtom::Kind::CyclicPower && atom.k < 1)
            throw std::invalid_argument("build_group: cyclic power must be >= 1");
    }

    RawGroup acc;
    acc.table = {0};
    acc.labels = {"0"};
    bool first = true;
    auto absorb = [&](const RawGroup& g) {
        if (first) {
            acc = g;
            first = false;
        } else {
            acc = direct_product(acc, g);
        }
    };
    for (const auto& atom : spec.factors) {
        switch (atom.kind) {
            case GroupAtom::Kind::Cyclic: absorb(make_cyclic(atom.n)); break;
            case GroupAtom::Kind::CyclicPower:
                for (std::uint32_t i = 0; i < atom.k; ++i) absorb(make_cyclic(atom.n));
                break;
            case GroupAtom::Kind::Quaternion8: absorb(make_q8()); break;
        }
    }
    return FinGroup(std::move(acc.table), std::move(acc.labels), spec.to_string());
}

GroupSpec parse_group_spec(const std::string& text) {
    GroupSpec spec;
    std::size_t pos = 0;
    auto need = [&](bool cond, const std::string& msg) {
        if (!cond) throw ParseError(msg + " at position " + std::to_string(pos), pos);
    };
    auto parse_int = [&]() -> std::uint32_t {
        std::size_t start = pos;
        std::uint64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            need(v <= 1'000'000, "number too large");
            ++pos;
        }
        need(pos > start, "expected a number");
        return static_cast<std::uint32_t>(v);
    };
    while (true) {
        need(pos < text.size(), "expected an atom");
        if (text[pos] == 'Q') {
            ++pos;
            need(pos < text.size() && text[pos] == '8', "unknown atom (did you mean Q8?)");
            ++pos;
            spec.factors.push_back(GroupAtom{GroupAtom::Kind::Quaternion8});
        } else if (text[pos] == 'C') {
            ++pos;
            std::uint32_t n = parse_int();
            need(n >= 2, "cyclic order must be >= 2");
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                std::uint32_t k = parse_int();
                need(k >= 1, "cyclic power must be >= 1");
                spec.factors.push_back(GroupAtom{GroupAtom::Kind::CyclicPower, n, k});
            } else {
                spec.factors.push_back(GroupAtom{GroupAtom::Kind::Cyclic, n, 1});
            }
        } else {
            need(false, "expected 'C<int>', 'C<int>^<int>' or 'Q8'");
        }
        if (pos == text.size()) break;
        need(text[pos] == 'x', "expected 'x' between atoms");
        ++pos;
    }
    return spec;
}

FinGroup build_semidirect_cyclic_power(std::uint32_t p, std::uint32_t k, std::uint32_t m,
                                       const std::vector<std::uint32_t>& matrix) {
    if (matrix.size() != static_cast<std::size_t>(k) * k)
        throw std::invalid_argument("build_semidirect: matrix size mismatch");
    std::uint64_t base = 1;
    for (std::uint32_t i = 0; i < k; ++i) base *= p;
    std::uint64_t order = base * m;
    if (order > limits().max_group_order)
        throw CapExceeded("build_semidirect: order cap exceeded", order);

    auto vec_of = [&](std::uint64_t idx) {
        std::vector<std::uint32_t> v(k);
        for (std::uint32_t i = 0; i < k; ++i) {
            v[i] = idx % p;
            idx /= p;
        }
        return v;
    };
    auto idx_of = [&](const std::vector<std::uint32_t>& v) {
        std::uint64_t idx = 0;
        for (std::uint32_t i = k; i-- > 0;) idx = idx * p + v[i];
        return idx;
    };
    auto apply = [&](const std::vector<std::uint32_t>& v, const std::vector<std::uint32_t>& mat) {
        std::vector<std::uint32_t> out(k, 0);
        for (std::uint32_t i = 0; i < k; ++i)
            for (std::uint32_t j = 0; j < k; ++j) out[j] = (out[j] + v[i] * mat[i * k + j]) % p;
        return out;
    };

    // Powers of the matrix.
    std::vector<std::vector<std::uint32_t>> mp(m);
    mp[0].assign(static_cast<std::size_t>(k) * k, 0);
    for (std::uint32_t i = 0; i < k; ++i) mp[0][i * k + i] = 1;
    for (std::uint32_t t = 1; t < m; ++t) {
        mp[t].assign(static_cast<std::size_t>(k) * k, 0);
        for (std::uint32_t i = 0; i < k; ++i)
            for (std::uint32_t j = 0; j < k; ++j) {
                std::uint32_t acc = 0;
                for (std::uint32_t l = 0; l < k; ++l)
                    acc = (acc + mp[t - 1][i * k + l] * matrix[l * k + j]) % p;
                mp[t][i * k + j] = acc;
            }
    }
    // Verify order m: M^m == I and no smaller power is I.
    auto is_id = [&](const std::vector<std::uint32_t>& mat) {
        for (std::uint32_t i = 0; i < k; ++i)
            for (std::uint32_t j = 0; j < k; ++j)
                if (mat[i * k + j] != (i == j ? 1u : 0u)) return false;
        return true;
    };
    {
        std::vector<std::uint32_t> mm(static_cast<std::size_t>(k) * k, 0);
        for (std::uint32_t i = 0; i < k; ++i)
            for (std::uint32_t j = 0; j < k; ++j) {
                std::uint32_t acc = 0;
                for (std::uint32_t l = 0; l < k; ++l)
                    acc = (acc + mp[m - 1][i * k + l] * matrix[l * k + j]) % p;
                mm[i * k + j] = acc;
            }
        if (!is_id(mm)) throw std::invalid_argument("build_semidirect: matrix order is not m");
        for (std::uint32_t t = 1; t < m; ++t)
            if (is_id(mp[t])) throw std::invalid_argument("build_semidirect: matrix order divides t < m");
    }

    // Elements (v, t), 0 <= t < m; (v,s)(w,t) = (v M^t + w? ...). We use the
    // convention (v,s)(w,t) = (v + w M^{-s}?, ...) -- concretely: treat (v,s)
    // as the map x -> (x)M^s + v acting on the right; composition of maps
    // (first (v,s), then (w,t)) gives x M^{s+t} + v M^t + w, i.e.
    // (v,s)(w,t) = (v M^t + w, s + t).
    auto eidx = [&](std::uint64_t v, std::uint32_t t) { return t * base + v; };
    std::vector<std::uint16_t> table(order * order);
    std::vector<std::string> labels(order);
    for (std::uint32_t s = 0; s < m; ++s) {
        for (std::uint64_t vi = 0; vi < base; ++vi) {
            auto v = vec_of(vi);
            {
                std::string lab = "[";
                for (std::uint32_t i = 0; i < k; ++i) {
                    if (i) lab += ",";
                    lab += std::to_string(v[i]);
                }
                lab += "|" + std::to_string(s) + "]";
                labels[eidx(vi, s)] = lab;
            }
            for (std::uint32_t t = 0; t < m; ++t) {
                auto vmt = apply(v, mp[t]);
                for (std::uint64_t wi = 0; wi < base; ++wi) {
                    auto w = vec_of(wi);
                    std::vector<std::uint32_t> sum(k);
                    for (std::uint32_t i = 0; i < k; ++i) sum[i] = (vmt[i] + w[i]) % p;
                    table[eidx(vi, s) * order + eidx(wi, t)] =
                        static_cast<std::uint16_t>(eidx(idx_of(sum), (s + t) % m));
                }
            }
        }
    }
    std::string name = "C" + std::to_string(p) + "^" + std::to_string(k) + ":C" + std::to_string(m);
    return FinGroup(std::move(table), std::move(labels), name);
}

std::vector<std::vector<std::uint32_t>> order_m_matrices(std::uint32_t p, std::uint32_t k,
                                                         std::uint32_t m,
                                                         bool fixed_point_free_only,
                                                         std::size_t max_results) {
    std::vector<std::vector<std::uint32_t>> out;
    std::size_t cells = static_cast<std::size_t>(k) * k;
    std::vector<std::uint32_t> mat(cells, 0);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < cells; ++i) {
        total *= p;
        if (total > 200'000'000ull)
            throw CapExceeded("order_m_matrices: search space too large", 0);
    }

    auto mat_mul = [&](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> c(cells, 0);
        for (std::uint32_t i = 0; i < k; ++i)
            for (std::uint32_t j = 0; j < k; ++j) {
                std::uint32_t acc = 0;
                for (std::uint32_t l = 0; l < k; ++l) acc = (acc + a[i * k + l] * b[l * k + j]) % p;
                c[i * k + j] = acc;
            }
        return c;
    };
    auto is_id = [&](const std::vector<std::uint32_t>& a) {
        for (std::uint32_t i = 0; i < k; ++i)
            for (std::uint32_t j = 0; j < k; ++j)
                if (a[i * k + j] != (i == j ? 1u : 0u)) return false;
        return true;
    };
    auto fixes_vector = [&](const std::vector<std::uint32_t>& a) {
        // Nonzero v with vA = v <=> A - I singular; test by brute force over
        // the p^k vectors (k is tiny here).
        std::uint64_t cnt = 1;
        for (std::uint32_t i = 0; i < k; ++i) cnt *= p;
        for (std::uint64_t vi = 1; vi < cnt; ++vi) {
            std::uint64_t rest = vi;
            std::vector<std::uint32_t> v(k);
            for (std::uint32_t i = 0; i < k; ++i) {
                v[i] = rest % p;
                rest /= p;
            }
            std::vector<std::uint32_t> img(k, 0);
            for (std::uint32_t i = 0; i < k; ++i)
                for (std::uint32_t j = 0; j < k; ++j) img[j] = (img[j] + v[i] * a[i * k + j]) % p;
            if (img == v) return true;
        }
        return false;
    };

    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t rest = code;
        for (std::size_t i = 0; i < cells; ++i) {
            mat[i] = rest % p;
            rest /= p;
        }
        // Multiplicative order exactly m.
        std::vector<std::uint32_t> acc = mat;
        std::uint32_t ord = 1;
        bool invertible = true;
        while (ord <= m && !is_id(acc)) {
            acc = mat_mul(acc, mat);
            ++ord;
            if (ord > m) {
                invertible = false;
                break;
            }
        }
        if (!invertible || ord != m) continue;
        if (fixed_point_free_only) {
            bool ok = true;
            std::vector<std::uint32_t> pw = mat;
            for (std::uint32_t t = 1; t < m && ok; ++t) {
                if (fixes_vector(pw)) ok = false;
                pw = mat_mul(pw, mat);
            }
            if (!ok) continue;
        }
        out.push_back(mat);
        if (out.size() >= max_results) break;
    }
    return out;
}

} // namespace bci
