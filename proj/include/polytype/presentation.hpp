#pragma once

// Transversal polymatroid presentations: the (n, i, j) family layout,
// base-set enumeration, the discrete-polymatroid exchange axiom, cyclic
// rotation, and the presentation file format. Ground-set elements are
// 1-indexed externally and live in bitmasks internally.

#include "polytype/integers.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace polytype {

using ExponentVector = std::vector<int>;

inline long long coord_sum(const ExponentVector& x) {
    return std::accumulate(x.begin(), x.end(), 0LL);
}

namespace detail {

struct VectorHash {
    std::size_t operator()(const ExponentVector& v) const {
        std::size_t h = 1469598103934665603ULL;
        for (int c : v) {
            h ^= static_cast<std::size_t>(c);
            h *= 1099511628211ULL;
        }
        return h;
    }
};

}  // namespace detail

enum class FamilyCase { LowSum, HighSum };  // i+j <= n-1 vs i+j >= n

/// The triple (n, i, j) indexing the presentation family.
struct FamilyParams {
    int n = 0;
    int i = 0;
    int j = 0;

    void validate() const {
        if (n < 3) throw std::invalid_argument("family params: n >= 3 required");
        if (i < 1 || i > n - 2)
            throw std::invalid_argument("family params: 1 <= i <= n-2 required");
        if (j < 1 || j > n - 1)
            throw std::invalid_argument("family params: 1 <= j <= n-1 required");
    }

    FamilyCase family_case() const {
        return i + j <= n - 1 ? FamilyCase::LowSum : FamilyCase::HighSum;
    }

    /// r = ceil((i+1)/(n-j)); equals 1 exactly in the LowSum case.
    int r() const { return static_cast<int>(ceil_div(i + 1, n - j)); }
};

/// Ordered list of n nonempty subsets of [n], stored as bitmasks
/// (bit k-1 = ground-set element k).
struct Presentation {
    int n = 0;
    std::vector<std::uint32_t> sets;

    void validate() const {
        if (n < 1 || n > 30) throw std::invalid_argument("presentation: n out of range");
        if (static_cast<int>(sets.size()) != n)
            throw std::invalid_argument("presentation: need exactly n sets");
        const std::uint32_t full = (1u << n) - 1;
        for (auto s : sets) {
            if (s == 0) throw std::invalid_argument("presentation: empty set");
            if (s & ~full) throw std::invalid_argument("presentation: element out of range");
        }
    }
};

inline std::uint32_t full_mask(int n) { return (1u << n) - 1; }

/// [n] \ [i] as a bitmask.
inline std::uint32_t restricted_mask(int n, int i) {
    return full_mask(n) & ~full_mask(i);
}

/// The family layout: LowSum puts [n]\[i] at positions i+1..i+j; HighSum
/// puts it at positions 1..i+j-n and i+1..n.
inline Presentation build_family_presentation(const FamilyParams& p) {
    p.validate();
    Presentation pres;
    pres.n = p.n;
    pres.sets.assign(p.n, full_mask(p.n));
    const std::uint32_t restricted = restricted_mask(p.n, p.i);
    if (p.family_case() == FamilyCase::LowSum) {
        for (int k = p.i + 1; k <= p.i + p.j; ++k) pres.sets[k - 1] = restricted;
    } else {
        for (int k = 1; k <= p.i + p.j - p.n; ++k) pres.sets[k - 1] = restricted;
        for (int k = p.i + 1; k <= p.n; ++k) pres.sets[k - 1] = restricted;
    }
    return pres;
}

/// All vectors sum_k e_{j_k} with j_k in A_k, deduplicated level by level.
inline std::set<ExponentVector> enumerate_base(const Presentation& pres) {
    pres.validate();
    std::set<ExponentVector> frontier{ExponentVector(pres.n, 0)};
    for (auto mask : pres.sets) {
        std::set<ExponentVector> next;
        for (const auto& v : frontier) {
            for (int e = 0; e < pres.n; ++e) {
                if (!(mask >> e & 1)) continue;
                ExponentVector w = v;
                ++w[e];
                next.insert(std::move(w));
            }
        }
        frontier = std::move(next);
    }
    return frontier;
}

/// Closed characterization of the family base: {x >= 0, |x| = n,
/// x_1+...+x_i <= n-j}. Independent of the Cartesian-product path.
inline std::set<ExponentVector> family_base_by_characterization(const FamilyParams& p) {
    p.validate();
    std::set<ExponentVector> out;
    ExponentVector x(p.n, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == p.n - 1) {
            x[pos] = remaining;
            int prefix = 0;
            for (int k = 0; k < p.i; ++k) prefix += x[k];
            if (prefix <= p.n - p.j) out.insert(x);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            x[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, p.n);
    return out;
}

/// Discrete-polymatroid base axiom: equal coordinate sums, and for every
/// u, v and index a with u_a > v_a some b with u_b < v_b and
/// u + e_b - e_a in the set.
inline bool check_exchange_property(const std::set<ExponentVector>& base) {
    if (base.empty()) throw std::invalid_argument("exchange check: empty base");
    const long long degree = coord_sum(*base.begin());
    for (const auto& u : base)
        if (coord_sum(u) != degree) return false;
    const std::unordered_set<ExponentVector, detail::VectorHash> lookup(base.begin(),
                                                                        base.end());
    for (const auto& u : base) {
        for (const auto& v : base) {
            for (std::size_t a = 0; a < u.size(); ++a) {
                if (u[a] <= v[a]) continue;
                bool exchanged = false;
                ExponentVector w = u;
                --w[a];
                for (std::size_t b = 0; b < u.size() && !exchanged; ++b) {
                    if (u[b] >= v[b]) continue;
                    ++w[b];
                    exchanged = lookup.count(w) != 0;
                    --w[b];
                }
                if (!exchanged) return false;
            }
        }
    }
    return true;
}

/// sigma = (1,2,...,n): element k maps to k+1, n maps to 1 (0-indexed:
/// e -> e+1 mod n).
inline std::uint32_t rotate_mask(std::uint32_t mask, int n, int t) {
    std::uint32_t out = 0;
    for (int e = 0; e < n; ++e)
        if (mask >> e & 1) out |= 1u << ((e + t) % n);
    return out;
}

inline ExponentVector rotate_vector(const ExponentVector& x, int t) {
    const int n = static_cast<int>(x.size());
    ExponentVector out(n);
    for (int e = 0; e < n; ++e) out[(e + t) % n] = x[e];
    return out;
}

/// Applies sigma^t to both set positions and set contents; t = 0 is the
/// identity.
inline Presentation rotate_presentation(const Presentation& pres, int t) {
    pres.validate();
    if (t < 0 || t > pres.n - 1)
        throw std::invalid_argument("rotate: 0 <= t <= n-1 required");
    Presentation out;
    out.n = pres.n;
    out.sets.assign(pres.n, 0);
    for (int k = 0; k < pres.n; ++k)
        out.sets[(k + t) % pres.n] = rotate_mask(pres.sets[k], pres.n, t);
    return out;
}

/// Coverage rank of the transversal polymatroid: rank(S) = #{k : A_k
/// meets S}, tabulated for every subset mask of [n].
inline std::vector<int> coverage_rank_table(const Presentation& pres) {
    pres.validate();
    std::vector<int> rank(std::size_t{1} << pres.n, 0);
    for (std::uint32_t s = 0; s < rank.size(); ++s) {
        int r = 0;
        for (auto a : pres.sets) r += (a & s) != 0;
        rank[s] = r;
    }
    return rank;
}

/// File format: first line n, then n lines of space-separated 1-indexed
/// elements.
inline Presentation parse_presentation(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("presentation file: empty");
    Presentation pres;
    {
        std::istringstream head(line);
        if (!(head >> pres.n) || pres.n < 1 || pres.n > 30)
            throw std::invalid_argument("presentation file: bad dimension line");
        std::string extra;
        if (head >> extra) throw std::invalid_argument("presentation file: bad dimension line");
    }
    for (int k = 0; k < pres.n; ++k) {
        if (!std::getline(in, line))
            throw std::invalid_argument("presentation file: expected " +
                                        std::to_string(pres.n) + " set lines");
        std::istringstream row(line);
        std::uint32_t mask = 0;
        int e;
        while (row >> e) {
            if (e < 1 || e > pres.n)
                throw std::invalid_argument("presentation file: element out of range");
            mask |= 1u << (e - 1);
        }
        if (!row.eof()) throw std::invalid_argument("presentation file: non-integer token");
        if (mask == 0) throw std::invalid_argument("presentation file: empty set on line " +
                                                   std::to_string(k + 2));
        pres.sets.push_back(mask);
    }
    while (std::getline(in, line)) {
        std::istringstream rest(line);
        std::string tok;
        if (rest >> tok) throw std::invalid_argument("presentation file: trailing content");
    }
    return pres;
}

inline std::string format_presentation(const Presentation& pres) {
    std::ostringstream out;
    out << pres.n << "\n";
    for (auto mask : pres.sets) {
        bool first = true;
        for (int e = 0; e < pres.n; ++e) {
            if (!(mask >> e & 1)) continue;
            if (!first) out << ' ';
            out << e + 1;
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

/// Deterministic 64-bit linear congruential generator,
/// state' = state * 6364136223846793005 + 1442695040888963407, output =
/// top 32 bits. Fixed here so seeded sweeps reproduce across
/// implementations.
struct SplitLcg {
    std::uint64_t state;
    explicit SplitLcg(std::uint64_t seed) : state(seed) {}
    std::uint32_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<std::uint32_t>(state >> 32);
    }
};

/// Each A_k is a uniformly random nonempty subset of [n]:
/// mask = 1 + (next() mod (2^n - 1)).
inline Presentation random_presentation(int n, SplitLcg& rng) {
    Presentation pres;
    pres.n = n;
    const std::uint32_t span = full_mask(n);  // 2^n - 1 nonempty masks
    for (int k = 0; k < n; ++k) pres.sets.push_back(1 + rng.next() % span);
    return pres;
}

}  // namespace polytype
