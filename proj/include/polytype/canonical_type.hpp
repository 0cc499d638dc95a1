#pragma once

// Canonical module of the base ring: the closed-form generator sets M /
// M', Cohen-Macaulay type, a-invariant and Gorenstein predicate, plus
// the brute-force Danilov-Stanley search (affine-semigroup membership by
// memoized descent, relative-interior filter, minimal-generator sieve).

#include "polytype/cone_geometry.hpp"
#include "polytype/presentation.hpp"

#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace polytype {

/// Largest degree of a minimal canonical-module generator. In the
/// i+j <= n-1 case a degree-s interior vector with nu-pairing n(n-i-j-t)
/// reduces by a base vector exactly when t <= j(s-2), so minimal
/// generators survive up to s = 1 + ceil((n-i-j-1)/j); in the i+j >= n
/// case every generator sits in degree r.
inline int max_generator_degree(const FamilyParams& p) {
    p.validate();
    if (p.family_case() == FamilyCase::HighSum) return p.r();
    if (p.j == p.n - p.i - 1) return 1;
    return 1 + static_cast<int>(ceil_div(p.n - p.i - p.j - 1, p.j));
}

/// Closed-form Cohen-Macaulay type: counts the minimal generators per
/// degree s and pairing parameter t by stars and bars (empty sums and
/// out-of-range binomials contribute 0).
inline Int type_formula(const FamilyParams& p) {
    p.validate();
    const int n = p.n, i = p.i, j = p.j;
    if (p.family_case() == FamilyCase::LowSum) {
        Int type = 1;
        for (int s = 2;; ++s) {
            const int lo = j * (s - 2) + 1;
            if (lo > n - i - j - 1) break;
            for (int t = lo; t <= n - i - j - 1; ++t)
                type += binomial((n - j) * (s - 1) + i + t - 1, i - 1) *
                        binomial(n + j * (s - 1) - i - t - 1, n - i - 1);
        }
        return type;
    }
    const int r = p.r();
    Int type = 0;
    for (int t = 1; t <= r * (n - j) - i; ++t)
        type += binomial(static_cast<long long>(r) * (n - j) - t - 1, i - 1) *
                binomial(static_cast<long long>(r) * j + t - 1, n - i - 1);
    return type;
}

inline int a_invariant(const FamilyParams& p) {
    p.validate();
    return p.family_case() == FamilyCase::LowSum ? -1 : -p.r();
}

inline bool is_gorenstein(const FamilyParams& p) {
    p.validate();
    return p.j == p.n - p.i - 1;
}

struct CanonicalGenerators {
    std::vector<ExponentVector> generators;  // lexicographically sorted
    std::map<ExponentVector, int> degrees;   // |g| / n

    int min_degree() const {
        int d = 0;
        for (const auto& [g, deg] : degrees)
            if (d == 0 || deg < d) d = deg;
        return d;
    }
    int max_degree() const {
        int d = 0;
        for (const auto& [g, deg] : degrees)
            if (deg > d) d = deg;
        return d;
    }
};

namespace detail {

/// Compositions of `total` into `parts` parts, each >= `minimum`.
template <typename Fn>
void for_each_composition(int parts, int total, int minimum, Fn&& fn) {
    std::vector<int> x(parts, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == parts - 1) {
            if (remaining < minimum) return;
            x[pos] = remaining;
            fn(x);
            return;
        }
        for (int v = minimum; v <= remaining - minimum * (parts - 1 - pos); ++v) {
            x[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    if (parts > 0 && total >= minimum * parts) rec(rec, 0, total);
}

}  // namespace detail

/// Closed-form generator set of the canonical module: the i+j <= n-1
/// case yields (1,...,1) together with one prefix/suffix split family
/// per surviving (s, t) pair (t > j(s-2)); the i+j >= n case yields the
/// degree-r splits. Cardinality equals type_formula.
inline CanonicalGenerators enumerate_M(const FamilyParams& p) {
    p.validate();
    const int n = p.n, i = p.i, j = p.j;
    CanonicalGenerators out;

    auto add_split = [&](int prefix_total, int suffix_total, int degree) {
        detail::for_each_composition(i, prefix_total, 1, [&](const std::vector<int>& pre) {
            detail::for_each_composition(
                n - i, suffix_total, 1, [&](const std::vector<int>& suf) {
                    ExponentVector g = pre;
                    g.insert(g.end(), suf.begin(), suf.end());
                    out.degrees.emplace(std::move(g), degree);
                });
        });
    };

    if (p.family_case() == FamilyCase::LowSum) {
        out.degrees.emplace(ExponentVector(n, 1), 1);
        for (int s = 2;; ++s) {
            const int lo = j * (s - 2) + 1;
            if (lo > n - i - j - 1) break;
            for (int t = lo; t <= n - i - j - 1; ++t)
                add_split((n - j) * (s - 1) + i + t, n + j * (s - 1) - i - t, s);
        }
    } else {
        const int r = p.r();
        for (int t = 1; t <= r * (n - j) - i; ++t)
            add_split(r * (n - j) - t, r * j + t, r);
    }
    for (const auto& [g, deg] : out.degrees) out.generators.push_back(g);
    return out;
}

/// Affine-semigroup membership by memoized descent: x is in NA iff x = 0
/// or some base vector b <= x componentwise has x - b in NA. The memo is
/// per-instance; construct one object per presentation.
class SemigroupMembership {
public:
    explicit SemigroupMembership(std::vector<ExponentVector> base)
        : base_(std::move(base)) {
        if (base_.empty()) throw std::invalid_argument("semigroup: empty base");
    }

    explicit SemigroupMembership(const std::set<ExponentVector>& base)
        : SemigroupMembership(std::vector<ExponentVector>(base.begin(), base.end())) {}

    bool contains(const ExponentVector& x) {
        for (int c : x)
            if (c < 0) return false;
        if (coord_sum(x) == 0) return true;
        auto it = memo_.find(x);
        if (it != memo_.end()) return it->second;
        bool found = false;
        ExponentVector y(x.size());
        for (const auto& b : base_) {
            bool dominated = true;
            for (std::size_t k = 0; k < x.size(); ++k) {
                y[k] = x[k] - b[k];
                if (y[k] < 0) {
                    dominated = false;
                    break;
                }
            }
            if (dominated && contains(y)) {
                found = true;
                break;
            }
        }
        memo_.emplace(x, found);
        return found;
    }

private:
    std::vector<ExponentVector> base_;
    std::unordered_map<ExponentVector, bool, detail::VectorHash> memo_;
};

inline bool semigroup_contains(const std::set<ExponentVector>& base,
                               const ExponentVector& x) {
    SemigroupMembership membership(base);
    return membership.contains(x);
}

/// Raised when a minimal generator shows up at the search cap, leaving
/// the generator list inconclusive.
struct SaturationError : std::runtime_error {
    explicit SaturationError(int cap)
        : std::runtime_error("canonical generator found at degree cap " +
                             std::to_string(cap) + "; rerun with a larger cap") {}
};

/// Danilov-Stanley brute force against an arbitrary relative-interior
/// predicate: enumerates W_s = {x : |x| = s n, x in NA, x interior} for
/// s = 1..degree_cap and sieves out the minimal generators.
inline CanonicalGenerators canonical_generators_search(
    const std::set<ExponentVector>& base, int n, int degree_cap,
    const std::function<bool(const ExponentVector&)>& interior) {
    SemigroupMembership membership(base);
    std::set<ExponentVector> module_points;
    std::map<ExponentVector, int> degree_of;
    for (int s = 1; s <= degree_cap; ++s) {
        detail::for_each_composition(n, s * n, 1, [&](const ExponentVector& x) {
            if (!interior(x)) return;
            if (!membership.contains(x)) return;
            module_points.insert(x);
            degree_of.emplace(x, s);
        });
    }

    CanonicalGenerators out;
    for (const auto& x : module_points) {
        bool minimal = true;
        ExponentVector y(x.size());
        for (const auto& b : base) {
            bool nonneg = true;
            for (std::size_t k = 0; k < x.size(); ++k) {
                y[k] = x[k] - b[k];
                if (y[k] < 0) {
                    nonneg = false;
                    break;
                }
            }
            if (nonneg && module_points.count(y)) {
                minimal = false;
                break;
            }
        }
        if (minimal) {
            if (degree_of.at(x) >= degree_cap) throw SaturationError(degree_cap);
            out.generators.push_back(x);
            out.degrees.emplace(x, degree_of.at(x));
        }
    }
    // A full-dimensional normal instance always has a nonzero canonical
    // module, so an empty window means the cap cut off every generator.
    if (out.generators.empty()) throw SaturationError(degree_cap);
    return out;
}

/// Default search cap for family instances: one degree above the
/// largest closed-form generator degree, so saturation is detectable.
inline int default_degree_cap(const FamilyParams& p) {
    return std::max(max_generator_degree(p), 2) + 1;
}

/// Family-instance brute force using the nu + axis facet normals.
inline CanonicalGenerators canonical_generators_bruteforce(const FamilyParams& p,
                                                           int degree_cap = 0) {
    p.validate();
    if (degree_cap <= 0) degree_cap = default_degree_cap(p);
    const auto base = enumerate_base(build_family_presentation(p));
    const auto cone = build_cone(p);
    return canonical_generators_search(
        base, p.n, degree_cap,
        [&](const ExponentVector& x) { return in_relative_interior(x, cone); });
}

/// Lemma-style prefix/suffix degree split of a vector with known nu
/// pairing; validates the hypotheses and the closed-form identities.
inline std::pair<long long, long long> degree_split(const ExponentVector& beta,
                                                    const FamilyParams& p) {
    p.validate();
    if (static_cast<int>(beta.size()) != p.n)
        throw std::invalid_argument("degree split: dimension mismatch");
    const long long total = coord_sum(beta);
    if (total % p.n != 0)
        throw std::invalid_argument("degree split: n must divide |beta|");
    const long long s = total / p.n;

    const auto nu = nu_normal(p, 0);
    const long long h = pairing(beta, nu);
    if (h % p.n != 0)
        throw std::invalid_argument("degree split: nu pairing not a multiple of n");

    long long prefix = 0;
    for (int k = 0; k < p.i; ++k) prefix += beta[k];
    const long long suffix = total - prefix;

    if (p.family_case() == FamilyCase::LowSum) {
        const long long t = p.n - p.i - p.j - h / p.n;
        if (t < 1 || t > p.n - p.i - p.j - 1)
            throw std::invalid_argument(
                "degree split: pairing outside n(n-i-j-t), 1 <= t <= n-i-j-1");
        if (s < 2) throw std::invalid_argument("degree split: s >= 2 required");
        if (prefix != (p.n - p.j) * (s - 1) + p.i + t ||
            suffix != p.n + p.j * (s - 1) - p.i - t)
            throw std::logic_error("degree split identity failed");
    } else {
        const long long r = p.r();
        const long long t = h / p.n;
        if (r < 2) throw std::invalid_argument("degree split: r >= 2 required");
        if (t < 1 || t > r * (p.n - p.j) - p.i)
            throw std::invalid_argument(
                "degree split: pairing outside nt, 1 <= t <= r(n-j)-i");
        if (s < r) throw std::invalid_argument("degree split: s >= r required");
        if (prefix != (p.n - p.j) * s - t || suffix != p.j * s + t)
            throw std::logic_error("degree split identity failed");
    }
    return {prefix, suffix};
}

}  // namespace polytype
