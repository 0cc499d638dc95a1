#pragma once

// The cone R+A of a family presentation: the nu + axis normal list, the
// (i+1)(n-i) extremal rays, the irreducible-representation certificate
// and the determinant identity |det C| = n (n-j)^i j^(n-i-1).

#include "polytype/exact_linalg.hpp"
#include "polytype/presentation.hpp"
#include "polytype/rational_lp.hpp"

#include <set>
#include <string>
#include <vector>

namespace polytype {

struct NormalVector {
    enum class Kind { Nu, CanonicalAxis };
    Kind kind = Kind::CanonicalAxis;
    int axis = 0;   // 1-indexed, CanonicalAxis only
    int shift = 0;  // t in nu^j_{sigma^t[i]}, Nu only
    std::vector<int> coords;
};

struct ConeRepresentation {
    int dimension = 0;
    std::vector<NormalVector> normals;  // the set N
    std::vector<ExponentVector> rays;   // the set R
};

inline long long pairing(const ExponentVector& x, const NormalVector& a) {
    long long s = 0;
    for (std::size_t k = 0; k < x.size(); ++k)
        s += static_cast<long long>(x[k]) * a.coords[k];
    return s;
}

/// nu^j_{sigma^t[i]}: -j on the cyclic window {sigma^t(1),...,sigma^t(i)},
/// n-j elsewhere.
inline NormalVector nu_normal(const FamilyParams& p, int t) {
    p.validate();
    if (t < 0 || t > p.n - 1)
        throw std::invalid_argument("nu_normal: 0 <= t <= n-1 required");
    NormalVector nu;
    nu.kind = NormalVector::Kind::Nu;
    nu.shift = t;
    nu.coords.assign(p.n, p.n - p.j);
    for (int k = 1; k <= p.i; ++k) nu.coords[(k - 1 + t) % p.n] = -p.j;
    return nu;
}

inline NormalVector axis_normal(int n, int k) {
    NormalVector a;
    a.kind = NormalVector::Kind::CanonicalAxis;
    a.axis = k;
    a.coords.assign(n, 0);
    a.coords[k - 1] = 1;
    return a;
}

/// Normals {nu^j_{sigma^0[i]}, e_1..e_n}; rays {n e_k : k > i} and
/// {(n-j) e_r + j e_s : r <= i < s}.
inline ConeRepresentation build_cone(const FamilyParams& p) {
    p.validate();
    ConeRepresentation cone;
    cone.dimension = p.n;
    cone.normals.push_back(nu_normal(p, 0));
    for (int k = 1; k <= p.n; ++k) cone.normals.push_back(axis_normal(p.n, k));
    for (int k = p.i + 1; k <= p.n; ++k) {
        ExponentVector ray(p.n, 0);
        ray[k - 1] = p.n;
        cone.rays.push_back(std::move(ray));
    }
    for (int r = 1; r <= p.i; ++r) {
        for (int s = p.i + 1; s <= p.n; ++s) {
            ExponentVector ray(p.n, 0);
            ray[r - 1] = p.n - p.j;
            ray[s - 1] = p.j;
            cone.rays.push_back(std::move(ray));
        }
    }
    return cone;
}

struct IrreducibilityReport {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(std::string what) {
        ok = false;
        failures.push_back(std::move(what));
    }
};

/// Certifies the four ingredients of the irreducible representation:
/// (1) base in every halfspace, (2) rays in the base set, (3) each
/// normal supports a facet (rank n-1 contact among base vectors),
/// (4) no normal is redundant, witnessed by an exact rational point
/// violating only the dropped constraint.
inline IrreducibilityReport verify_irreducible_representation(
    const std::set<ExponentVector>& base, const ConeRepresentation& cone) {
    IrreducibilityReport report;
    if (base.empty()) throw std::invalid_argument("irreducibility check: empty base");
    const int n = cone.dimension;

    const bool all_in_halfspaces = [&] {
        for (const auto& x : base)
            for (const auto& a : cone.normals)
                if (pairing(x, a) < 0) return false;
        return true;
    }();
    if (!all_in_halfspaces) report.fail("(1) base vector outside a halfspace");

    for (const auto& ray : cone.rays)
        if (base.count(ray) == 0) {
            report.fail("(2) extremal ray not in the base set");
            break;
        }

    for (const auto& a : cone.normals) {
        IntegerMatrix contact;
        for (const auto& x : base)
            if (pairing(x, a) == 0)
                contact.emplace_back(x.begin(), x.end());
        if (integer_rank(contact) != static_cast<std::size_t>(n) - 1) {
            report.fail("(3) normal does not support a facet (contact rank != n-1)");
            break;
        }
    }

    // (5) Completeness: reconstruct the extreme rays of {x : Nx >= 0}
    // from all (n-1)-subsets of normals and require the result to be
    // exactly the declared ray set. A missing halfspace would enlarge the
    // cone and surface extra rays here.
    {
        std::set<std::vector<Int>> reconstructed;
        const std::size_t count = cone.normals.size();
        std::vector<std::size_t> sel(n - 1);
        auto consider = [&] {
            IntegerMatrix rows;
            for (auto idx : sel)
                rows.emplace_back(cone.normals[idx].coords.begin(),
                                  cone.normals[idx].coords.end());
            if (integer_rank(rows) != static_cast<std::size_t>(n) - 1) return;
            const auto v = kernel_vector(rows);
            if (!v) return;
            for (int orient = 0; orient < 2; ++orient) {
                std::vector<Int> candidate = *v;
                if (orient == 1)
                    for (auto& c : candidate) c = -c;
                bool inside = true;
                for (const auto& a : cone.normals) {
                    Int s = 0;
                    for (int k = 0; k < n; ++k) s += candidate[k] * a.coords[k];
                    if (s < 0) {
                        inside = false;
                        break;
                    }
                }
                if (inside) reconstructed.insert(std::move(candidate));
            }
        };
        auto choose = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
            if (pos == sel.size()) {
                consider();
                return;
            }
            for (std::size_t idx = start; idx + (sel.size() - pos) <= count; ++idx) {
                sel[pos] = idx;
                self(self, pos + 1, idx + 1);
            }
        };
        choose(choose, 0, 0);

        std::set<std::vector<Int>> declared;
        for (const auto& ray : cone.rays) {
            std::vector<Int> primitive(ray.begin(), ray.end());
            Int g = 0;
            for (const auto& c : primitive) g = gcd(g, c);
            if (g > 1)
                for (auto& c : primitive) c /= g;
            declared.insert(std::move(primitive));
        }
        if (reconstructed != declared)
            report.fail("(5) halfspace description and declared rays disagree");
    }

    for (std::size_t drop = 0; drop < cone.normals.size(); ++drop) {
        std::vector<LinearConstraint> constraints;
        for (std::size_t idx = 0; idx < cone.normals.size(); ++idx) {
            LinearConstraint c;
            c.coeffs.assign(cone.normals[idx].coords.begin(),
                            cone.normals[idx].coords.end());
            if (idx == drop) {
                c.rel = Rel::Le;
                c.rhs = -1;
            } else {
                c.rel = Rel::Ge;
                c.rhs = 0;
            }
            constraints.push_back(std::move(c));
        }
        if (!find_rational_point(n, constraints, /*nonnegative=*/false)) {
            report.fail("(4) redundant normal at index " + std::to_string(drop));
            break;
        }
    }

    return report;
}

/// |det C| for the rows {J_1..J_i, J_{i+2}..J_n, J} with
/// J_k = (n-j) e_k + j e_{i+1}, J_r = (n-j) e_1 + j e_r, J = n e_n.
/// Checked against the closed form n (n-j)^i j^(n-i-1).
inline Int det_certificate(const FamilyParams& p) {
    p.validate();
    IntegerMatrix c;
    for (int k = 1; k <= p.i; ++k) {
        std::vector<Int> row(p.n, 0);
        row[k - 1] = p.n - p.j;
        row[p.i] = p.j;
        c.push_back(std::move(row));
    }
    for (int r = p.i + 2; r <= p.n; ++r) {
        std::vector<Int> row(p.n, 0);
        row[0] = p.n - p.j;
        row[r - 1] = p.j;
        c.push_back(std::move(row));
    }
    std::vector<Int> last(p.n, 0);
    last[p.n - 1] = p.n;
    c.push_back(std::move(last));

    Int det = abs(bareiss_determinant(c));
    Int closed = Int(p.n) * pow(Int(p.n - p.j), p.i) * pow(Int(p.j), p.n - p.i - 1);
    if (det != closed)
        throw std::logic_error("det certificate mismatch (internal inconsistency)");
    return det;
}

/// Strict inequality on every normal of the irreducible representation.
inline bool in_relative_interior(const ExponentVector& x, const ConeRepresentation& cone) {
    if (static_cast<int>(x.size()) != cone.dimension)
        throw std::invalid_argument("relative interior: dimension mismatch");
    for (const auto& a : cone.normals)
        if (pairing(x, a) <= 0) return false;
    return true;
}

}  // namespace polytype
