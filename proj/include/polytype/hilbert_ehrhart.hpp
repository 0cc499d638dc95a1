#pragma once

// Hilbert function of the family base ring (closed binomial sum), the
// normalized Ehrhart counting oracle (lattice points of dilated base
// polytopes), the finite-difference Hilbert series numerator, and the
// type-vs-numerator conjecture harness.

#include "polytype/canonical_type.hpp"
#include "polytype/cone_geometry.hpp"
#include "polytype/exact_linalg.hpp"
#include "polytype/presentation.hpp"
#include "polytype/rational_lp.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace polytype {

/// Closed-form Hilbert function
/// h(t) = sum_{k=0}^{(n-j)t} C(k+i-1, k) C(nt-k+n-i-1, nt-k).
inline Int hilbert_function(const FamilyParams& p, int t) {
    p.validate();
    if (t < 0) throw std::invalid_argument("hilbert function: t >= 0 required");
    const long long n = p.n, i = p.i, j = p.j;
    Int h = 0;
    for (long long k = 0; k <= (n - j) * t; ++k)
        h += binomial(k + i - 1, k) * binomial(n * t - k + n - i - 1, n * t - k);
    return h;
}

/// Shared exact geometry of one transversal presentation: base set,
/// generated lattice, and the coverage-rank description of the base
/// polytope conv(B) = {x >= 0, |x| = n, x(S) <= rank(S)}.
class PolymatroidGeometry {
public:
    explicit PolymatroidGeometry(Presentation pres)
        : pres_(std::move(pres)), base_(enumerate_base(pres_)) {
        n_ = pres_.n;
        base_list_.assign(base_.begin(), base_.end());
        IntegerMatrix rows;
        for (const auto& b : base_list_) rows.emplace_back(b.begin(), b.end());
        lattice_ = hermite_basis(rows);
        rank_table_ = coverage_rank_table(pres_);
        full_dimensional_ = lattice_.basis.size() == static_cast<std::size_t>(n_);
    }

    int n() const { return n_; }
    const Presentation& presentation() const { return pres_; }
    const std::set<ExponentVector>& base() const { return base_; }
    const std::vector<ExponentVector>& base_list() const { return base_list_; }
    const LatticeBasis& lattice() const { return lattice_; }
    bool full_dimensional() const { return full_dimensional_; }

    bool in_lattice(const ExponentVector& x) const {
        return lattice_contains(lattice_, std::vector<Int>(x.begin(), x.end()));
    }

    /// Membership in t * conv(B) for x with |x| = n t.
    bool in_scaled_polytope(const ExponentVector& x, int t) const {
        if (coord_sum(x) != static_cast<long long>(n_) * t) return false;
        for (int c : x)
            if (c < 0) return false;
        const auto sums = subset_sums(x);
        for (std::size_t s = 1; s + 1 < sums.size(); ++s)
            if (sums[s] > static_cast<long long>(t) * rank_table_[s]) return false;
        return true;
    }

    /// Strict version: relative interior of the (full-dimensional) cone
    /// over conv(B). Valid only when the cone has dimension n.
    bool in_cone_interior(const ExponentVector& x) const {
        const long long total = coord_sum(x);
        for (int c : x)
            if (c <= 0) return false;
        const auto sums = subset_sums(x);
        for (std::size_t s = 1; s + 1 < sums.size(); ++s)
            if (static_cast<long long>(n_) * sums[s] >= rank_table_[s] * total)
                return false;
        return true;
    }

    /// Independent membership route for t * conv(B): exact rational
    /// feasibility of a convex combination over the base vectors.
    bool in_scaled_polytope_lp(const ExponentVector& x, int t) const {
        if (coord_sum(x) != static_cast<long long>(n_) * t) return false;
        std::vector<LinearConstraint> constraints;
        for (int coord = 0; coord < n_; ++coord) {
            LinearConstraint c;
            for (const auto& b : base_list_) c.coeffs.emplace_back(b[coord]);
            c.rel = Rel::Eq;
            c.rhs = x[coord];
            constraints.push_back(std::move(c));
        }
        LinearConstraint total;
        total.coeffs.assign(base_list_.size(), 1);
        total.rel = Rel::Eq;
        total.rhs = t;
        constraints.push_back(std::move(total));
        return find_rational_point(base_list_.size(), constraints, /*nonnegative=*/true)
            .has_value();
    }

    /// |Z log(F) cap t P|.
    Int count_lattice_points(int t) const {
        if (t < 0) throw std::invalid_argument("ehrhart count: t >= 0 required");
        if (t == 0) return 1;
        Int count = 0;
        detail::for_each_composition(n_, n_ * t, 0, [&](const ExponentVector& x) {
            if (in_scaled_polytope(x, t) && in_lattice(x)) ++count;
        });
        return count;
    }

private:
    std::vector<long long> subset_sums(const ExponentVector& x) const {
        std::vector<long long> sums(rank_table_.size(), 0);
        for (std::size_t s = 1; s < sums.size(); ++s) {
            const std::size_t low = s & (~s + 1);
            int bit = 0;
            while (!(low >> bit & 1)) ++bit;
            sums[s] = sums[s ^ low] + x[bit];
        }
        return sums;
    }

    Presentation pres_;
    std::set<ExponentVector> base_;
    std::vector<ExponentVector> base_list_;
    int n_ = 0;
    LatticeBasis lattice_;
    std::vector<int> rank_table_;
    bool full_dimensional_ = false;
};

/// Fast family path: t P is cut out by the prefix-sum constraint
/// x_1+...+x_i <= (n-j) t, so the dilation can be counted with an early
/// cutoff instead of the subset-rank machinery.
inline Int ehrhart_count(const FamilyParams& p, int t) {
    p.validate();
    if (t < 0) throw std::invalid_argument("ehrhart count: t >= 0 required");
    if (t == 0) return 1;
    const int n = p.n;
    const long long prefix_cap = static_cast<long long>(n - p.j) * t;

    const auto geometry = PolymatroidGeometry(build_family_presentation(p));
    // The family lattice is {x : n divides |x|} whenever its HNF matches
    // the canonical basis below; then every enumerated point is a lattice
    // point and the per-point test vanishes.
    IntegerMatrix canonical;
    for (int k = 0; k + 1 < n; ++k) {
        std::vector<Int> row(n, 0);
        row[k] = 1;
        row[n - 1] = n - 1;
        canonical.push_back(std::move(row));
    }
    std::vector<Int> last(n, 0);
    last[n - 1] = n;
    canonical.push_back(std::move(last));
    const bool lattice_is_divisibility = geometry.lattice().basis == canonical;

    Int count = 0;
    ExponentVector x(n, 0);
    auto rec = [&](auto&& self, int pos, long long remaining, long long prefix) -> void {
        if (prefix > prefix_cap) return;
        if (pos == n - 1) {
            x[pos] = static_cast<int>(remaining);
            if (lattice_is_divisibility || geometry.in_lattice(x)) ++count;
            return;
        }
        for (long long v = 0; v <= remaining; ++v) {
            x[pos] = static_cast<int>(v);
            self(self, pos + 1, remaining - v, pos < p.i ? prefix + v : prefix);
        }
    };
    rec(rec, 0, static_cast<long long>(n) * t, 0);
    return count;
}

inline Int ehrhart_count(const Presentation& pres, int t) {
    return PolymatroidGeometry(pres).count_lattice_points(t);
}

/// n-fold finite differences of a Hilbert/Ehrhart value sequence:
/// h_j = sum_{s=0}^{j} (-1)^s h(j-s) C(n, s).
inline std::vector<Int> numerator_from_values(const std::vector<Int>& h_values, int n) {
    std::vector<Int> numerator(h_values.size(), 0);
    for (std::size_t j = 0; j < h_values.size(); ++j)
        for (std::size_t s = 0; s <= j; ++s) {
            Int term = h_values[j - s] * binomial(n, static_cast<long long>(s));
            numerator[j] += (s % 2 == 0) ? term : -term;
        }
    return numerator;
}

/// Hilbert series numerator h_0..h_{n-r} from the closed-form Hilbert
/// function.
inline std::vector<Int> h_vector(const FamilyParams& p) {
    p.validate();
    const int top = p.n - p.r();
    std::vector<Int> values;
    for (int t = 0; t <= top; ++t) values.push_back(hilbert_function(p, t));
    return numerator_from_values(values, p.n);
}

/// "(1 + 6t + t^2)/(1-t)^3" with zero terms omitted.
inline std::string hilbert_series_render(const std::vector<Int>& numerator, int n) {
    std::ostringstream out;
    out << "(";
    bool first = true;
    for (std::size_t k = 0; k < numerator.size(); ++k) {
        const Int& c = numerator[k];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const Int mag = abs(c);
        if (mag != 1 || k == 0) out << mag;
        if (k >= 1) out << "t";
        if (k >= 2) out << "^" << k;
        first = false;
    }
    if (first) out << "0";
    out << ")/(1-t)^" << n;
    std::string body = out.str();
    // A bare unit numerator renders without parentheses.
    if (body.rfind("(1)/", 0) == 0) return "1" + body.substr(3);
    return body;
}

enum class ConjectureStatus { Holds, Violated, Skipped };

inline const char* to_string(ConjectureStatus s) {
    switch (s) {
        case ConjectureStatus::Holds: return "holds";
        case ConjectureStatus::Violated: return "VIOLATED";
        case ConjectureStatus::Skipped: return "skipped";
    }
    return "?";
}

struct ConjectureReport {
    int r = 0;
    Int type_value = 0;
    Int predicted = 0;
    std::vector<Int> numerator;
    ConjectureStatus status = ConjectureStatus::Skipped;
    std::string detail;
};

inline Int conjecture_predicted(const std::vector<Int>& numerator, int n, int r) {
    if (r == 1) return 1 + numerator.at(n - 2) - numerator.at(1);
    return numerator.at(n - r);
}

/// Closed-form route: formulas only, no enumeration.
inline ConjectureReport conjecture_check(const FamilyParams& p) {
    p.validate();
    ConjectureReport report;
    report.r = p.r();
    report.numerator = h_vector(p);
    report.type_value = type_formula(p);
    report.predicted = conjecture_predicted(report.numerator, p.n, report.r);
    report.status = report.type_value == report.predicted ? ConjectureStatus::Holds
                                                          : ConjectureStatus::Violated;
    return report;
}

/// Brute-force route for an arbitrary transversal presentation: type and
/// r from the Danilov-Stanley search, numerator from Ehrhart counts.
/// Presentations with lower-dimensional cones, or whose generator search
/// hits the degree cap, come back Skipped.
inline ConjectureReport conjecture_check(const Presentation& pres, int degree_cap = 0) {
    pres.validate();
    ConjectureReport report;
    const int n = pres.n;
    if (degree_cap <= 0) degree_cap = n + 1;

    PolymatroidGeometry geometry(pres);
    if (!geometry.full_dimensional()) {
        report.status = ConjectureStatus::Skipped;
        report.detail = "cone dimension < n";
        return report;
    }

    CanonicalGenerators gens;
    try {
        gens = canonical_generators_search(
            geometry.base(), n, degree_cap,
            [&](const ExponentVector& x) { return geometry.in_cone_interior(x); });
    } catch (const SaturationError& e) {
        report.status = ConjectureStatus::Skipped;
        report.detail = e.what();
        return report;
    }
    if (gens.generators.empty()) {
        report.status = ConjectureStatus::Skipped;
        report.detail = "no canonical generator up to the degree cap";
        return report;
    }

    report.r = gens.min_degree();
    report.type_value = static_cast<long long>(gens.generators.size());
    std::vector<Int> values;
    for (int t = 0; t <= n - report.r; ++t)
        values.push_back(geometry.count_lattice_points(t));
    report.numerator = numerator_from_values(values, n);
    report.predicted = conjecture_predicted(report.numerator, n, report.r);
    report.status = report.type_value == report.predicted ? ConjectureStatus::Holds
                                                          : ConjectureStatus::Violated;
    return report;
}

}  // namespace polytype
