#pragma once

// Exact rational linear feasibility (phase-1 simplex with Bland's rule).
// Used for the cone irreducibility certificates and as the independent
// membership oracle for scaled base polytopes. Problems here have at most
// a dozen rows, so the dense tableau is fine.

#include "polytype/integers.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace polytype {

enum class Rel { Eq, Ge, Le };

struct LinearConstraint {
    std::vector<Rat> coeffs;
    Rel rel = Rel::Eq;
    Rat rhs = 0;
};

/// Finds x satisfying every constraint, or nullopt if the system is
/// infeasible. With nonnegative = false the variables are free (split
/// internally into differences of nonnegative parts).
inline std::optional<std::vector<Rat>> find_rational_point(
    std::size_t num_vars, const std::vector<LinearConstraint>& constraints,
    bool nonnegative) {
    const std::size_t m = constraints.size();
    const std::size_t struct_vars = nonnegative ? num_vars : 2 * num_vars;

    std::size_t num_slacks = 0;
    for (const auto& c : constraints)
        if (c.rel != Rel::Eq) ++num_slacks;

    const std::size_t base_cols = struct_vars + num_slacks;
    const std::size_t total_cols = base_cols + m;  // + artificials

    // Tableau rows: [structural | slacks | artificials | rhs].
    std::vector<std::vector<Rat>> tab(m, std::vector<Rat>(total_cols + 1, 0));
    std::vector<std::size_t> basis(m);
    std::size_t slack_at = struct_vars;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = constraints[i];
        if (c.coeffs.size() != num_vars)
            throw std::invalid_argument("constraint arity mismatch");
        for (std::size_t j = 0; j < num_vars; ++j) {
            if (nonnegative) {
                tab[i][j] = c.coeffs[j];
            } else {
                tab[i][2 * j] = c.coeffs[j];
                tab[i][2 * j + 1] = -c.coeffs[j];
            }
        }
        if (c.rel == Rel::Ge) tab[i][slack_at++] = -1;
        if (c.rel == Rel::Le) tab[i][slack_at++] = 1;
        tab[i][total_cols] = c.rhs;
        if (tab[i][total_cols] < 0)
            for (auto& v : tab[i]) v = -v;
        tab[i][base_cols + i] = 1;
        basis[i] = base_cols + i;
    }

    // Phase-1 objective: minimize the sum of artificials. The reduced-cost
    // row starts as the column sums over all rows.
    std::vector<Rat> obj(total_cols + 1, 0);
    for (std::size_t j = 0; j <= total_cols; ++j)
        for (std::size_t i = 0; i < m; ++i) obj[j] += tab[i][j];

    while (true) {
        // Bland: lowest-index non-artificial column with positive reduced cost.
        std::size_t enter = total_cols;
        for (std::size_t j = 0; j < base_cols; ++j)
            if (obj[j] > 0) { enter = j; break; }
        if (enter == total_cols) break;

        std::size_t leave = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (tab[i][enter] <= 0) continue;
            if (leave == m ||
                tab[i][total_cols] * tab[leave][enter] <
                    tab[leave][total_cols] * tab[i][enter] ||
                (tab[i][total_cols] * tab[leave][enter] ==
                     tab[leave][total_cols] * tab[i][enter] &&
                 basis[i] < basis[leave]))
                leave = i;
        }
        if (leave == m) break;  // unreachable in phase 1

        const Rat pivot = tab[leave][enter];
        for (auto& v : tab[leave]) v /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || tab[i][enter] == 0) continue;
            const Rat f = tab[i][enter];
            for (std::size_t j = 0; j <= total_cols; ++j)
                tab[i][j] -= f * tab[leave][j];
        }
        if (obj[enter] != 0) {
            const Rat f = obj[enter];
            for (std::size_t j = 0; j <= total_cols; ++j)
                obj[j] -= f * tab[leave][j];
        }
        basis[leave] = enter;
    }

    if (obj[total_cols] != 0) return std::nullopt;  // artificials stuck > 0

    std::vector<Rat> packed(base_cols, 0);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < base_cols) packed[basis[i]] = tab[i][total_cols];

    std::vector<Rat> x(num_vars, 0);
    for (std::size_t j = 0; j < num_vars; ++j)
        x[j] = nonnegative ? packed[j] : packed[2 * j] - packed[2 * j + 1];
    return x;
}

}  // namespace polytype
