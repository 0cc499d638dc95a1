#pragma once

// Exact integer linear algebra: Bareiss determinants, rank over Q,
// Hermite normal form and lattice membership. Everything is
// arbitrary-precision; matrices here are tiny, so clarity wins over
// asymptotics.

#include "polytype/integers.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace polytype {

using IntegerMatrix = std::vector<std::vector<Int>>;

inline std::size_t row_count(const IntegerMatrix& m) { return m.size(); }

inline std::size_t col_count(const IntegerMatrix& m) {
    return m.empty() ? 0 : m.front().size();
}

inline void check_rectangular(const IntegerMatrix& m) {
    for (const auto& row : m)
        if (row.size() != col_count(m))
            throw std::invalid_argument("matrix rows have unequal lengths");
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Int bareiss_determinant(IntegerMatrix m) {
    check_rectangular(m);
    const std::size_t n = row_count(m);
    if (n != col_count(m)) throw std::invalid_argument("determinant of non-square matrix");
    if (n == 0) return 1;

    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            for (std::size_t c = k + 1; c < n; ++c) {
                m[r][c] = (m[k][k] * m[r][c] - m[r][k] * m[k][c]) / prev;
            }
            m[r][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Rank over the rationals via fraction-free elimination.
inline std::size_t integer_rank(IntegerMatrix m) {
    check_rectangular(m);
    const std::size_t rows = row_count(m);
    const std::size_t cols = col_count(m);
    std::size_t rank = 0;
    Int prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c)
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

/// A nonzero integer kernel vector of m (primitive: gcd of entries 1),
/// or nothing when the kernel is trivial. Deterministic: the first free
/// column of the reduced echelon form is set to 1.
inline std::optional<std::vector<Int>> kernel_vector(const IntegerMatrix& m) {
    check_rectangular(m);
    const std::size_t rows = row_count(m);
    const std::size_t cols = col_count(m);
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = m[r][c];

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t p = rank;
        while (p < rows && a[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[rank], a[p]);
        const Rat inv = a[rank][col];
        for (std::size_t c = col; c < cols; ++c) a[rank][c] /= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            const Rat f = a[r][col];
            for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::size_t free_col = cols;
    for (std::size_t col = 0; col < cols; ++col) {
        bool is_pivot = false;
        for (auto pc : pivot_col) is_pivot |= pc == col;
        if (!is_pivot) {
            free_col = col;
            break;
        }
    }
    if (free_col == cols) return std::nullopt;

    std::vector<Rat> x(cols, 0);
    x[free_col] = 1;
    for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = -a[r][free_col];

    Int lcm = 1;
    for (const auto& v : x) lcm = boost::multiprecision::lcm(lcm, denominator(v));
    std::vector<Int> out(cols);
    for (std::size_t c = 0; c < cols; ++c)
        out[c] = numerator(x[c]) * (lcm / denominator(x[c]));
    Int g = 0;
    for (const auto& v : out) g = boost::multiprecision::gcd(g, v);
    if (g > 1)
        for (auto& v : out) v /= g;
    return out;
}

/// Basis of a sublattice of Z^n in row-style Hermite normal form:
/// pivot columns strictly increasing, pivots positive, entries above a
/// pivot reduced into [0, pivot).
struct LatticeBasis {
    std::size_t ambient_dim = 0;
    IntegerMatrix basis;  // independent rows, HNF
};

/// HNF basis of the lattice generated by the given integer vectors.
inline LatticeBasis hermite_basis(IntegerMatrix vectors) {
    check_rectangular(vectors);
    const std::size_t cols = col_count(vectors);
    LatticeBasis out;
    out.ambient_dim = cols;
    if (vectors.empty()) return out;

    std::size_t top = 0;  // rows [0, top) are finished pivot rows
    for (std::size_t col = 0; col < cols; ++col) {
        // Reduce all entries below `top` in this column to a single one
        // by repeated Euclidean row steps.
        while (true) {
            std::size_t p = row_count(vectors);
            for (std::size_t r = top; r < row_count(vectors); ++r)
                if (vectors[r][col] != 0 &&
                    (p == row_count(vectors) ||
                     abs(vectors[r][col]) < abs(vectors[p][col])))
                    p = r;
            if (p == row_count(vectors)) break;
            std::swap(vectors[top], vectors[p]);
            bool others = false;
            for (std::size_t r = top + 1; r < row_count(vectors); ++r) {
                if (vectors[r][col] == 0) continue;
                Int q = vectors[r][col] / vectors[top][col];
                for (std::size_t c = 0; c < cols; ++c)
                    vectors[r][c] -= q * vectors[top][c];
                if (vectors[r][col] != 0) others = true;
            }
            if (!others) break;
        }
        if (top < row_count(vectors) && vectors[top][col] != 0) {
            if (vectors[top][col] < 0)
                for (auto& v : vectors[top]) v = -v;
            // Reduce entries above the pivot into [0, pivot).
            for (std::size_t r = 0; r < top; ++r) {
                Int q = vectors[r][col] / vectors[top][col];
                if (vectors[r][col] - q * vectors[top][col] < 0) q -= 1;
                if (q != 0)
                    for (std::size_t c = 0; c < cols; ++c)
                        vectors[r][c] -= q * vectors[top][c];
            }
            ++top;
        }
    }
    vectors.resize(top);
    out.basis = std::move(vectors);
    return out;
}

/// True iff x is an integer combination of the basis rows
/// (back-substitution against the HNF).
inline bool lattice_contains(const LatticeBasis& basis, std::vector<Int> x) {
    if (x.size() != basis.ambient_dim)
        throw std::invalid_argument("lattice_contains: dimension mismatch");
    std::size_t row = 0;
    for (std::size_t col = 0; col < basis.ambient_dim; ++col) {
        bool has_pivot = row < basis.basis.size() && basis.basis[row][col] != 0;
        if (!has_pivot) {
            if (x[col] != 0) return false;
            continue;
        }
        const Int& pivot = basis.basis[row][col];
        if (x[col] % pivot != 0) return false;
        Int q = x[col] / pivot;
        if (q != 0)
            for (std::size_t c = col; c < basis.ambient_dim; ++c)
                x[c] -= q * basis.basis[row][c];
        ++row;
    }
    return true;
}

}  // namespace polytype
