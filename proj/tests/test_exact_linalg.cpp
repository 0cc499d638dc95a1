#include <doctest.h>

#include "polytype/exact_linalg.hpp"
#include "polytype/cone_geometry.hpp"
#include "polytype/presentation.hpp"

#include <vector>

using namespace polytype;

namespace {

// Independent determinant oracle: cofactor expansion along the first row.
Int cofactor_determinant(const IntegerMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Int det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        IntegerMatrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Int> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        Int term = m[0][c] * cofactor_determinant(minor);
        det += (c % 2 == 0) ? term : -term;
    }
    return det;
}

IntegerMatrix random_matrix(std::size_t rows, std::size_t cols, SplitLcg& rng) {
    IntegerMatrix m(rows, std::vector<Int>(cols));
    for (auto& row : m)
        for (auto& v : row) v = static_cast<int>(rng.next() % 19) - 9;
    return m;
}

}  // namespace

TEST_CASE("bareiss determinant on fixed matrices") {
    CHECK(bareiss_determinant({}) == 1);
    CHECK(bareiss_determinant({{5}}) == 5);
    CHECK(bareiss_determinant({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 1);
    CHECK(bareiss_determinant({{2, 1}, {1, 2}}) == 3);
    CHECK(bareiss_determinant({{0, 1}, {1, 0}}) == -1);
    CHECK(bareiss_determinant({{1, 2}, {2, 4}}) == 0);
    CHECK_THROWS_AS(bareiss_determinant({{1, 2, 3}, {4, 5, 6}}), std::invalid_argument);
}

TEST_CASE("bareiss matches cofactor expansion on random matrices") {
    SplitLcg rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng.next() % 5;
        const auto m = random_matrix(n, n, rng);
        CHECK(bareiss_determinant(m) == cofactor_determinant(m));
    }
}

TEST_CASE("det certificate rows for (7,3,2) have determinant -7000") {
    const auto det = det_certificate(FamilyParams{7, 3, 2});
    CHECK(det == 7000);
    CHECK(det == Int(7) * pow(Int(5), 3) * pow(Int(2), 3));
}

TEST_CASE("integer rank on fixed matrices") {
    CHECK(integer_rank({}) == 0);
    CHECK(integer_rank({{0, 0}, {0, 0}}) == 0);
    CHECK(integer_rank({{1, 2}, {2, 4}}) == 1);
    CHECK(integer_rank({{1, 0}, {0, 1}, {1, 1}}) == 2);
}

TEST_CASE("facet contact vectors of the (7,3,2) nu normal have rank 6") {
    const FamilyParams p{7, 3, 2};
    const auto base = enumerate_base(build_family_presentation(p));
    const auto nu = nu_normal(p, 0);
    IntegerMatrix contact;
    for (const auto& x : base)
        if (pairing(x, nu) == 0) contact.emplace_back(x.begin(), x.end());
    CHECK(contact.size() > 6);
    CHECK(integer_rank(contact) == 6);
}

TEST_CASE("rank equals the size of the largest nonzero minor") {
    SplitLcg rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 1 + rng.next() % 4;
        const std::size_t cols = 1 + rng.next() % 4;
        const auto m = random_matrix(rows, cols, rng);

        std::size_t largest = 0;
        const std::size_t bound = std::min(rows, cols);
        for (std::size_t size = 1; size <= bound; ++size) {
            bool found = false;
            std::vector<std::size_t> rsel(size), csel(size);
            auto pick = [&](auto&& self, std::vector<std::size_t>& sel, std::size_t limit,
                            std::size_t pos, std::size_t start, auto&& inner) -> void {
                if (pos == size) {
                    inner();
                    return;
                }
                for (std::size_t v = start; v + (size - pos) <= limit + 1; ++v) {
                    sel[pos] = v;
                    self(self, sel, limit, pos + 1, v + 1, inner);
                }
            };
            pick(pick, rsel, rows - 1, 0, 0, [&] {
                pick(pick, csel, cols - 1, 0, 0, [&] {
                    if (found) return;
                    IntegerMatrix sub(size, std::vector<Int>(size));
                    for (std::size_t a = 0; a < size; ++a)
                        for (std::size_t b = 0; b < size; ++b)
                            sub[a][b] = m[rsel[a]][csel[b]];
                    if (cofactor_determinant(sub) != 0) found = true;
                });
            });
            if (found) largest = size;
        }
        CHECK(integer_rank(m) == largest);
    }
}

TEST_CASE("kernel vector on fixed matrices") {
    CHECK(kernel_vector({{1, 0, 0}, {0, 1, 0}}) == std::vector<Int>{0, 0, 1});
    CHECK(kernel_vector({{1, 1}, {1, -1}}) == std::nullopt);
    CHECK(kernel_vector({{2, 4}}) == std::vector<Int>{-2, 1});
}

TEST_CASE("kernel vectors are primitive annihilators") {
    SplitLcg rng(5150);
    int found = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t cols = 2 + rng.next() % 3;
        const std::size_t rows = 1 + rng.next() % (cols - 1);
        const auto m = random_matrix(rows, cols, rng);
        const auto v = kernel_vector(m);
        REQUIRE(v.has_value());
        ++found;
        bool nonzero = false;
        for (const auto& c : *v) nonzero |= c != 0;
        CHECK(nonzero);
        Int g = 0;
        for (const auto& c : *v) g = gcd(g, c);
        CHECK(g == 1);
        for (const auto& row : m) {
            Int s = 0;
            for (std::size_t c = 0; c < cols; ++c) s += row[c] * (*v)[c];
            CHECK(s == 0);
        }
    }
    CHECK(found == 60);
}

TEST_CASE("hermite basis on fixed inputs") {
    CHECK(hermite_basis({{1, 0}, {0, 1}}).basis == IntegerMatrix{{1, 0}, {0, 1}});
    CHECK(hermite_basis({{2, 0}, {0, 2}, {1, 1}}).basis == IntegerMatrix{{1, 1}, {0, 2}});
    CHECK(hermite_basis({{-3}}).basis == IntegerMatrix{{3}});
    CHECK(hermite_basis({{0, 0}, {0, 0}}).basis.empty());
}

TEST_CASE("hermite basis of the (3,1,1) base lattice") {
    const auto base = enumerate_base(build_family_presentation(FamilyParams{3, 1, 1}));
    IntegerMatrix rows;
    for (const auto& b : base) rows.emplace_back(b.begin(), b.end());
    const auto hnf = hermite_basis(rows);
    CHECK(hnf.ambient_dim == 3);
    CHECK(hnf.basis == IntegerMatrix{{1, 0, 2}, {0, 1, 2}, {0, 0, 3}});
}

TEST_CASE("hermite basis is idempotent and spans its generators") {
    SplitLcg rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t rows = 1 + rng.next() % 4;
        const std::size_t cols = 1 + rng.next() % 4;
        const auto m = random_matrix(rows, cols, rng);
        const auto hnf = hermite_basis(m);
        CHECK(hermite_basis(hnf.basis).basis == hnf.basis);
        for (const auto& row : m) CHECK(lattice_contains(hnf, row));
        for (const auto& a : hnf.basis)
            for (const auto& b : hnf.basis) {
                std::vector<Int> sum(cols);
                for (std::size_t c = 0; c < cols; ++c) sum[c] = a[c] + b[c];
                CHECK(lattice_contains(hnf, sum));
            }
    }
}

TEST_CASE("lattice membership rejects vectors outside the span") {
    const auto hnf = hermite_basis({{2, 0}, {0, 2}, {1, 1}});
    CHECK(lattice_contains(hnf, {0, 0}));
    CHECK(lattice_contains(hnf, {1, 1}));
    CHECK(lattice_contains(hnf, {2, 0}));
    CHECK(lattice_contains(hnf, {-1, 1}));
    CHECK_FALSE(lattice_contains(hnf, {1, 0}));
    CHECK_FALSE(lattice_contains(hnf, {0, 1}));
    CHECK_THROWS_AS(lattice_contains(hnf, {1, 0, 0}), std::invalid_argument);
}
