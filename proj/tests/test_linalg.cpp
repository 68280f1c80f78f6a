#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "terracini/errors.hpp"
#include "terracini/linalg.hpp"
#include "terracini/rng.hpp"

#include "oracles.hpp"

using namespace terracini;

namespace {

Mat int_matrix(const std::vector<std::vector<long>>& rows, std::size_t cols) {
    std::vector<std::vector<Rational>> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<Rational> r;
        r.reserve(cols);
        for (long v : row) r.emplace_back(v);
        out.push_back(std::move(r));
    }
    return Mat::from_rows(out, cols);
}

Mat random_matrix(SeededRng& rng, std::size_t rows, std::size_t cols, long bound,
                  bool with_fractions = false) {
    std::vector<Rational> entries;
    entries.reserve(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i) {
        Rational q(rng.uniform(-bound, bound));
        if (with_fractions && rng.coin()) q /= Rational(rng.uniform(1, 7));
        entries.push_back(std::move(q));
    }
    return Mat(rows, cols, std::move(entries));
}

} // namespace

TEST_CASE("rank on the named small cases") {
    CHECK(rank(identity_mat(3)) == 3);
    CHECK(rank(int_matrix({{1, 2}, {2, 4}}, 2)) == 1);
    CHECK(rank(Mat(0, 5, {})) == 0);
    CHECK(rank(Mat(5, 0, {})) == 0);
}

TEST_CASE("kernel basis on the named small cases") {
    CHECK(kernel_basis(identity_mat(2)).empty());

    const Mat m = int_matrix({{1, -1}}, 2);
    const auto basis = kernel_basis(m);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0][0] == basis[0][1]); // proportional to (1, 1)
    CHECK(basis[0][0] != 0);
}

TEST_CASE("kernel vectors satisfy m*v = 0 exactly and count cols - rank") {
    SeededRng rng(11);
    for (int it = 0; it < 40; ++it) {
        const std::size_t rows = 1 + rng.below(6);
        const std::size_t cols = 1 + rng.below(7);
        const Mat m = random_matrix(rng, rows, cols, 5, true);
        const auto basis = kernel_basis(m);
        CHECK(basis.size() == cols - rank(m));
        for (const auto& v : basis) {
            const auto image = mat_vec(m, v);
            for (const auto& c : image) CHECK(c == 0);
        }
    }
}

TEST_CASE("rank agrees with the minor-expansion oracle up to 6x6") {
    SeededRng rng(23);
    for (int it = 0; it < 60; ++it) {
        const std::size_t rows = 1 + rng.below(6);
        const std::size_t cols = 1 + rng.below(6);
        // small integer entries, with some all-zero and rank-1 patterns mixed in
        Mat m = random_matrix(rng, rows, cols, 3);
        CHECK(rank(m) == oracles::minor_rank(m));
    }
    // deliberately rank-deficient: outer product
    SeededRng rng2(5);
    for (int it = 0; it < 10; ++it) {
        std::vector<Rational> u, v;
        for (int i = 0; i < 5; ++i) u.emplace_back(rng2.uniform(-4, 4));
        for (int j = 0; j < 6; ++j) v.emplace_back(rng2.uniform(-4, 4));
        std::vector<Rational> entries;
        for (const auto& a : u)
            for (const auto& b : v) entries.push_back(a * b);
        const Mat m(5, 6, std::move(entries));
        CHECK(rank(m) == oracles::minor_rank(m));
    }
}

TEST_CASE("rank invariances: permutation and row scaling") {
    SeededRng rng(37);
    for (int it = 0; it < 25; ++it) {
        const std::size_t rows = 2 + rng.below(5);
        const std::size_t cols = 2 + rng.below(5);
        const Mat m = random_matrix(rng, rows, cols, 6, true);
        const std::size_t base = rank(m);

        std::vector<std::vector<Rational>> shuffled(rows, std::vector<Rational>(cols));
        std::vector<std::size_t> perm(rows);
        for (std::size_t i = 0; i < rows; ++i) perm[i] = i;
        for (std::size_t i = rows; i > 1; --i)
            std::swap(perm[i - 1], perm[rng.below(i)]);
        for (std::size_t i = 0; i < rows; ++i) {
            Rational scale(rng.uniform(1, 9));
            if (rng.coin()) scale = -scale;
            for (std::size_t j = 0; j < cols; ++j)
                shuffled[i][j] = scale * m.at(perm[i], j);
        }
        CHECK(rank(Mat::from_rows(shuffled, cols)) == base);
    }
}

TEST_CASE("rank_mod_p basics") {
    CHECK(rank_mod_p(identity_mat(3), 7) == 3);
    CHECK(rank_mod_p(int_matrix({{1, 2}, {2, 4}}, 2), 5) == 1);

    // a denominator divisible by p
    Mat bad(1, 2, {Rational(1, 7), Rational(1)});
    CHECK_THROWS_AS(rank_mod_p(bad, 7), bad_prime_error);
}

TEST_CASE("rank_mod_p never exceeds the exact rank, and usually matches") {
    SeededRng rng(101);
    const Mat m = random_matrix(rng, 20, 21, 50);
    const std::size_t exact = rank(m);
    int matches = 0;
    for (int it = 0; it < 3; ++it) {
        const std::uint64_t p = random_prime_30bit(rng);
        const std::size_t modular = rank_mod_p(m, p);
        CHECK(modular <= exact);
        if (modular == exact) ++matches;
    }
    CHECK(matches >= 2);
}

TEST_CASE("rank drops mod p on a matrix built to degenerate") {
    // row2 = row1 + p * e1: dependent mod p only
    const std::uint64_t p = 1000003;
    Mat m = int_matrix({{1, 2}, {1 + static_cast<long>(p), 2}}, 2);
    CHECK(rank(m) == 2);
    CHECK(rank_mod_p(m, p) == 1);
}

TEST_CASE("invert and mat_mul round trip") {
    SeededRng rng(55);
    for (int it = 0; it < 10; ++it) {
        Mat m = random_matrix(rng, 4, 4, 9);
        auto inv = invert(m);
        if (!inv) continue;
        const Mat prod = mat_mul(m, *inv);
        CHECK(prod.entries() == identity_mat(4).entries());
    }
}
