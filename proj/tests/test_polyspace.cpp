#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "terracini/errors.hpp"
#include "terracini/linalg.hpp"
#include "terracini/polyspace.hpp"
#include "terracini/rng.hpp"

using namespace terracini;

namespace {

ProjPoint pt(std::vector<long> coords) {
    std::vector<Rational> c;
    c.reserve(coords.size());
    for (long v : coords) c.emplace_back(v);
    return ProjPoint(std::move(c));
}

ProjPoint random_point(SeededRng& rng, int n, long bound = 50) {
    std::vector<Rational> c;
    for (int i = 0; i <= n; ++i) {
        Rational q(rng.uniform(-bound, bound));
        if (rng.coin()) q /= Rational(rng.uniform(1, 9));
        c.push_back(std::move(q));
    }
    bool all_zero = true;
    for (const auto& q : c) all_zero = all_zero && q == 0;
    if (all_zero) c.back() = 1;
    return ProjPoint(std::move(c));
}

} // namespace

TEST_CASE("dim_forms matches the binomial values") {
    CHECK(dim_forms(2, 5) == 21);
    CHECK(dim_forms(2, 6) == 28);
    CHECK(dim_forms(4, 3) == 35);
    CHECK(dim_forms(1, 0) == 1);
    CHECK(dim_forms(3, 2) == 10);
}

TEST_CASE("basis size equals dim_forms across the small range") {
    for (int n = 1; n <= 4; ++n)
        for (int d = 0; d <= 9; ++d)
            CHECK(MonomialBasis(n, d).size() == static_cast<std::size_t>(dim_forms(n, d)));
}

TEST_CASE("basis order is strictly descending deg-lex and indexable") {
    MonomialBasis b(2, 3);
    const auto& order = b.order();
    REQUIRE(order.size() == 10);
    CHECK(order.front() == MultiIndex{3, 0, 0});
    CHECK(order.back() == MultiIndex{0, 0, 3});
    for (std::size_t i = 0; i + 1 < order.size(); ++i) CHECK(order[i] > order[i + 1]);
    for (std::size_t i = 0; i < order.size(); ++i) CHECK(b.index_of(order[i]) == i);
}

TEST_CASE("eval_row on the named cases") {
    {
        MonomialBasis b(2, 2);
        const auto row = eval_row(b, pt({1, 0, 0}));
        REQUIRE(row.size() == 6);
        CHECK(row[0] == 1); // x0^2
        for (std::size_t i = 1; i < row.size(); ++i) CHECK(row[i] == 0);
    }
    {
        MonomialBasis b(1, 1);
        const auto row = eval_row(b, pt({1, 1}));
        CHECK(row == std::vector<Rational>{Rational(1), Rational(1)});
    }
    {
        MonomialBasis b(2, 3);
        const auto row = eval_row(b, pt({1, 1, 1}));
        REQUIRE(row.size() == 10);
        for (const auto& v : row) CHECK(v == 1);
    }
}

TEST_CASE("partial_rows of linear forms are the identity") {
    MonomialBasis b(2, 1);
    const auto rows = partial_rows(b, pt({1, 0, 0}));
    REQUIRE(rows.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(rows[i][j] == (i == j ? 1 : 0));
}

TEST_CASE("partial_rows rejects degree 0") {
    MonomialBasis b(2, 0);
    CHECK_THROWS_AS(partial_rows(b, pt({1, 0, 0})), degree_zero_error);
}

TEST_CASE("three aligned double points at d=3 have rank 7") {
    MonomialBasis b(2, 3);
    std::vector<std::vector<Rational>> rows;
    for (const auto& p : {pt({0, 0, 1}), pt({1, 0, 1}), pt({2, 0, 1})}) {
        for (auto& row : partial_rows(b, p)) rows.push_back(std::move(row));
    }
    REQUIRE(rows.size() == 9);
    CHECK(rank(Mat::from_rows(rows, b.size())) == 7);
}

TEST_CASE("Euler identity: sum p_i * partial_i = d * eval, exactly") {
    SeededRng rng(7);
    for (int it = 0; it < 100; ++it) {
        const int n = 1 + static_cast<int>(rng.below(4));
        const int d = 1 + static_cast<int>(rng.below(6));
        MonomialBasis b(n, d);
        const ProjPoint p = random_point(rng, n);
        const auto value = eval_row(b, p);
        const auto partials = partial_rows(b, p);
        for (std::size_t j = 0; j < b.size(); ++j) {
            Rational acc(0);
            for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i)
                acc += p.coords()[i] * partials[i][j];
            CHECK(acc == Rational(d) * value[j]);
        }
    }
}

TEST_CASE("scaling equivariance through normalization") {
    // ProjPoint normalizes, so rows built from scaled coordinate vectors are
    // bit-identical; rank consumers never see the scale.
    MonomialBasis b(2, 4);
    ProjPoint p(std::vector<Rational>{Rational(3), Rational(-6), Rational(9)});
    ProjPoint q(std::vector<Rational>{Rational(1), Rational(-2), Rational(3)});
    CHECK(eval_row(b, p) == eval_row(b, q));
    CHECK(partial_rows(b, p) == partial_rows(b, q));
}
