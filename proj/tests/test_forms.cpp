#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "terracini/errors.hpp"
#include "terracini/forms.hpp"
#include "terracini/linalg.hpp"
#include "terracini/polyspace.hpp"
#include "terracini/rng.hpp"

using namespace terracini;

namespace {

TernaryForm ternary(int degree, const std::vector<std::pair<MultiIndex, long>>& terms) {
    MonomialBasis basis(2, degree);
    TernaryForm f{degree, std::vector<Rational>(basis.size(), Rational(0))};
    for (const auto& [mono, coeff] : terms) f.coeffs[basis.index_of(mono)] = coeff;
    return f;
}

TernaryForm random_cubic(SeededRng& rng) {
    TernaryForm f{3, {}};
    for (int i = 0; i < 10; ++i) f.coeffs.emplace_back(rng.uniform(-9, 9));
    return f;
}

ProjPoint p1(long a, long b) {
    return ProjPoint(std::vector<Rational>{Rational(a), Rational(b)});
}

} // namespace

TEST_CASE("resultant of coprime linear forms is a nonzero form") {
    const TernaryForm f = ternary(1, {{{1, 0, 0}, 1}}); // x0
    const TernaryForm g = ternary(1, {{{0, 1, 0}, 1}}); // x1
    CHECK_FALSE(resultant(f, g, 2).is_zero());

    // coprime forms that do involve the eliminated variable
    const TernaryForm h = ternary(1, {{{0, 0, 1}, 1}, {{1, 0, 0}, 1}}); // x0 + x2
    const BinaryForm res = resultant(f, h, 2);
    CHECK_FALSE(res.is_zero());
    CHECK(res.degree() == 1);
}

TEST_CASE("resultant vanishes identically on a common factor") {
    const TernaryForm f = ternary(2, {{{2, 0, 0}, 1}});          // x0^2
    const TernaryForm g = ternary(2, {{{1, 1, 0}, 1}});          // x0*x1
    CHECK(resultant(f, g, 2).is_zero());
}

TEST_CASE("resultant rejects the zero form") {
    const TernaryForm z{1, std::vector<Rational>(3, Rational(0))};
    const TernaryForm f = ternary(1, {{{1, 0, 0}, 1}});
    CHECK_THROWS_AS(resultant(z, f, 2), zero_form_error);
}

TEST_CASE("resultant swap symmetry up to (-1)^(deg f * deg g)") {
    SeededRng rng(3);
    for (int it = 0; it < 5; ++it) {
        const TernaryForm f = random_cubic(rng);
        const TernaryForm g = random_cubic(rng);
        const BinaryForm ab = resultant(f, g, 2);
        BinaryForm ba = resultant(g, f, 2);
        // deg f * deg g = 9, odd: swapping flips the sign
        for (auto& c : ba.c) c = -c;
        CHECK(ab == ba);
    }
    for (int it = 0; it < 5; ++it) {
        // conics: 2*2 = 4 even, swapping preserves the sign
        TernaryForm f{2, {}}, g{2, {}};
        for (int i = 0; i < 6; ++i) f.coeffs.emplace_back(rng.uniform(-9, 9));
        for (int i = 0; i < 6; ++i) g.coeffs.emplace_back(rng.uniform(-9, 9));
        bool fz = true, gz = true;
        for (const auto& c : f.coeffs) fz = fz && c == 0;
        for (const auto& c : g.coeffs) gz = gz && c == 0;
        if (fz || gz) continue;
        CHECK(resultant(f, g, 2) == resultant(g, f, 2));
    }
}

TEST_CASE("resultant roots of two random cubics lift to common zeros") {
    // build two cubics through 8 chosen rational points and check that each
    // point's projection is a root of the degree-9 resultant
    std::vector<ProjPoint> eight;
    const long coords[8][2] = {{0, 1}, {1, 0}, {2, 3}, {-1, 4}, {5, 1}, {3, -2}, {7, 2}, {-4, -3}};
    for (const auto& c : coords)
        eight.emplace_back(std::vector<Rational>{Rational(c[0]), Rational(c[1]), Rational(1)});

    MonomialBasis basis(2, 3);
    std::vector<std::vector<Rational>> rows;
    for (const auto& p : eight) rows.push_back(eval_row(basis, p));
    const auto kernel = kernel_basis(Mat::from_rows(rows, basis.size()));
    REQUIRE(kernel.size() == 2);
    const TernaryForm f{3, kernel[0]};
    const TernaryForm g{3, kernel[1]};

    const BinaryForm res = resultant(f, g, 2);
    REQUIRE(res.degree() == 9);
    REQUIRE_FALSE(res.is_zero());
    for (const auto& p : eight)
        CHECK(res.eval(p.coords()[0], p.coords()[1]) == 0);
}

TEST_CASE("deflate_roots divides out known linear factors") {
    // (x - y)(x + y) = x^2 - y^2
    BinaryForm f(2);
    f.c[0] = 1;
    f.c[2] = -1;
    const BinaryForm rest = deflate_roots(f, {p1(1, 1)});
    REQUIRE(rest.degree() == 1);
    // remaining factor proportional to x + y
    CHECK(rest.c[0] == rest.c[1]);
    CHECK(rest.c[0] != 0);
}

TEST_CASE("deflate_roots rejects non-roots, naming them") {
    BinaryForm f(2);
    f.c[0] = 1;
    f.c[2] = -1;
    CHECK_THROWS_AS(deflate_roots(f, {p1(2, 1)}), not_a_root_error);
}

TEST_CASE("deflation handles the root at infinity") {
    // y * (x - y): root (1:0) comes from the y factor
    BinaryForm f(2);
    f.c[1] = 1;
    f.c[2] = -1;
    const BinaryForm rest = deflate_roots(f, {p1(1, 0)});
    REQUIRE(rest.degree() == 1);
    CHECK(rest.eval(Rational(1), Rational(1)) == 0);
}

TEST_CASE("poly_gcd on shared and coprime factors") {
    // (w - 1)(w - 2) and (w - 1)(w + 3): gcd = w - 1, monic
    const std::vector<Rational> a = {Rational(2), Rational(-3), Rational(1)};
    const std::vector<Rational> b = {Rational(-3), Rational(2), Rational(1)};
    const auto g = poly_gcd(a, b);
    REQUIRE(g.size() == 2);
    CHECK(g[1] == 1);
    CHECK(g[0] == -1);

    const std::vector<Rational> c = {Rational(1), Rational(1)}; // w + 1
    const auto g2 = poly_gcd(a, c);
    REQUIRE(g2.size() == 1);
    CHECK(g2[0] == 1);
}

TEST_CASE("univariate_slice matches direct evaluation") {
    SeededRng rng(17);
    for (int it = 0; it < 10; ++it) {
        const TernaryForm f = random_cubic(rng);
        const Rational u(rng.uniform(-5, 5)), v(rng.uniform(-5, 5)), w(rng.uniform(-5, 5));
        if (u == 0 && v == 0 && w == 0) continue;
        const ProjPoint p(std::vector<Rational>{u, v, w});
        // slice at the normalized representative so both sides agree
        const auto slice = univariate_slice(f, 2, p.coords()[0], p.coords()[1]);
        Rational via_slice(0);
        for (std::size_t k = 0; k < slice.size(); ++k)
            via_slice += slice[k] * rational_pow(p.coords()[2], static_cast<unsigned long>(k));
        CHECK(via_slice == evaluate(f, p));
    }
}
