#pragma once

#include <cstddef>
#include <vector>

#include "terracini/polyspace.hpp"
#include "terracini/rational.hpp"
#include "terracini/scheme.hpp"

namespace terracini {

/// Homogeneous form of fixed degree in two variables,
/// f(x,y) = sum_k c[k] x^(deg-k) y^k. The zero form of a given degree is the
/// all-zero coefficient list (degree bookkeeping stays intact through ring
/// arithmetic, which the Sylvester determinant relies on).
struct BinaryForm {
    std::vector<Rational> c;

    explicit BinaryForm(int degree) : c(static_cast<std::size_t>(degree) + 1, Rational(0)) {}
    explicit BinaryForm(std::vector<Rational> coeffs) : c(std::move(coeffs)) {}

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const;
    Rational eval(const Rational& x, const Rational& y) const;

    bool operator==(const BinaryForm& o) const { return c == o.c; }
};

BinaryForm add(const BinaryForm& a, const BinaryForm& b);
BinaryForm sub(const BinaryForm& a, const BinaryForm& b);
BinaryForm mul(const BinaryForm& a, const BinaryForm& b);

/// Homogeneous ternary form: coefficients over MonomialBasis(2, degree) in
/// its deg-lex order.
struct TernaryForm {
    int degree;
    std::vector<Rational> coeffs;
};

Rational evaluate(const TernaryForm& f, const ProjPoint& p);

/// Classical Sylvester resultant of two ternary forms with respect to the
/// variable `eliminated` (0, 1 or 2), taken at their actual degrees in that
/// variable; the result is a binary form in the remaining two variables (in
/// increasing index order), of degree deg(f)*deg(g) for fully general input.
/// It vanishes at (a:b) iff f and g share a projective zero above (a:b) (for
/// generic input), and vanishes identically iff they share a factor. Throws
/// zero_form_error on identically zero input.
BinaryForm resultant(const TernaryForm& f, const TernaryForm& g, int eliminated);

/// Divides out one linear factor per listed root (roots are points of P^1).
/// Each root is checked exactly first; throws not_a_root_error naming the
/// offending root otherwise.
BinaryForm deflate_roots(const BinaryForm& f, const std::vector<ProjPoint>& known);

/// Monic gcd of univariate rational polynomials (coefficients by ascending
/// power); the zero polynomial is an empty vector.
std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b);

/// Substitutes fixed values for the two non-eliminated variables, leaving a
/// univariate polynomial in the eliminated one (ascending coefficients).
std::vector<Rational> univariate_slice(const TernaryForm& f, int var,
                                       const Rational& u_val, const Rational& v_val);

} // namespace terracini
