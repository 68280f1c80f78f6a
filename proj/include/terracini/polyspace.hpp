#pragma once

#include <cstddef>
#include <vector>

#include "terracini/rational.hpp"
#include "terracini/scheme.hpp"

namespace terracini {

/// Exponent tuple of a monomial in n+1 variables; entries sum to the degree
/// of the basis it indexes.
using MultiIndex = std::vector<int>;

/// h^0(O_{P^n}(d)) = C(n+d, n).
long dim_forms(int n, int d);

/// Monomial basis of degree-d forms in n+1 variables, deg-lex ordered with
/// x0 > x1 > ... > xn (so x0^d comes first and xn^d last). The order is the
/// coordinate system used by every matrix and coefficient vector in the
/// library; it is fixed so reports are reproducible bit for bit.
class MonomialBasis {
public:
    MonomialBasis(int n, int d);

    int n() const { return n_; }
    int d() const { return d_; }
    std::size_t size() const { return order_.size(); }
    const std::vector<MultiIndex>& order() const { return order_; }

    /// Position of an exponent tuple in the order.
    std::size_t index_of(const MultiIndex& m) const;

private:
    int n_;
    int d_;
    std::vector<MultiIndex> order_;
};

/// Row of all basis monomials evaluated at p: the single linear condition a
/// reduced point imposes on degree-d forms.
std::vector<Rational> eval_row(const MonomialBasis& b, const ProjPoint& p);

/// The n+1 first-partial rows d/dx_i of the basis at p. Their span is the
/// condition space of the double point 2p (characteristic 0: the value row
/// is the Euler combination sum_i p_i * row_i / d, so it is not added
/// separately).
std::vector<std::vector<Rational>> partial_rows(const MonomialBasis& b, const ProjPoint& p);

} // namespace terracini
