#include "terracini/polyspace.hpp"

#include <algorithm>
#include <stdexcept>

#include "terracini/errors.hpp"

namespace terracini {

long dim_forms(int n, int d) {
    if (n < 1) throw std::invalid_argument("dim_forms: n must be >= 1");
    if (d < 0) throw std::invalid_argument("dim_forms: d must be >= 0");
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n + d),
                 static_cast<unsigned long>(n));
    if (!b.fits_slong_p()) throw std::overflow_error("dim_forms: result too large");
    return b.get_si();
}

namespace {

void enumerate(int vars_left, int degree_left, MultiIndex& current,
               std::vector<MultiIndex>& out) {
    if (vars_left == 1) {
        current.push_back(degree_left);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int e = degree_left; e >= 0; --e) {
        current.push_back(e);
        enumerate(vars_left - 1, degree_left - e, current, out);
        current.pop_back();
    }
}

} // namespace

MonomialBasis::MonomialBasis(int n, int d) : n_(n), d_(d) {
    if (n < 1) throw std::invalid_argument("MonomialBasis: n must be >= 1");
    if (d < 0) throw std::invalid_argument("MonomialBasis: d must be >= 0");
    MultiIndex current;
    enumerate(n + 1, d, current, order_);
}

std::size_t MonomialBasis::index_of(const MultiIndex& m) const {
    auto it = std::lower_bound(order_.begin(), order_.end(), m,
                               [](const MultiIndex& a, const MultiIndex& b) {
                                   return a > b; // descending lex
                               });
    if (it == order_.end() || *it != m)
        throw std::invalid_argument("MonomialBasis: exponent tuple not in basis");
    return static_cast<std::size_t>(it - order_.begin());
}

std::vector<Rational> eval_row(const MonomialBasis& b, const ProjPoint& p) {
    if (p.dim() != static_cast<std::size_t>(b.n()))
        throw std::invalid_argument("eval_row: point dimension mismatch");
    const auto& c = p.coords();
    std::vector<Rational> row;
    row.reserve(b.size());
    for (const auto& m : b.order()) {
        Rational v(1);
        for (std::size_t i = 0; i < c.size(); ++i)
            if (m[i] > 0) v *= rational_pow(c[i], static_cast<unsigned long>(m[i]));
        row.push_back(std::move(v));
    }
    return row;
}

std::vector<std::vector<Rational>> partial_rows(const MonomialBasis& b, const ProjPoint& p) {
    if (b.d() < 1) throw degree_zero_error("partial_rows: degree must be >= 1");
    if (p.dim() != static_cast<std::size_t>(b.n()))
        throw std::invalid_argument("partial_rows: point dimension mismatch");
    const auto& c = p.coords();
    const std::size_t vars = c.size();

    std::vector<std::vector<Rational>> rows(vars);
    for (std::size_t v = 0; v < vars; ++v) {
        auto& row = rows[v];
        row.reserve(b.size());
        for (const auto& m : b.order()) {
            if (m[v] == 0) {
                row.emplace_back(0);
                continue;
            }
            Rational val(m[v]);
            for (std::size_t i = 0; i < vars; ++i) {
                const int e = i == v ? m[i] - 1 : m[i];
                if (e > 0) val *= rational_pow(c[i], static_cast<unsigned long>(e));
            }
            row.push_back(std::move(val));
        }
    }
    return rows;
}

} // namespace terracini
