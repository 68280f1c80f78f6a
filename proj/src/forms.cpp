#include "terracini/forms.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "terracini/errors.hpp"
#include "terracini/linalg.hpp"

namespace terracini {

bool BinaryForm::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Rational& q) { return q == 0; });
}

Rational BinaryForm::eval(const Rational& x, const Rational& y) const {
    const int deg = degree();
    Rational acc(0);
    for (int k = 0; k <= deg; ++k) {
        if (c[static_cast<std::size_t>(k)] == 0) continue;
        acc += c[static_cast<std::size_t>(k)] *
               rational_pow(x, static_cast<unsigned long>(deg - k)) *
               rational_pow(y, static_cast<unsigned long>(k));
    }
    return acc;
}

BinaryForm add(const BinaryForm& a, const BinaryForm& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("BinaryForm add: degree mismatch");
    BinaryForm out(a.degree());
    for (std::size_t k = 0; k < a.c.size(); ++k) out.c[k] = a.c[k] + b.c[k];
    return out;
}

BinaryForm sub(const BinaryForm& a, const BinaryForm& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("BinaryForm sub: degree mismatch");
    BinaryForm out(a.degree());
    for (std::size_t k = 0; k < a.c.size(); ++k) out.c[k] = a.c[k] - b.c[k];
    return out;
}

BinaryForm mul(const BinaryForm& a, const BinaryForm& b) {
    BinaryForm out(a.degree() + b.degree());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j] == 0) continue;
            out.c[i + j] += a.c[i] * b.c[j];
        }
    }
    return out;
}

Rational evaluate(const TernaryForm& f, const ProjPoint& p) {
    MonomialBasis basis(2, f.degree);
    if (f.coeffs.size() != basis.size())
        throw std::invalid_argument("TernaryForm: coefficient count mismatch");
    const auto row = eval_row(basis, p);
    Rational acc(0);
    for (std::size_t i = 0; i < row.size(); ++i) acc += row[i] * f.coeffs[i];
    return acc;
}

namespace {

// f as a polynomial in variable `var`: entry k is the binary-form coefficient
// of var^(deg-k), a form of degree k in the remaining variables (lower index
// first).
std::vector<BinaryForm> coefficients_in_var(const TernaryForm& f, int var) {
    MonomialBasis basis(2, f.degree);
    if (f.coeffs.size() != basis.size())
        throw std::invalid_argument("TernaryForm: coefficient count mismatch");
    const int v = var == 2 ? 1 : 2;

    std::vector<BinaryForm> out;
    out.reserve(static_cast<std::size_t>(f.degree) + 1);
    for (int k = 0; k <= f.degree; ++k) out.emplace_back(k);

    const auto& order = basis.order();
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (f.coeffs[i] == 0) continue;
        const int k = f.degree - order[i][static_cast<std::size_t>(var)];
        const int ypow = order[i][static_cast<std::size_t>(v)];
        out[static_cast<std::size_t>(k)].c[static_cast<std::size_t>(ypow)] += f.coeffs[i];
    }
    return out;
}

// nullopt encodes the zero result, sidestepping degree bookkeeping for
// branches with no surviving permutation. All nonzero terms of one minor are
// homogeneous of the same degree (entry degrees in a Sylvester matrix are
// column minus a per-row offset, so permutation sums are constant).
std::optional<BinaryForm> ring_determinant(const std::vector<std::vector<BinaryForm>>& m,
                                           const std::vector<std::size_t>& rows,
                                           const std::vector<std::size_t>& cols) {
    if (rows.size() == 1) {
        const BinaryForm& e = m[rows[0]][cols[0]];
        if (e.is_zero()) return std::nullopt;
        return e;
    }
    std::optional<BinaryForm> acc;
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const BinaryForm& head = m[rows[0]][cols[k]];
        if (head.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        sub_cols.reserve(cols.size() - 1);
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) sub_cols.push_back(cols[j]);
        auto minor = ring_determinant(m, sub_rows, sub_cols);
        if (!minor) continue;
        BinaryForm term = mul(head, *minor);
        if (k % 2 == 1)
            for (auto& q : term.c) q = -q;
        acc = acc ? add(*acc, term) : term;
    }
    return acc;
}

} // namespace

namespace {

// Scalar Sylvester resultant of two binary forms (their coefficient lists as
// univariate polynomials); zero exactly when they share a projective root.
Rational binary_resultant(const BinaryForm& f, const BinaryForm& g) {
    const std::size_t p = static_cast<std::size_t>(f.degree());
    const std::size_t q = static_cast<std::size_t>(g.degree());
    if (p == 0 && q == 0) return Rational(1);
    if (p == 0) return rational_pow(f.c[0], static_cast<unsigned long>(q));
    if (q == 0) return rational_pow(g.c[0], static_cast<unsigned long>(p));
    const std::size_t size = p + q;
    std::vector<Rational> entries(size * size, Rational(0));
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t k = 0; k <= p; ++k) entries[i * size + i + k] = f.c[k];
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t k = 0; k <= q; ++k) entries[(q + i) * size + i + k] = g.c[k];
    return det(Mat(size, size, std::move(entries)));
}

// Coefficient list with respect to the actual degree in the eliminated
// variable: entry k is the binary form multiplying w^(m-k), m = deg_w.
std::vector<BinaryForm> actual_degree_coefficients(const TernaryForm& f, int var) {
    auto nominal = coefficients_in_var(f, var); // nominal[k] multiplies w^(deg-k)
    std::size_t drop = 0;
    while (drop + 1 < nominal.size() && nominal[drop].is_zero()) ++drop;
    return {nominal.begin() + static_cast<long>(drop), nominal.end()};
}

} // namespace

BinaryForm resultant(const TernaryForm& f, const TernaryForm& g, int eliminated) {
    if (eliminated < 0 || eliminated > 2)
        throw std::invalid_argument("resultant: variable index out of range");
    const bool f_zero =
        std::all_of(f.coeffs.begin(), f.coeffs.end(), [](const Rational& q) { return q == 0; });
    const bool g_zero =
        std::all_of(g.coeffs.begin(), g.coeffs.end(), [](const Rational& q) { return q == 0; });
    if (f_zero || g_zero) throw zero_form_error("resultant of the zero form");

    // Sylvester with respect to the actual degrees in the eliminated
    // variable; for fully general input both are the total degrees and the
    // result has degree deg(f)*deg(g).
    const auto a = actual_degree_coefficients(f, eliminated);
    const auto b = actual_degree_coefficients(g, eliminated);
    const std::size_t m = a.size() - 1;  // deg_w f
    const std::size_t mp = b.size() - 1; // deg_w g

    if (m == 0 && mp == 0) {
        // both free of the eliminated variable: the scalar resultant of two
        // binary forms decides (zero iff they share a factor)
        BinaryForm out(0);
        out.c[0] = binary_resultant(a[0], b[0]);
        return out;
    }

    const std::size_t size = m + mp;
    std::vector<std::vector<BinaryForm>> syl;
    syl.reserve(size);
    for (std::size_t i = 0; i < mp; ++i) {
        std::vector<BinaryForm> row;
        row.reserve(size);
        for (std::size_t j = 0; j < size; ++j) {
            if (j >= i && j - i <= m)
                row.push_back(a[j - i]);
            else
                row.push_back(BinaryForm(0)); // zero placeholder, never multiplied
        }
        syl.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<BinaryForm> row;
        row.reserve(size);
        for (std::size_t j = 0; j < size; ++j) {
            if (j >= i && j - i <= mp)
                row.push_back(b[j - i]);
            else
                row.push_back(BinaryForm(0));
        }
        syl.push_back(std::move(row));
    }

    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    auto result = ring_determinant(syl, idx, idx);
    return result ? *result : BinaryForm(f.degree * g.degree);
}

BinaryForm deflate_roots(const BinaryForm& f, const std::vector<ProjPoint>& known) {
    BinaryForm cur = f;
    for (const auto& root : known) {
        if (root.dim() != 1)
            throw std::invalid_argument("deflate_roots: roots must lie in P^1");
        const Rational& a = root.coords()[0];
        const Rational& b = root.coords()[1];
        if (cur.eval(a, b) != 0)
            throw not_a_root_error("not a root: " + root.to_string());
        const int deg = cur.degree();
        if (deg < 1) throw not_a_root_error("no factor left for root " + root.to_string());

        // cur = (b*x - a*y) * quotient, solved coefficient by coefficient
        BinaryForm q(deg - 1);
        if (b != 0) {
            Rational prev(0);
            for (int j = 0; j < deg; ++j) {
                q.c[static_cast<std::size_t>(j)] =
                    (cur.c[static_cast<std::size_t>(j)] + a * prev) / b;
                prev = q.c[static_cast<std::size_t>(j)];
            }
        } else {
            // root (1:0): factor is -a*y, so c[0] must vanish
            for (int j = 0; j < deg; ++j)
                q.c[static_cast<std::size_t>(j)] = -cur.c[static_cast<std::size_t>(j) + 1] / a;
        }
        cur = std::move(q);
    }
    return cur;
}

namespace {

void trim(std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

} // namespace

std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        while (a.size() >= b.size() && !a.empty()) {
            const Rational f = a.back() / b.back();
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    trim(a);
    if (!a.empty()) {
        const Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

std::vector<Rational> univariate_slice(const TernaryForm& f, int var, const Rational& u_val,
                                       const Rational& v_val) {
    MonomialBasis basis(2, f.degree);
    const int u = var == 0 ? 1 : 0;
    const int v = var == 2 ? 1 : 2;
    std::vector<Rational> out(static_cast<std::size_t>(f.degree) + 1, Rational(0));
    const auto& order = basis.order();
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (f.coeffs[i] == 0) continue;
        const int wpow = order[i][static_cast<std::size_t>(var)];
        Rational term = f.coeffs[i];
        term *= rational_pow(u_val, static_cast<unsigned long>(order[i][static_cast<std::size_t>(u)]));
        term *= rational_pow(v_val, static_cast<unsigned long>(order[i][static_cast<std::size_t>(v)]));
        out[static_cast<std::size_t>(wpow)] += term;
    }
    return out;
}

} // namespace terracini
