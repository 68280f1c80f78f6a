#include "terracini/linalg.hpp"

#include <algorithm>
#include <limits>

#include "terracini/errors.hpp"

namespace terracini {

namespace {

// Clears denominators row by row (rank and kernels are invariant under row
// scaling), giving an integer matrix for fraction-free elimination.
std::vector<std::vector<mpz_class>> integer_cleared_rows(const Mat& m) {
    std::vector<std::vector<mpz_class>> out(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class lcm = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& q = m.at(i, j);
            mpz_class scale = lcm / mpz_class(q.get_den());
            out[i][j] = mpz_class(q.get_num()) * scale;
        }
    }
    return out;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    while (exp) {
        if (exp & 1) acc = mul_mod(acc, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return acc;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    return pow_mod(a % p, p - 2, p); // p prime
}

} // namespace

std::size_t rank(const Mat& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    auto a = integer_cleared_rows(m);
    const std::size_t rows = a.size();
    const std::size_t cols = a[0].size();

    mpz_class prev = 1;
    std::size_t rk = 0;
    for (std::size_t col = 0; col < cols && rk < rows; ++col) {
        // pivot with the smallest bit size keeps coefficient growth down
        std::size_t pivot = rows;
        std::size_t pivot_bits = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = rk; i < rows; ++i) {
            if (a[i][col] != 0) {
                std::size_t bits = mpz_sizeinbase(a[i][col].get_mpz_t(), 2);
                if (bits < pivot_bits) {
                    pivot_bits = bits;
                    pivot = i;
                }
            }
        }
        if (pivot == rows) continue;
        std::swap(a[rk], a[pivot]);
        for (std::size_t i = rk + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class t = a[i][j] * a[rk][col] - a[i][col] * a[rk][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[rk][col];
        ++rk;
    }
    return rk;
}

std::vector<std::vector<Rational>> kernel_basis(const Mat& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (cols == 0) return {};

    // Gauss-Jordan over Q; pivot choice by smallest combined bit size.
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m.at(i, j);

    std::vector<std::size_t> pivot_col_of_row;
    std::vector<bool> is_pivot_col(cols, false);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = rows;
        std::size_t pivot_bits = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = row; i < rows; ++i) {
            if (a[i][col] != 0) {
                std::size_t bits = mpz_sizeinbase(a[i][col].get_num_mpz_t(), 2) +
                                   mpz_sizeinbase(a[i][col].get_den_mpz_t(), 2);
                if (bits < pivot_bits) {
                    pivot_bits = bits;
                    pivot = i;
                }
            }
        }
        if (pivot == rows) continue;
        std::swap(a[row], a[pivot]);
        const Rational inv = 1 / a[row][col];
        for (std::size_t j = col; j < cols; ++j) a[row][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || a[i][col] == 0) continue;
            const Rational f = a[i][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col_of_row.push_back(col);
        is_pivot_col[col] = true;
        ++row;
    }

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot_col[free_col]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free_col] = 1;
        for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i)
            v[pivot_col_of_row[i]] = -a[i][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank_mod_p(const Mat& m, std::uint64_t p) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();

    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const Rational& q = m.at(i, j);
            std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
            if (den == 0)
                throw bad_prime_error("denominator divisible by p=" + std::to_string(p));
            std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), p); // fdiv: result in [0,p)
            a[i][j] = mul_mod(num, inv_mod(den, p), p);
        }
    }

    std::size_t rk = 0;
    for (std::size_t col = 0; col < cols && rk < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t i = rk; i < rows; ++i) {
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) continue;
        std::swap(a[rk], a[pivot]);
        const std::uint64_t inv = inv_mod(a[rk][col], p);
        for (std::size_t i = rk + 1; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            const std::uint64_t f = mul_mod(a[i][col], inv, p);
            for (std::size_t j = col; j < cols; ++j) {
                std::uint64_t sub = mul_mod(f, a[rk][j], p);
                a[i][j] = (a[i][j] + p - sub) % p;
            }
        }
        ++rk;
    }
    return rk;
}

std::uint64_t random_prime_30bit(SeededRng& rng) {
    for (;;) {
        std::uint64_t candidate = (1ULL << 29) + rng.below(1ULL << 29);
        candidate |= 1;
        mpz_class z(static_cast<unsigned long>(candidate));
        if (mpz_probab_prime_p(z.get_mpz_t(), 32) > 0) return candidate;
    }
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("mat_mul: shape mismatch");
    std::vector<Rational> out(a.rows() * b.cols(), Rational(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out[i * b.cols() + j] += aik * b.at(k, j);
        }
    return Mat(a.rows(), b.cols(), std::move(out));
}

std::vector<Rational> mat_vec(const Mat& a, const std::vector<Rational>& v) {
    if (a.cols() != v.size())
        throw std::invalid_argument("mat_vec: shape mismatch");
    std::vector<Rational> out(a.rows(), Rational(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a.at(i, j) * v[j];
    return out;
}

Mat identity_mat(std::size_t n) {
    std::vector<Rational> e(n * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
    return Mat(n, n, std::move(e));
}

Rational det(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: square matrix expected");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);

    Rational out(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t i = col; i < n; ++i) {
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(a[col], a[pivot]);
            out = -out;
        }
        out *= a[col][col];
        const Rational inv = 1 / a[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a[i][col] == 0) continue;
            const Rational f = a[i][col] * inv;
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return out;
}

std::optional<Mat> invert(const Mat& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t i = col; i < n; ++i) {
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == n) return std::nullopt;
        std::swap(a[col], a[pivot]);
        const Rational inv = 1 / a[col][col];
        for (std::size_t j = 0; j < 2 * n; ++j) a[col][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            const Rational f = a[i][col];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    std::vector<Rational> out;
    out.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.push_back(a[i][n + j]);
    return Mat(n, n, std::move(out));
}

} // namespace terracini
