#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "terracini/matrix.hpp"
#include "terracini/rng.hpp"

namespace terracini {

/// Exact rank over the rationals (fraction-free elimination on
/// integer-cleared rows; pivot = smallest bit size in the column).
std::size_t rank(const Mat& m);

/// Basis of the right kernel: cols(m) - rank(m) exact rational vectors,
/// each satisfying m*v = 0. Order follows ascending free-column index.
std::vector<std::vector<Rational>> kernel_basis(const Mat& m);

/// Rank of m reduced mod p. Throws bad_prime_error if an entry denominator
/// is divisible by p. Always <= rank(m).
std::size_t rank_mod_p(const Mat& m, std::uint64_t p);

/// Deterministic ~30-bit random prime from the given rng state.
std::uint64_t random_prime_30bit(SeededRng& rng);

// Plumbing shared by the geometry layers.

Mat mat_mul(const Mat& a, const Mat& b);
std::vector<Rational> mat_vec(const Mat& a, const std::vector<Rational>& v);
Mat identity_mat(std::size_t n);

/// Exact inverse, or nullopt when singular.
std::optional<Mat> invert(const Mat& m);

/// Exact determinant of a square matrix.
Rational det(const Mat& m);

} // namespace terracini
