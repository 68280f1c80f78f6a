#pragma once

#include <cstdint>
#include <vector>

#include "terracini/rational.hpp"
#include "terracini/scheme.hpp"

namespace terracini {

/// Point of a product of projective spaces: one factor point per P^{n_i}.
struct SegrePoint {
    std::vector<ProjPoint> factors;

    bool operator==(const SegrePoint&) const = default;
};

std::vector<std::size_t> factor_dims(const SegrePoint& p);

/// Tangent-span verdict on the Segre embedding. expected = r*(sum n_i + 1)
/// is the affine-cone dimension the tangent spans of r general points reach;
/// member holds exactly when the stacked rank falls below it.
struct SegreVerdict {
    std::size_t r = 0;
    long ambient = 0;  // N+1 = prod (n_i + 1)
    long rank = 0;
    long expected = 0; // r * (sum n_i + 1)
    bool member = false;
    long drop = 0;     // expected - rank

    bool operator==(const SegreVerdict&) const = default;
};

/// Spanning rows of the affine tangent cone at p: the tensor itself plus
/// every single-factor coordinate perturbation, reduced to an independent
/// set (always of size sum n_i + 1; the Segre is smooth).
std::vector<std::vector<Rational>> segre_tangent_rows(const SegrePoint& p);

/// Stacks tangent rows of all points and reads the verdict off the rank.
SegreVerdict segre_terracini(const std::vector<SegrePoint>& points);

/// 6 points on (P^3)^3 of the form (g1 q_i, g2 q_i, g3 q_i) for random
/// invertible g_j, so the three factor projections are projectively
/// equivalent by construction.
std::vector<SegrePoint> equiv_factor_config(std::size_t r, std::uint64_t seed);

enum class EquivalenceResult { equivalent, not_equivalent, indeterminate };

/// Exact projective-equivalence test for two equal-size point sets in P^m
/// via frame normalization; indeterminate when neither set contains m+2
/// points in linearly general position.
EquivalenceResult projectively_equivalent(const std::vector<ProjPoint>& a,
                                          const std::vector<ProjPoint>& b);

/// Frequencies gathered around the 6-point Terracini locus of (P^3)^3:
/// samples mix constructed members, pairwise-equivalent-only configurations
/// and perturbations; members found are tested for equivalent factor
/// projections. Evidence only, never a verdict.
struct ConjectureEvidence {
    int samples = 0;
    int members = 0;
    int members_with_equivalent_pair = 0;
    int members_with_all_equivalent = 0;
    int equivalence_indeterminate = 0;
};
ConjectureEvidence conjecture_sweep(int samples, std::uint64_t seed);

} // namespace terracini
