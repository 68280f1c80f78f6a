#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "terracini/forms.hpp"
#include "terracini/scheme.hpp"

namespace terracini {

/// One constraint of a point family: `count` points on a rational curve of
/// degree `curve_degree`, or the 9-point complete intersection of two cubics
/// (8 free points, the ninth determined).
struct FamilyConstraint {
    enum class Kind { on_curve, ci_cubics };
    Kind kind = Kind::on_curve;
    std::size_t count = 0;
    int curve_degree = 0;

    bool operator==(const FamilyConstraint&) const = default;
};

/// Family of r-point configurations in P^n: constrained subsets plus a
/// general remainder. Constrained counts must not exceed r.
struct FamilyDescriptor {
    int n = 2;
    std::size_t r = 0;
    std::vector<FamilyConstraint> constraints;

    std::size_t constrained_count() const;
    std::size_t general_count() const { return r - constrained_count(); }

    bool operator==(const FamilyDescriptor&) const = default;
};

/// Descriptor grammar (terms joined by '+'):
///   general(r) | line(u) | conic(u) | curve(e,u) | ci_cubics
/// e.g. "conic(6)+general(1)" or "ci_cubics".
FamilyDescriptor parse_family(const std::string& text, int n);
std::string family_to_string(const FamilyDescriptor& desc);

/// r distinct points with integer coordinates uniform in [-bound, bound] and
/// last coordinate 1, deterministic per seed.
std::vector<ProjPoint> random_general(int n, std::size_t r, std::uint64_t seed,
                                      long bound = 1000);

struct CurveSample {
    std::vector<ProjPoint> points;
    TernaryForm curve; // implicit equation; every point satisfies it exactly
};

/// r distinct points on a random rationally-parametrized plane curve of
/// degree e (line for e=1, smooth conic for e=2; e >= 3 gives a singular
/// rational model). Throws degenerate_curve_error when no usable curve is
/// found within the retry budget.
CurveSample on_rational_curve(int e, std::size_t r, std::uint64_t seed);

/// Ninth base point of the pencil of cubics through 8 plane points in
/// general position (the space of cubics through them must be exactly
/// 2-dimensional). Exact rational output; invariant under permutation of
/// the inputs.
ProjPoint ninth_base_point(const std::vector<ProjPoint>& eight);

/// One sample of the family: constrained subsets first (in descriptor
/// order), then the general remainder. Deterministic per (descriptor, seed).
std::vector<ProjPoint> with_constrained_subset(const FamilyDescriptor& desc,
                                               std::uint64_t seed, long bound = 1000);

/// Parameter count of the family inside (P^n)^(r): each on_curve constraint
/// contributes (dim of degree-e plane curves) + u, the complete-intersection
/// family contributes 16, general points contribute n each.
long stratum_dimension(const FamilyDescriptor& desc);

/// Dimension bookkeeping quoted for the nodal-curve strata (node sets of
/// irreducible plane curves of degree d). These families cannot be sampled
/// exactly, so the numbers are metadata, never verified by computation.
struct NodalStratumInfo {
    std::size_t r = 0;
    long dim = 0;
    long codim = 0;
    bool verified = false; // always false: quoted, not computed
};
std::optional<NodalStratumInfo> nodal_stratum_info(int d);

} // namespace terracini
