#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "terracini/conditions.hpp"
#include "terracini/scheme.hpp"

namespace terracini {

/// Which argument decided a verdict. Criterion evidence carries its
/// parameters; `direct` means the exact rank of the doubled scheme was
/// computed. Criteria are one-sided: silence is never evidence.
struct Evidence {
    enum class Kind { direct, split, meta, product, augment };
    Kind kind = Kind::direct;
    int q = 0;
    int u = 0;                       // split only
    std::vector<std::size_t> witness; // split: subset lying on the hypersurface

    std::string to_string() const;
    bool operator==(const Evidence&) const = default;
};

/// Membership decision for S in the r-th Terracini locus of (P^n, O(d)).
/// defect = (n+1)r - rank(conditions of 2S); it is only present when the
/// direct computation ran (criterion paths do not know it).
struct TerraciniVerdict {
    bool member = false;
    std::optional<long> defect;
    Evidence evidence;
    bool ah_dense_cell = false; // informational flag, never decides
    std::optional<LinearSystemReport> report; // present iff evidence is direct

    bool operator==(const TerraciniVerdict&) const = default;
};

/// One-sided certificate produced by a criterion. `member` tells which side
/// it certifies; `degree` is the degree the claim is about.
struct Certificate {
    bool member = false;
    int degree = 0;
    Evidence evidence;
};

struct DaggerEntry {
    std::size_t point_index = 0;
    long h1 = 0;
    bool passes = false;
};

/// Per-point independence report for the schemes S u 2p, p in S.
struct DaggerReport {
    std::vector<DaggerEntry> entries;
    bool overall = false; // AND over all points
};

/// Direct membership test: member iff h^0(I_{2S}(d)) > dim_forms(n,d) -
/// (n+1)r, equivalently defect > 0. Points must be pairwise distinct.
TerraciniVerdict is_member(const std::vector<ProjPoint>& points, int n, int d);

/// For each p in S, independence of S u 2p at degree d.
DaggerReport dagger(const std::vector<ProjPoint>& points, int n, int d);

/// Exclusion at degree a+b: fires iff S passes the per-point independence
/// test at degree a and the reduced S imposes independent conditions at
/// degree b.
std::optional<Certificate> criterion_product(const std::vector<ProjPoint>& points, int n,
                                             int a, int b);

/// Exclusion at degree d from h^1(I_S(q)) = 0 with 2q < d.
std::optional<Certificate> criterion_meta(const std::vector<ProjPoint>& points, int n,
                                          int q, int d);

/// Membership at degree d: searches (q, u) with
/// C(q+n,n) + n*u > C(d+n,n) for a u-subset lying on a hypersurface of
/// degree d-q. When u < dim_forms(n, d-q) every u-subset qualifies and the
/// certificate is issued without search. Throws
/// subset_search_too_large_error when C(r, u) exceeds `subset_cap`.
std::optional<Certificate> criterion_split(const std::vector<ProjPoint>& points, int n,
                                           int d, unsigned long subset_cap = 1000000);

/// Exclusion for base u {p_new} at degree d (d >= 3): fires iff the base set
/// is a non-member at degree d-2.
std::optional<Certificate> criterion_augment(const std::vector<ProjPoint>& base,
                                             const ProjPoint& p_new, int n, int d);

/// Dimension bound for the whole locus: applies iff
/// r <= C(n + ceil(d/2) - 1, n) - 1, in which case dim <= rn - n (so
/// codimension >= n). Metadata about the locus, not about one instance.
struct DimensionBound {
    bool applies = false;
    long max_dim = 0;
};
DimensionBound cc3_bound(int n, int d, int r);

/// Alexander-Hirschowitz exceptional cells: the (n, d, r) whose Terracini
/// locus is dense. Exactly d=2 (n>1, r>1), (n=4,d=3,r=7), (n=2,d=4,r=5),
/// (n=3,d=4,r=9), (n=4,d=4,r=14).
bool ah_defective(int n, int d, int r);

/// One entry of the criteria trail: what was tried, in order, and whether it
/// fired.
struct CriterionTrial {
    std::string name;
    bool fired = false;
    std::string evidence;

    bool operator==(const CriterionTrial&) const = default;
};

/// Runs the membership criterion first, then the exclusion criteria (meta
/// over all valid q), then falls back to the direct rank. The AH flag is
/// attached as metadata only.
TerraciniVerdict classify(const std::vector<ProjPoint>& points, int n, int d);

/// classify, also recording each criterion tried into `trail`.
TerraciniVerdict classify_with_trail(const std::vector<ProjPoint>& points, int n, int d,
                                     std::vector<CriterionTrial>& trail);

} // namespace terracini
