#pragma once

#include "terracini/matrix.hpp"
#include "terracini/polyspace.hpp"
#include "terracini/scheme.hpp"

namespace terracini {

/// Cohomology accounting for one scheme/degree pair. With h^1(O_{P^n}(d)) = 0
/// for d >= 0, the numbers satisfy h0 + rank = dim_forms(n, d) and
/// h1 = length - rank; defect = 0 exactly when Z imposes independent
/// conditions.
struct LinearSystemReport {
    int n = 0;
    int d = 0;
    long length = 0;
    long rank = 0;
    long h0 = 0;
    long h1 = 0;
    long expected_h0 = 0; // max(0, dim_forms - length)
    long defect = 0;      // length - rank

    bool operator==(const LinearSystemReport&) const = default;
};

/// One eval row per reduced point, n+1 partial rows per double point, over
/// the degree-d monomial basis. Row count = length of the scheme.
Mat conditions_matrix(const SchemeSpec& z, int d);

LinearSystemReport cohomology(const SchemeSpec& z, int d);

/// defect == 0, i.e. h^0(I_Z(d)) = h^0(O(d)) - length(Z).
bool imposes_independent(const SchemeSpec& z, int d);

/// h^1(I_S(q)) for the reduced set S; used by the exclusion criteria.
long h1_reduced(const std::vector<ProjPoint>& points, int n, int q);

} // namespace terracini
