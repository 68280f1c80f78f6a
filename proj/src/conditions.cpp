#include "terracini/conditions.hpp"

#include <algorithm>

#include "terracini/errors.hpp"
#include "terracini/linalg.hpp"

namespace terracini {

Mat conditions_matrix(const SchemeSpec& z, int d) {
    if (d < 1) throw degree_zero_error("conditions_matrix: degree must be >= 1");
    MonomialBasis basis(z.n(), d);
    std::vector<std::vector<Rational>> rows;
    rows.reserve(z.length());
    for (const auto& item : z.items()) {
        if (item.kind == PointKind::reduced) {
            rows.push_back(eval_row(basis, item.point));
        } else {
            auto partials = partial_rows(basis, item.point);
            for (auto& row : partials) rows.push_back(std::move(row));
        }
    }
    return Mat::from_rows(rows, basis.size());
}

LinearSystemReport cohomology(const SchemeSpec& z, int d) {
    const Mat m = conditions_matrix(z, d);
    const long dim = dim_forms(z.n(), d);
    const long len = static_cast<long>(z.length());
    const long rk = static_cast<long>(rank(m));

    LinearSystemReport report;
    report.n = z.n();
    report.d = d;
    report.length = len;
    report.rank = rk;
    report.h0 = dim - rk;
    report.h1 = len - rk;
    report.expected_h0 = std::max(0L, dim - len);
    report.defect = len - rk;
    return report;
}

bool imposes_independent(const SchemeSpec& z, int d) {
    return cohomology(z, d).defect == 0;
}

long h1_reduced(const std::vector<ProjPoint>& points, int n, int q) {
    return cohomology(SchemeSpec::reduced(n, points), q).h1;
}

} // namespace terracini
