#include "terracini/terracini.hpp"

#include <algorithm>

#include "terracini/errors.hpp"
#include "terracini/linalg.hpp"

namespace terracini {

std::string Evidence::to_string() const {
    switch (kind) {
    case Kind::direct:
        return "direct";
    case Kind::meta:
        return "meta(q=" + std::to_string(q) + ")";
    case Kind::product:
        return "product(a=" + std::to_string(q) + ",b=" + std::to_string(u) + ")";
    case Kind::augment:
        return "augment";
    case Kind::split: {
        std::string s = "split(q=" + std::to_string(q) + ",u=" + std::to_string(u);
        s += ",witness=[";
        for (std::size_t i = 0; i < witness.size(); ++i) {
            if (i) s += " ";
            s += std::to_string(witness[i]);
        }
        return s + "])";
    }
    }
    return "?";
}

TerraciniVerdict is_member(const std::vector<ProjPoint>& points, int n, int d) {
    const SchemeSpec doubled = SchemeSpec::doubled(n, points); // rejects duplicates
    const LinearSystemReport report = cohomology(doubled, d);

    const int r = static_cast<int>(points.size());
    TerraciniVerdict verdict;
    verdict.member = report.defect > 0;
    verdict.defect = report.defect;
    verdict.evidence.kind = Evidence::Kind::direct;
    verdict.ah_dense_cell = (d >= 2 && r >= 2) && ah_defective(n, d, r);
    verdict.report = report;
    return verdict;
}

DaggerReport dagger(const std::vector<ProjPoint>& points, int n, int d) {
    DaggerReport out;
    out.overall = true;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const SchemeSpec z = SchemeSpec::with_one_doubled(n, points, i);
        const LinearSystemReport rep = cohomology(z, d);
        const bool pass = rep.h1 == 0;
        out.entries.push_back({i, rep.h1, pass});
        out.overall = out.overall && pass;
    }
    return out;
}

std::optional<Certificate> criterion_product(const std::vector<ProjPoint>& points, int n,
                                             int a, int b) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("criterion_product: degrees must be >= 1");
    if (!dagger(points, n, a).overall) return std::nullopt;
    if (!imposes_independent(SchemeSpec::reduced(n, points), b)) return std::nullopt;
    Certificate cert;
    cert.member = false;
    cert.degree = a + b;
    cert.evidence.kind = Evidence::Kind::product;
    cert.evidence.q = a;
    cert.evidence.u = b;
    return cert;
}

std::optional<Certificate> criterion_meta(const std::vector<ProjPoint>& points, int n,
                                          int q, int d) {
    if (q < 1 || 2 * q >= d)
        throw std::invalid_argument("criterion_meta: need 1 <= q and 2q < d");
    if (h1_reduced(points, n, q) != 0) return std::nullopt;
    Certificate cert;
    cert.member = false;
    cert.degree = d;
    cert.evidence.kind = Evidence::Kind::meta;
    cert.evidence.q = q;
    return cert;
}

namespace {

// Whether some u-subset of S lies on a hypersurface of degree e, i.e. the
// eval rows of the subset have rank < dim_forms(n, e). Subsets are walked in
// lexicographic index order; the first witness wins.
std::optional<std::vector<std::size_t>> subset_on_hypersurface(
    const std::vector<ProjPoint>& points, int n, int e, std::size_t u) {
    const MonomialBasis basis(n, e);
    std::vector<std::vector<Rational>> all_rows;
    all_rows.reserve(points.size());
    for (const auto& p : points) all_rows.push_back(eval_row(basis, p));

    std::vector<std::size_t> pick(u);
    for (std::size_t i = 0; i < u; ++i) pick[i] = i;
    const std::size_t r = points.size();
    for (;;) {
        std::vector<std::vector<Rational>> rows;
        rows.reserve(u);
        for (std::size_t i : pick) rows.push_back(all_rows[i]);
        if (rank(Mat::from_rows(rows, basis.size())) < basis.size()) return pick;

        // next combination
        std::size_t k = u;
        while (k > 0) {
            --k;
            if (pick[k] != k + r - u) {
                ++pick[k];
                for (std::size_t j = k + 1; j < u; ++j) pick[j] = pick[j - 1] + 1;
                break;
            }
            if (k == 0) return std::nullopt;
        }
    }
}

unsigned long binom_capped(std::size_t r, std::size_t u, unsigned long cap) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(u));
    if (!b.fits_ulong_p()) return cap + 1;
    const unsigned long v = b.get_ui();
    return v;
}

} // namespace

std::optional<Certificate> criterion_split(const std::vector<ProjPoint>& points, int n,
                                           int d, unsigned long subset_cap) {
    if (d < 2) throw std::invalid_argument("criterion_split: degree must be >= 2");
    const std::size_t r = points.size();
    const long total = dim_forms(n, d);

    for (int q = 1; q <= d - 1; ++q) {
        const long forms_q = dim_forms(n, q);
        const long forms_rest = dim_forms(n, d - q);
        for (std::size_t u = 1; u <= r; ++u) {
            if (forms_q + static_cast<long>(n) * static_cast<long>(u) <= total) continue;

            Certificate cert;
            cert.member = true;
            cert.degree = d;
            cert.evidence.kind = Evidence::Kind::split;
            cert.evidence.q = q;
            cert.evidence.u = static_cast<int>(u);

            if (static_cast<long>(u) < forms_rest) {
                // any u points lie on a degree-(d-q) hypersurface
                for (std::size_t i = 0; i < u; ++i) cert.evidence.witness.push_back(i);
                return cert;
            }
            if (binom_capped(r, u, subset_cap) > subset_cap)
                throw subset_search_too_large_error(
                    "criterion_split: C(" + std::to_string(r) + "," + std::to_string(u) +
                    ") exceeds cap");
            auto witness = subset_on_hypersurface(points, n, d - q, u);
            if (witness) {
                cert.evidence.witness = std::move(*witness);
                return cert;
            }
            // a larger subset on the hypersurface would contain a u-subset
            // on it, so larger u cannot succeed at this q
            break;
        }
    }
    return std::nullopt;
}

std::optional<Certificate> criterion_augment(const std::vector<ProjPoint>& base,
                                             const ProjPoint& p_new, int n, int d) {
    if (d < 3) throw degree_too_small_error("criterion_augment: degree must be >= 3");
    if (std::find(base.begin(), base.end(), p_new) != base.end())
        throw std::invalid_argument("criterion_augment: p_new already in base set");
    if (is_member(base, n, d - 2).member) return std::nullopt;
    Certificate cert;
    cert.member = false;
    cert.degree = d;
    cert.evidence.kind = Evidence::Kind::augment;
    return cert;
}

DimensionBound cc3_bound(int n, int d, int r) {
    if (n < 2 || d < 3 || r < 1)
        throw std::invalid_argument("cc3_bound: need n >= 2, d >= 3, r >= 1");
    const int half_up = (d + 1) / 2;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n + half_up - 1),
                 static_cast<unsigned long>(n));
    DimensionBound out;
    out.applies = mpz_class(r) <= b - 1;
    if (out.applies) out.max_dim = static_cast<long>(r) * n - n;
    return out;
}

bool ah_defective(int n, int d, int r) {
    if (n < 1 || d < 2 || r < 2)
        throw std::invalid_argument("ah_defective: need n >= 1, d >= 2, r >= 2");
    if (d == 2) return n > 1 && r > 1;
    if (d == 3) return n == 4 && r == 7;
    if (d == 4) return (n == 2 && r == 5) || (n == 3 && r == 9) || (n == 4 && r == 14);
    return false;
}

TerraciniVerdict classify(const std::vector<ProjPoint>& points, int n, int d) {
    std::vector<CriterionTrial> trail;
    return classify_with_trail(points, n, d, trail);
}

TerraciniVerdict classify_with_trail(const std::vector<ProjPoint>& points, int n, int d,
                                     std::vector<CriterionTrial>& trail) {
    const int r = static_cast<int>(points.size());
    const bool ah = (d >= 2 && r >= 2) && ah_defective(n, d, r);

    if (d >= 2) {
        auto cert = criterion_split(points, n, d);
        trail.push_back({"split", cert.has_value(),
                         cert ? cert->evidence.to_string() : std::string()});
        if (cert) {
            TerraciniVerdict verdict;
            verdict.member = true;
            verdict.evidence = cert->evidence;
            verdict.ah_dense_cell = ah;
            return verdict;
        }
    }
    for (int q = 1; 2 * q < d; ++q) {
        auto cert = criterion_meta(points, n, q, d);
        trail.push_back({"meta(q=" + std::to_string(q) + ")", cert.has_value(),
                         cert ? cert->evidence.to_string() : std::string()});
        if (cert) {
            TerraciniVerdict verdict;
            verdict.member = false;
            verdict.evidence = cert->evidence;
            verdict.ah_dense_cell = ah;
            return verdict;
        }
    }
    trail.push_back({"direct", true, "direct"});
    return is_member(points, n, d);
}

} // namespace terracini
