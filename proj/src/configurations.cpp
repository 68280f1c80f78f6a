#include "terracini/configurations.hpp"

#include <algorithm>

#include "terracini/conditions.hpp"
#include "terracini/errors.hpp"
#include "terracini/linalg.hpp"
#include "terracini/polyspace.hpp"
#include "terracini/rng.hpp"

namespace terracini {

std::size_t FamilyDescriptor::constrained_count() const {
    std::size_t total = 0;
    for (const auto& c : constraints) total += c.count;
    if (total > r) throw unsupported_family_error("constrained counts exceed r");
    return total;
}

namespace {

std::vector<std::string> split_terms(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

long parse_count(const std::string& s, const std::string& what) {
    if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error("family descriptor: bad " + what + " '" + s + "'");
    return std::stol(s);
}

} // namespace

FamilyDescriptor parse_family(const std::string& text, int n) {
    FamilyDescriptor desc;
    desc.n = n;
    std::size_t general = 0;
    for (const auto& term : split_terms(text, '+')) {
        if (term == "ci_cubics") {
            if (n != 2) throw unsupported_family_error("ci_cubics needs n=2");
            desc.constraints.push_back(
                {FamilyConstraint::Kind::ci_cubics, 9, 3});
            continue;
        }
        const auto open = term.find('(');
        if (open == std::string::npos || term.back() != ')')
            throw parse_error("family descriptor: bad term '" + term + "'");
        const std::string head = term.substr(0, open);
        const std::string args = term.substr(open + 1, term.size() - open - 2);
        if (head == "general") {
            general += static_cast<std::size_t>(parse_count(args, "count"));
        } else if (head == "line" || head == "conic") {
            const long u = parse_count(args, "count");
            desc.constraints.push_back({FamilyConstraint::Kind::on_curve,
                                        static_cast<std::size_t>(u),
                                        head == "line" ? 1 : 2});
        } else if (head == "curve") {
            const auto parts = split_terms(args, ',');
            if (parts.size() != 2)
                throw parse_error("family descriptor: curve(e,u) expects two arguments");
            const long e = parse_count(parts[0], "degree");
            const long u = parse_count(parts[1], "count");
            if (e < 1) throw parse_error("family descriptor: curve degree must be >= 1");
            desc.constraints.push_back({FamilyConstraint::Kind::on_curve,
                                        static_cast<std::size_t>(u),
                                        static_cast<int>(e)});
        } else {
            throw parse_error("family descriptor: unknown term '" + term + "'");
        }
    }
    desc.r = general;
    for (const auto& c : desc.constraints) desc.r += c.count;
    if (desc.r == 0) throw parse_error("family descriptor: empty family");
    return desc;
}

std::string family_to_string(const FamilyDescriptor& desc) {
    std::string out;
    for (const auto& c : desc.constraints) {
        if (!out.empty()) out += "+";
        if (c.kind == FamilyConstraint::Kind::ci_cubics) {
            out += "ci_cubics";
        } else if (c.curve_degree == 1) {
            out += "line(" + std::to_string(c.count) + ")";
        } else if (c.curve_degree == 2) {
            out += "conic(" + std::to_string(c.count) + ")";
        } else {
            out += "curve(" + std::to_string(c.curve_degree) + "," +
                   std::to_string(c.count) + ")";
        }
    }
    const std::size_t general = desc.general_count();
    if (general > 0 || out.empty()) {
        if (!out.empty()) out += "+";
        out += "general(" + std::to_string(general) + ")";
    }
    return out;
}

std::vector<ProjPoint> random_general(int n, std::size_t r, std::uint64_t seed, long bound) {
    if (r < 1) throw std::invalid_argument("random_general: r must be >= 1");
    if (bound < 2) throw std::invalid_argument("random_general: bound must be >= 2");
    SeededRng rng(seed);
    std::vector<ProjPoint> points;
    points.reserve(r);
    std::size_t attempts = 0;
    const std::size_t max_attempts = 10000 * r;
    while (points.size() < r) {
        if (++attempts > max_attempts)
            throw exhausted_error("random_general: could not find distinct points");
        std::vector<Rational> coords;
        coords.reserve(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i < n; ++i) coords.emplace_back(rng.uniform(-bound, bound));
        coords.emplace_back(1);
        ProjPoint p(std::move(coords));
        if (std::find(points.begin(), points.end(), p) == points.end())
            points.push_back(std::move(p));
    }
    return points;
}

namespace {

BinaryForm random_binary_form(int degree, SeededRng& rng, long bound) {
    BinaryForm f(degree);
    for (auto& c : f.c) c = Rational(rng.uniform(-bound, bound));
    return f;
}

std::optional<ProjPoint> image_point(const std::vector<BinaryForm>& phi, const Rational& s,
                                     const Rational& t) {
    std::vector<Rational> coords;
    coords.reserve(3);
    bool nonzero = false;
    for (const auto& f : phi) {
        coords.push_back(f.eval(s, t));
        nonzero = nonzero || coords.back() != 0;
    }
    if (!nonzero) return std::nullopt;
    return ProjPoint(std::move(coords));
}

// Implicit equation of the parametrized curve: the unique (up to scale)
// degree-e form vanishing on enough sampled image points; empty when the
// kernel dimension is not 1.
std::optional<TernaryForm> implicitize(const std::vector<BinaryForm>& phi, int e) {
    MonomialBasis basis(2, e);
    const std::size_t samples = basis.size() + 2;
    std::vector<std::vector<Rational>> rows;
    long s = 0;
    while (rows.size() < samples && s < static_cast<long>(4 * samples)) {
        auto p = image_point(phi, Rational(s), Rational(1));
        ++s;
        if (!p) continue;
        rows.push_back(eval_row(basis, *p));
    }
    if (rows.size() < samples) return std::nullopt;
    auto kernel = kernel_basis(Mat::from_rows(rows, basis.size()));
    if (kernel.size() != 1) return std::nullopt;
    return TernaryForm{e, kernel.front()};
}

bool conic_is_smooth(const TernaryForm& conic) {
    // symmetric matrix of the quadratic form over basis x^2, xy, xz, y^2, yz, z^2
    const auto& c = conic.coeffs;
    std::vector<std::vector<Rational>> m = {
        {c[0], c[1] / 2, c[2] / 2},
        {c[1] / 2, c[3], c[4] / 2},
        {c[2] / 2, c[4] / 2, c[5]},
    };
    return rank(Mat::from_rows(m, 3)) == 3;
}

} // namespace

CurveSample on_rational_curve(int e, std::size_t r, std::uint64_t seed) {
    if (e < 1) throw std::invalid_argument("on_rational_curve: degree must be >= 1");
    if (r < 1) throw std::invalid_argument("on_rational_curve: r must be >= 1");
    SeededRng rng(seed);

    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<BinaryForm> phi = {random_binary_form(e, rng, 9),
                                       random_binary_form(e, rng, 9),
                                       random_binary_form(e, rng, 9)};
        auto curve = implicitize(phi, e);
        if (!curve) continue;
        if (e == 2 && !conic_is_smooth(*curve)) continue;

        std::vector<ProjPoint> points;
        std::size_t param_attempts = 0;
        bool stuck = false;
        while (points.size() < r) {
            if (++param_attempts > 200 * r + 200) {
                stuck = true;
                break;
            }
            const Rational s(rng.uniform(-1000, 1000));
            auto p = image_point(phi, s, Rational(1));
            if (!p) continue;
            if (std::find(points.begin(), points.end(), *p) != points.end()) continue;
            points.push_back(std::move(*p));
        }
        if (stuck) continue;

        for (const auto& p : points) {
            if (evaluate(*curve, p) != 0)
                throw degenerate_curve_error("on_rational_curve: point off its curve");
        }
        return {std::move(points), std::move(*curve)};
    }
    throw degenerate_curve_error("on_rational_curve: no usable curve found");
}

namespace {

struct ChartAttemptFailure {
    bool persistent_zero_resultant = false;
};

std::optional<ProjPoint> ninth_in_chart(const TernaryForm& f, const TernaryForm& g,
                                        const std::vector<ProjPoint>& eight, int w,
                                        ChartAttemptFailure& failure) {
    const int u = w == 0 ? 1 : 0;
    const int v = w == 2 ? 1 : 2;

    std::vector<ProjPoint> projections;
    projections.reserve(8);
    for (const auto& p : eight) {
        const auto& c = p.coords();
        if (c[static_cast<std::size_t>(u)] == 0 && c[static_cast<std::size_t>(v)] == 0)
            return std::nullopt; // point at the chart center
        projections.emplace_back(std::vector<Rational>{c[static_cast<std::size_t>(u)],
                                                       c[static_cast<std::size_t>(v)]});
    }
    for (std::size_t i = 0; i < projections.size(); ++i)
        for (std::size_t j = i + 1; j < projections.size(); ++j)
            if (projections[i] == projections[j]) return std::nullopt;

    const BinaryForm res = resultant(f, g, w);
    if (res.is_zero()) {
        // the degree-aware resultant vanishes identically only on a common
        // factor, i.e. the pencil has a fixed component; no chart can fix that
        failure.persistent_zero_resultant = true;
        return std::nullopt;
    }

    BinaryForm rest = res;
    for (const auto& proj : projections) {
        if (rest.eval(proj.coords()[0], proj.coords()[1]) != 0) return std::nullopt;
        rest = deflate_roots(rest, {proj});
    }
    if (rest.degree() != 1 || rest.is_zero()) return std::nullopt;
    const Rational u9 = -rest.c[1];
    const Rational v9 = rest.c[0];
    if (u9 == 0 && v9 == 0) return std::nullopt;

    const auto phi = univariate_slice(f, w, u9, v9);
    const auto psi = univariate_slice(g, w, u9, v9);
    const auto common = poly_gcd(phi, psi);
    if (common.size() != 2) return std::nullopt; // need exactly one point above
    const Rational w9 = -common[0] / common[1];

    std::vector<Rational> coords(3);
    coords[static_cast<std::size_t>(u)] = u9;
    coords[static_cast<std::size_t>(v)] = v9;
    coords[static_cast<std::size_t>(w)] = w9;
    ProjPoint ninth(std::move(coords));
    if (evaluate(f, ninth) != 0 || evaluate(g, ninth) != 0) return std::nullopt;
    return ninth;
}

} // namespace

ProjPoint ninth_base_point(const std::vector<ProjPoint>& eight) {
    if (eight.size() != 8)
        throw std::invalid_argument("ninth_base_point: exactly 8 points expected");
    const SchemeSpec s = SchemeSpec::reduced(2, eight); // validates distinctness
    const Mat m = conditions_matrix(s, 3);
    if (rank(m) != 8)
        throw not_general_position_error(
            "ninth_base_point: cubics through the points do not form a pencil");
    const auto kernel = kernel_basis(m);
    const TernaryForm f{3, kernel[0]};
    const TernaryForm g{3, kernel[1]};

    ChartAttemptFailure failure;
    for (int w : {2, 1, 0}) {
        if (auto ninth = ninth_in_chart(f, g, eight, w, failure)) {
            if (std::find(eight.begin(), eight.end(), *ninth) != eight.end())
                throw not_general_position_error(
                    "ninth_base_point: base scheme has no ninth distinct point");
            return *ninth;
        }
        if (failure.persistent_zero_resultant)
            throw not_general_position_error(
                "ninth_base_point: the pencil has a fixed component");
    }

    // No direct chart worked: retry behind a random (but fixed-sequence, so
    // the result stays a pure function of the input set) coordinate change.
    SeededRng rng(0x9bde9bd5c1a7f3ULL);
    for (int attempt = 0; attempt < 24; ++attempt) {
        std::vector<std::vector<Rational>> gmat(3, std::vector<Rational>(3));
        for (auto& row : gmat)
            for (auto& entry : row) entry = Rational(rng.uniform(-9, 9));
        auto inverse = invert(Mat::from_rows(gmat, 3));
        if (!inverse) continue;

        std::vector<ProjPoint> moved;
        moved.reserve(8);
        for (const auto& p : eight) moved.push_back(apply_transform(gmat, p));
        const Mat m2 = conditions_matrix(SchemeSpec::reduced(2, moved), 3);
        if (rank(m2) != 8) continue; // cannot happen, but keep the invariant local
        const auto kernel2 = kernel_basis(m2);
        const TernaryForm f2{3, kernel2[0]};
        const TernaryForm g2{3, kernel2[1]};

        ChartAttemptFailure failure2;
        for (int w : {2, 1, 0}) {
            if (auto ninth = ninth_in_chart(f2, g2, moved, w, failure2)) {
                std::vector<std::vector<Rational>> ginv(3, std::vector<Rational>(3));
                for (std::size_t i = 0; i < 3; ++i)
                    for (std::size_t j = 0; j < 3; ++j) ginv[i][j] = inverse->at(i, j);
                ProjPoint back = apply_transform(ginv, *ninth);
                if (std::find(eight.begin(), eight.end(), back) != eight.end())
                    throw not_general_position_error(
                        "ninth_base_point: base scheme has no ninth distinct point");
                if (evaluate(f, back) != 0 || evaluate(g, back) != 0)
                    throw chart_failure_error("ninth_base_point: lifted point check failed");
                return back;
            }
            if (failure2.persistent_zero_resultant)
                throw not_general_position_error(
                    "ninth_base_point: the pencil has a fixed component");
        }
    }
    throw chart_failure_error("ninth_base_point: no valid chart after retries");
}

std::vector<ProjPoint> with_constrained_subset(const FamilyDescriptor& desc,
                                               std::uint64_t seed, long bound) {
    if (desc.r < 1) throw unsupported_family_error("empty family");
    desc.constrained_count(); // validates counts against r

    for (int attempt = 0; attempt < 64; ++attempt) {
        SeededRng rng(SeededRng::derive(seed, static_cast<std::uint64_t>(attempt)));
        std::vector<ProjPoint> points;
        bool failed = false;

        for (const auto& constraint : desc.constraints) {
            std::vector<ProjPoint> part;
            if (constraint.kind == FamilyConstraint::Kind::ci_cubics) {
                if (desc.n != 2 || constraint.count != 9)
                    throw unsupported_family_error("ci_cubics is the 9-point plane family");
                auto eight = random_general(2, 8, rng.next(), bound);
                part = eight;
                part.push_back(ninth_base_point(eight));
            } else {
                if (desc.n != 2)
                    throw unsupported_family_error("on-curve constraints need n=2");
                part = on_rational_curve(constraint.curve_degree, constraint.count,
                                         rng.next())
                           .points;
            }
            for (auto& p : part) {
                if (std::find(points.begin(), points.end(), p) != points.end()) {
                    failed = true;
                    break;
                }
                points.push_back(std::move(p));
            }
            if (failed) break;
        }
        if (failed) continue;

        const std::size_t general = desc.general_count();
        if (general > 0) {
            auto rest = random_general(desc.n, general, rng.next(), bound);
            for (auto& p : rest) {
                if (std::find(points.begin(), points.end(), p) != points.end()) {
                    failed = true;
                    break;
                }
                points.push_back(std::move(p));
            }
        }
        if (!failed) return points;
    }
    throw exhausted_error("with_constrained_subset: could not build a distinct sample");
}

long stratum_dimension(const FamilyDescriptor& desc) {
    desc.constrained_count();
    long dim = 0;
    for (const auto& c : desc.constraints) {
        if (c.kind == FamilyConstraint::Kind::ci_cubics) {
            if (desc.n != 2 || c.count != 9)
                throw unsupported_family_error("ci_cubics is the 9-point plane family");
            dim += 16; // 8 points free, the ninth determined
        } else {
            if (desc.n != 2)
                throw unsupported_family_error("on-curve strata supported for n=2 only");
            dim += dim_forms(2, c.curve_degree) - 1; // choice of the curve
            dim += static_cast<long>(c.count);       // points on it
        }
    }
    dim += static_cast<long>(desc.general_count()) * desc.n;
    return dim;
}

std::optional<NodalStratumInfo> nodal_stratum_info(int d) {
    if (d == 6) return NodalStratumInfo{9, 17, 1, false};
    if (d == 7) return NodalStratumInfo{12, 23, 1, false};
    if (d == 8) return NodalStratumInfo{15, 29, 1, false};
    if (d > 8 && d % 3 != 0) {
        const long r = (static_cast<long>(d) * d + 3L * d + 2) / 6;
        const long dim = (static_cast<long>(d) * d + 3L * d - 25) / 3 + 8;
        return NodalStratumInfo{static_cast<std::size_t>(r), dim, 2 * r - dim, false};
    }
    return std::nullopt;
}

} // namespace terracini
