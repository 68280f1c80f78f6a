#include "terracini/segre.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>

#include "terracini/errors.hpp"
#include "terracini/linalg.hpp"
#include "terracini/matrix.hpp"
#include "terracini/rng.hpp"

namespace terracini {

std::vector<std::size_t> factor_dims(const SegrePoint& p) {
    if (p.factors.empty()) throw zero_factor_error("SegrePoint without factors");
    std::vector<std::size_t> dims;
    dims.reserve(p.factors.size());
    for (const auto& f : p.factors) dims.push_back(f.dim());
    return dims;
}

namespace {

std::size_t ambient_size(const std::vector<std::size_t>& dims) {
    std::size_t total = 1;
    for (std::size_t d : dims) total *= d + 1;
    return total;
}

// Tensor product of per-factor coordinate vectors, flattened row-major over
// the factors in order.
std::vector<Rational> tensor_row(const std::vector<const std::vector<Rational>*>& parts) {
    std::vector<Rational> out = {Rational(1)};
    for (const auto* part : parts) {
        std::vector<Rational> next;
        next.reserve(out.size() * part->size());
        for (const auto& a : out)
            for (const auto& b : *part) next.push_back(a * b);
        out = std::move(next);
    }
    return out;
}

// Greedy independent subset of the given rows, scanned in order; returns the
// original rows that extended the span.
std::vector<std::vector<Rational>> independent_subset(
    const std::vector<std::vector<Rational>>& rows) {
    std::vector<std::vector<Rational>> reduced; // echelonized survivors
    std::vector<std::size_t> lead_cols;
    std::vector<std::vector<Rational>> kept;
    for (const auto& row : rows) {
        std::vector<Rational> work = row;
        for (std::size_t k = 0; k < reduced.size(); ++k) {
            const Rational& head = work[lead_cols[k]];
            if (head == 0) continue;
            const Rational f = head / reduced[k][lead_cols[k]];
            for (std::size_t j = 0; j < work.size(); ++j) work[j] -= f * reduced[k][j];
        }
        auto lead = std::find_if(work.begin(), work.end(),
                                 [](const Rational& q) { return q != 0; });
        if (lead == work.end()) continue;
        lead_cols.push_back(static_cast<std::size_t>(lead - work.begin()));
        reduced.push_back(std::move(work));
        kept.push_back(row);
    }
    return kept;
}

} // namespace

std::vector<std::vector<Rational>> segre_tangent_rows(const SegrePoint& p) {
    const auto dims = factor_dims(p);
    const std::size_t k = p.factors.size();

    std::vector<const std::vector<Rational>*> parts(k);
    for (std::size_t i = 0; i < k; ++i) parts[i] = &p.factors[i].coords();

    std::vector<std::vector<Rational>> raw;
    raw.reserve(1 + std::accumulate(dims.begin(), dims.end(), k));
    raw.push_back(tensor_row(parts)); // the cone point itself
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t t = 0; t <= dims[i]; ++t) {
            std::vector<Rational> unit(dims[i] + 1, Rational(0));
            unit[t] = 1;
            auto saved = parts[i];
            parts[i] = &unit;
            raw.push_back(tensor_row(parts));
            parts[i] = saved;
        }
    }

    auto rows = independent_subset(raw);
    const std::size_t tangent_dim =
        std::accumulate(dims.begin(), dims.end(), std::size_t{1});
    if (rows.size() != tangent_dim)
        throw error("segre_tangent_rows: tangent rank off the smooth value");
    return rows;
}

SegreVerdict segre_terracini(const std::vector<SegrePoint>& points) {
    if (points.empty()) throw std::invalid_argument("segre_terracini: empty point list");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw duplicate_point_error("duplicate Segre point");
    const auto dims = factor_dims(points.front());
    for (const auto& p : points)
        if (factor_dims(p) != dims)
            throw std::invalid_argument("segre_terracini: mixed factor shapes");

    const std::size_t cols = ambient_size(dims);
    std::vector<std::vector<Rational>> stacked;
    for (const auto& p : points) {
        auto rows = segre_tangent_rows(p);
        for (auto& row : rows) stacked.push_back(std::move(row));
    }

    SegreVerdict verdict;
    verdict.r = points.size();
    verdict.ambient = static_cast<long>(cols);
    verdict.rank = static_cast<long>(rank(Mat::from_rows(stacked, cols)));
    verdict.expected = static_cast<long>(points.size()) *
                       static_cast<long>(std::accumulate(dims.begin(), dims.end(),
                                                         std::size_t{1}));
    verdict.drop = verdict.expected - verdict.rank;
    verdict.member = verdict.drop > 0;
    return verdict;
}

namespace {

ProjPoint random_p3_point(SeededRng& rng, long bound) {
    std::vector<Rational> coords;
    coords.reserve(4);
    for (int i = 0; i < 3; ++i) coords.emplace_back(rng.uniform(-bound, bound));
    coords.emplace_back(1);
    return ProjPoint(std::move(coords));
}

std::vector<std::vector<Rational>> random_invertible_4x4(SeededRng& rng) {
    for (;;) {
        std::vector<std::vector<Rational>> g(4, std::vector<Rational>(4));
        for (auto& row : g)
            for (auto& e : row) e = Rational(rng.uniform(-9, 9));
        if (rank(Mat::from_rows(g, 4)) == 4) return g;
    }
}

} // namespace

std::vector<SegrePoint> equiv_factor_config(std::size_t r, std::uint64_t seed) {
    if (r != 6)
        throw std::invalid_argument("equiv_factor_config: the construction is for r=6");
    SeededRng rng(seed);
    for (;;) {
        std::vector<ProjPoint> base;
        while (base.size() < r) {
            ProjPoint p = random_p3_point(rng, 20);
            if (std::find(base.begin(), base.end(), p) == base.end())
                base.push_back(std::move(p));
        }
        std::vector<std::vector<std::vector<Rational>>> g;
        for (int i = 0; i < 3; ++i) g.push_back(random_invertible_4x4(rng));

        std::vector<SegrePoint> points;
        points.reserve(r);
        for (const auto& q : base) {
            SegrePoint sp;
            for (int i = 0; i < 3; ++i) sp.factors.push_back(apply_transform(g[i], q));
            points.push_back(std::move(sp));
        }
        bool distinct = true;
        for (std::size_t i = 0; i < points.size() && distinct; ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j)
                if (points[i] == points[j]) {
                    distinct = false;
                    break;
                }
        if (distinct) return points;
    }
}

namespace {

bool proj_less(const ProjPoint& a, const ProjPoint& b) {
    for (std::size_t i = 0; i < a.coords().size(); ++i) {
        const int c = mpq_cmp(a.coords()[i].get_mpq_t(), b.coords()[i].get_mpq_t());
        if (c != 0) return c < 0;
    }
    return false;
}

// m+2 points, every m+1 of which are linearly independent.
bool is_frame(const std::vector<ProjPoint>& pts) {
    const std::size_t m = pts.front().dim();
    if (pts.size() != m + 2) return false;
    for (std::size_t skip = 0; skip < pts.size(); ++skip) {
        std::vector<std::vector<Rational>> rows;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (i != skip) rows.push_back(pts[i].coords());
        if (rank(Mat::from_rows(rows, m + 1)) != m + 1) return false;
    }
    return true;
}

// Transform sending the standard frame (e_0, ..., e_m, sum e_i) to the given
// frame tuple, as a matrix; empty when the tuple is degenerate.
std::optional<Mat> frame_transform(const std::vector<ProjPoint>& frame) {
    const std::size_t m = frame.front().dim();
    // columns p_0 .. p_m scaled so their sum is the last frame point
    std::vector<std::vector<Rational>> cols_mat(m + 1, std::vector<Rational>(m + 1));
    for (std::size_t j = 0; j <= m; ++j)
        for (std::size_t i = 0; i <= m; ++i) cols_mat[i][j] = frame[j].coords()[i];
    auto inv = invert(Mat::from_rows(cols_mat, m + 1));
    if (!inv) return std::nullopt;
    const auto lambda = mat_vec(*inv, frame[m + 1].coords());
    for (const auto& l : lambda)
        if (l == 0) return std::nullopt;
    std::vector<Rational> entries;
    entries.reserve((m + 1) * (m + 1));
    for (std::size_t i = 0; i <= m; ++i)
        for (std::size_t j = 0; j <= m; ++j) entries.push_back(cols_mat[i][j] * lambda[j]);
    return Mat(m + 1, m + 1, std::move(entries));
}

std::vector<ProjPoint> transform_all(const Mat& g, const std::vector<ProjPoint>& pts) {
    std::vector<std::vector<Rational>> rows(g.rows(), std::vector<Rational>(g.cols()));
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) rows[i][j] = g.at(i, j);
    std::vector<ProjPoint> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(apply_transform(rows, p));
    std::sort(out.begin(), out.end(), proj_less);
    return out;
}

std::optional<std::vector<ProjPoint>> normalized_by_some_frame(
    const std::vector<ProjPoint>& pts) {
    const std::size_t m = pts.front().dim();
    if (pts.size() < m + 2) return std::nullopt;
    std::vector<std::size_t> idx(m + 2);
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    // first frame in lexicographic subset order is canonical enough: any
    // frame gives the same answer to the set-equality test downstream
    const std::size_t s = pts.size();
    for (;;) {
        std::vector<ProjPoint> tuple;
        for (std::size_t i : idx) tuple.push_back(pts[i]);
        if (is_frame(tuple)) {
            if (auto g = frame_transform(tuple)) {
                if (auto h = invert(*g)) return transform_all(*h, pts);
            }
        }
        std::size_t k = idx.size();
        bool advanced = false;
        while (k-- > 0) {
            if (idx[k] != k + s - idx.size()) {
                ++idx[k];
                for (std::size_t j = k + 1; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return std::nullopt;
    }
}

} // namespace

EquivalenceResult projectively_equivalent(const std::vector<ProjPoint>& a,
                                          const std::vector<ProjPoint>& b) {
    if (a.size() != b.size() || a.empty()) return EquivalenceResult::not_equivalent;
    const std::size_t m = a.front().dim();
    for (const auto& p : a)
        if (p.dim() != m) throw std::invalid_argument("mixed ambient dimensions");
    for (const auto& p : b)
        if (p.dim() != m) throw std::invalid_argument("mixed ambient dimensions");

    auto a_norm = normalized_by_some_frame(a);
    const std::vector<ProjPoint>* second = &b;
    if (!a_norm) {
        a_norm = normalized_by_some_frame(b);
        second = &a;
        if (!a_norm) return EquivalenceResult::indeterminate;
    }

    // enumerate ordered frame tuples of the second set; a transform matching
    // the sets must send the first set's frame to one of them
    const std::size_t s = second->size();
    std::vector<bool> used(s, false);
    // ordered (m+2)-tuples via simple recursion
    std::vector<std::size_t> stack;
    stack.reserve(m + 2);
    std::function<bool()> search = [&]() -> bool {
        if (stack.size() == m + 2) {
            std::vector<ProjPoint> tuple;
            for (std::size_t i : stack) tuple.push_back((*second)[i]);
            if (!is_frame(tuple)) return false;
            auto g = frame_transform(tuple);
            if (!g) return false;
            auto h = invert(*g);
            if (!h) return false;
            return transform_all(*h, *second) == *a_norm;
        }
        for (std::size_t i = 0; i < s; ++i) {
            if (used[i]) continue;
            used[i] = true;
            stack.push_back(i);
            if (search()) return true;
            stack.pop_back();
            used[i] = false;
        }
        return false;
    };
    return search() ? EquivalenceResult::equivalent : EquivalenceResult::not_equivalent;
}

ConjectureEvidence conjecture_sweep(int samples, std::uint64_t seed) {
    ConjectureEvidence out;
    out.samples = samples;
    for (int i = 0; i < samples; ++i) {
        const std::uint64_t item_seed = SeededRng::derive(seed, static_cast<std::uint64_t>(i));
        SeededRng rng(item_seed);
        std::vector<SegrePoint> config;
        switch (i % 3) {
        case 0: // all three projections equivalent by construction
            config = equiv_factor_config(6, rng.next());
            break;
        case 1: { // only the first two projections related by construction
            std::vector<ProjPoint> base;
            while (base.size() < 6) {
                ProjPoint p = random_p3_point(rng, 20);
                if (std::find(base.begin(), base.end(), p) == base.end())
                    base.push_back(std::move(p));
            }
            auto g1 = random_invertible_4x4(rng);
            auto g2 = random_invertible_4x4(rng);
            for (const auto& q : base) {
                SegrePoint sp;
                sp.factors.push_back(apply_transform(g1, q));
                sp.factors.push_back(apply_transform(g2, q));
                sp.factors.push_back(random_p3_point(rng, 20));
                config.push_back(std::move(sp));
            }
            break;
        }
        default: { // perturbation of a constructed member
            config = equiv_factor_config(6, rng.next());
            config[0].factors[2] = random_p3_point(rng, 20);
            break;
        }
        }

        const auto verdict = segre_terracini(config);
        if (!verdict.member) continue;
        ++out.members;

        std::vector<std::vector<ProjPoint>> projections(3);
        for (const auto& p : config)
            for (int f = 0; f < 3; ++f) projections[f].push_back(p.factors[f]);

        int equivalent_pairs = 0;
        bool indeterminate = false;
        for (int x = 0; x < 3; ++x)
            for (int y = x + 1; y < 3; ++y) {
                const auto res = projectively_equivalent(projections[x], projections[y]);
                if (res == EquivalenceResult::equivalent) ++equivalent_pairs;
                if (res == EquivalenceResult::indeterminate) indeterminate = true;
            }
        if (indeterminate) ++out.equivalence_indeterminate;
        if (equivalent_pairs >= 1) ++out.members_with_equivalent_pair;
        if (equivalent_pairs == 3) ++out.members_with_all_equivalent;
    }
    return out;
}

} // namespace terracini
