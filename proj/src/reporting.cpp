#include "terracini/reporting.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "terracini/errors.hpp"
#include "terracini/linalg.hpp"

namespace terracini {

using nlohmann::json;

namespace {

json system_to_json(const LinearSystemReport& s) {
    return json{{"n", s.n},   {"d", s.d},   {"length", s.length},
                {"rank", s.rank}, {"h0", s.h0}, {"h1", s.h1},
                {"expected_h0", s.expected_h0}, {"defect", s.defect}};
}

LinearSystemReport system_from_json(const json& j) {
    LinearSystemReport s;
    s.n = j.at("n").get<int>();
    s.d = j.at("d").get<int>();
    s.length = j.at("length").get<long>();
    s.rank = j.at("rank").get<long>();
    s.h0 = j.at("h0").get<long>();
    s.h1 = j.at("h1").get<long>();
    s.expected_h0 = j.at("expected_h0").get<long>();
    s.defect = j.at("defect").get<long>();
    return s;
}

std::string evidence_kind_name(Evidence::Kind k) {
    switch (k) {
    case Evidence::Kind::direct: return "direct";
    case Evidence::Kind::split: return "split";
    case Evidence::Kind::meta: return "meta";
    case Evidence::Kind::product: return "product";
    case Evidence::Kind::augment: return "augment";
    }
    return "?";
}

Evidence::Kind evidence_kind_from_name(const std::string& name) {
    if (name == "direct") return Evidence::Kind::direct;
    if (name == "split") return Evidence::Kind::split;
    if (name == "meta") return Evidence::Kind::meta;
    if (name == "product") return Evidence::Kind::product;
    if (name == "augment") return Evidence::Kind::augment;
    throw parse_error("report: unknown evidence kind '" + name + "'");
}

json verdict_to_json(const TerraciniVerdict& v) {
    json ev{{"kind", evidence_kind_name(v.evidence.kind)},
            {"q", v.evidence.q},
            {"u", v.evidence.u},
            {"witness", v.evidence.witness},
            {"text", v.evidence.to_string()}};
    json out{{"member", v.member}, {"evidence", std::move(ev)},
             {"ah_dense_cell", v.ah_dense_cell}};
    if (v.defect) out["defect"] = *v.defect;
    if (v.report) out["system"] = system_to_json(*v.report);
    return out;
}

TerraciniVerdict verdict_from_json(const json& j) {
    TerraciniVerdict v;
    v.member = j.at("member").get<bool>();
    v.ah_dense_cell = j.at("ah_dense_cell").get<bool>();
    const json& ev = j.at("evidence");
    v.evidence.kind = evidence_kind_from_name(ev.at("kind").get<std::string>());
    v.evidence.q = ev.at("q").get<int>();
    v.evidence.u = ev.at("u").get<int>();
    v.evidence.witness = ev.at("witness").get<std::vector<std::size_t>>();
    if (j.contains("defect")) v.defect = j.at("defect").get<long>();
    if (j.contains("system")) v.report = system_from_json(j.at("system"));
    return v;
}

json segre_to_json(const SegreVerdict& v) {
    return json{{"r", v.r},         {"ambient", v.ambient}, {"rank", v.rank},
                {"expected", v.expected}, {"member", v.member}, {"drop", v.drop}};
}

SegreVerdict segre_from_json(const json& j) {
    SegreVerdict v;
    v.r = j.at("r").get<std::size_t>();
    v.ambient = j.at("ambient").get<long>();
    v.rank = j.at("rank").get<long>();
    v.expected = j.at("expected").get<long>();
    v.member = j.at("member").get<bool>();
    v.drop = j.at("drop").get<long>();
    return v;
}

} // namespace

std::string write_run_report(const RunReport& report) {
    json doc;
    doc["schema_version"] = report.schema_version;
    doc["command"] = report.command;
    doc["source"] = report.source;
    doc["n"] = report.n;
    doc["d"] = report.d;
    doc["r"] = report.r;
    if (report.seed) doc["seed"] = *report.seed;
    doc["mode"]["arithmetic"] = report.mode.exact ? "exact" : "modular";
    doc["mode"]["primes"] = report.mode.primes;
    doc["mode"]["verified"] = report.mode.verified;
    if (report.system) doc["system"] = system_to_json(*report.system);
    if (report.verdict) doc["verdict"] = verdict_to_json(*report.verdict);
    if (report.segre) doc["segre"] = segre_to_json(*report.segre);
    json trail = json::array();
    for (const auto& t : report.trail)
        trail.push_back(json{{"criterion", t.name}, {"fired", t.fired},
                             {"evidence", t.evidence}});
    doc["criteria_trail"] = std::move(trail);
    doc["timing_ms"] = report.timing_ms;
    return doc.dump(2) + "\n";
}

RunReport parse_run_report(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw parse_error("report: invalid JSON");
    RunReport report;
    report.schema_version = doc.at("schema_version").get<int>();
    if (report.schema_version != 1)
        throw parse_error("report: unsupported schema_version");
    report.command = doc.at("command").get<std::string>();
    report.source = doc.at("source").get<std::string>();
    report.n = doc.at("n").get<int>();
    report.d = doc.at("d").get<int>();
    report.r = doc.at("r").get<std::size_t>();
    if (doc.contains("seed")) report.seed = doc.at("seed").get<std::uint64_t>();
    report.mode.exact = doc.at("mode").at("arithmetic").get<std::string>() == "exact";
    report.mode.primes = doc.at("mode").at("primes").get<std::vector<std::uint64_t>>();
    report.mode.verified = doc.at("mode").at("verified").get<bool>();
    if (doc.contains("system")) report.system = system_from_json(doc.at("system"));
    if (doc.contains("verdict")) report.verdict = verdict_from_json(doc.at("verdict"));
    if (doc.contains("segre")) report.segre = segre_from_json(doc.at("segre"));
    for (const auto& t : doc.at("criteria_trail"))
        report.trail.push_back({t.at("criterion").get<std::string>(),
                                t.at("fired").get<bool>(),
                                t.at("evidence").get<std::string>()});
    report.timing_ms = doc.at("timing_ms").get<long>();
    return report;
}

RunReport check_points(const std::vector<ProjPoint>& points, int n, int d,
                       const std::string& source, bool exact_mode, int prime_count,
                       std::uint64_t prime_seed) {
    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    report.command = "check";
    report.source = source;
    report.n = n;
    report.d = d;
    report.r = points.size();

    const SchemeSpec doubled = SchemeSpec::doubled(n, points);
    if (exact_mode) {
        std::vector<CriterionTrial> trail;
        TerraciniVerdict verdict = classify_with_trail(points, n, d, trail);
        const LinearSystemReport system =
            verdict.report ? *verdict.report : cohomology(doubled, d);
        if (verdict.member != (system.defect > 0))
            throw error("check_points: criterion disagrees with the direct rank");
        verdict.defect = system.defect;
        report.mode.exact = true;
        report.mode.verified = true;
        report.system = system;
        report.verdict = verdict;
        report.trail = std::move(trail);
    } else {
        // modular fast path: everything is read off the max rank over k
        // random primes. The rank can only drop mod p, so the defect can
        // only be overestimated; the report says so unless a second prime
        // confirms the value.
        report.mode.exact = false;
        SeededRng rng(prime_seed);
        const Mat m = conditions_matrix(doubled, d);
        long best = 0;
        int agree = 0;
        for (int i = 0; i < prime_count; ++i) {
            std::uint64_t p = 0;
            long rk = -1;
            for (int tries = 0; tries < 16 && rk < 0; ++tries) {
                p = random_prime_30bit(rng);
                try {
                    rk = static_cast<long>(rank_mod_p(m, p));
                } catch (const bad_prime_error&) {
                    rk = -1;
                }
            }
            if (rk < 0) continue;
            report.mode.primes.push_back(p);
            if (rk > best) {
                best = rk;
                agree = 1;
            } else if (rk == best) {
                ++agree;
            }
        }
        report.mode.verified = agree >= 2;

        LinearSystemReport system;
        system.n = n;
        system.d = d;
        system.length = static_cast<long>(doubled.length());
        system.rank = best;
        system.h0 = dim_forms(n, d) - best;
        system.h1 = system.length - best;
        system.expected_h0 = std::max(0L, dim_forms(n, d) - system.length);
        system.defect = system.length - best;

        TerraciniVerdict verdict;
        verdict.member = system.defect > 0;
        verdict.defect = system.defect;
        verdict.evidence.kind = Evidence::Kind::direct;
        const int r = static_cast<int>(points.size());
        verdict.ah_dense_cell = (d >= 2 && r >= 2) && ah_defective(n, d, r);
        report.system = system;
        report.verdict = verdict;
        report.trail.push_back({"modular-rank", true, "direct"});
    }
    report.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    return report;
}

RunReport check_segre(const std::vector<SegrePoint>& points, const std::string& source) {
    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    report.command = "segre";
    report.source = source;
    report.r = points.size();
    report.segre = segre_terracini(points);
    report.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    return report;
}

namespace {

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    return out + "\"";
}

} // namespace

ScanResult run_scan(const ScanParams& params) {
    if (params.count < 1) throw std::invalid_argument("run_scan: count must be >= 1");
    const int jobs = std::max(1, params.jobs);

    ScanResult result;
    result.params = params;
    result.rows.resize(static_cast<std::size_t>(params.count));

    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::string failure;
    std::mutex failure_mutex;

    auto work = [&]() {
        for (;;) {
            const int index = next.fetch_add(1);
            if (index >= params.count || failed.load()) return;
            try {
                const std::uint64_t item_seed =
                    SeededRng::derive(params.seed, static_cast<std::uint64_t>(index));
                const auto points =
                    with_constrained_subset(params.family, item_seed, params.bound);
                const auto verdict = classify(points, params.n, params.d);
                const LinearSystemReport rep =
                    verdict.report
                        ? *verdict.report
                        : cohomology(SchemeSpec::doubled(params.n, points), params.d);
                if (verdict.member != (rep.defect > 0))
                    throw error("run_scan: criterion disagrees with the direct rank");
                ScanRow row;
                row.index = index;
                row.item_seed = item_seed;
                row.member = verdict.member;
                row.defect = rep.defect;
                row.h0 = rep.h0;
                row.rank = rep.rank;
                row.evidence = verdict.evidence.to_string();
                result.rows[static_cast<std::size_t>(index)] = std::move(row);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                failed.store(true);
                if (failure.empty()) failure = e.what();
                return;
            }
        }
    };

    if (jobs == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int i = 0; i < jobs; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (failed.load()) throw error("run_scan: " + failure);

    std::ostringstream csv;
    csv << "index,item_seed,n,d,r,family,member,defect,h0,rank,evidence\n";
    const std::string family = family_to_string(params.family);
    for (const auto& row : result.rows) {
        if (row.member) ++result.member_count;
        ++result.defect_histogram[row.defect];
        csv << row.index << ',' << row.item_seed << ',' << params.n << ',' << params.d
            << ',' << params.family.r << ',' << csv_quote(family) << ','
            << (row.member ? 1 : 0) << ',' << row.defect << ',' << row.h0 << ','
            << row.rank << ',' << csv_quote(row.evidence) << '\n';
    }
    csv << "# members=" << result.member_count << "/" << params.count << '\n';
    csv << "# defect_histogram";
    for (const auto& [defect, count] : result.defect_histogram)
        csv << ' ' << defect << ':' << count;
    csv << '\n';
    result.csv = csv.str();
    return result;
}

std::string scan_to_json(const ScanResult& result) {
    json doc;
    doc["schema_version"] = 1;
    doc["n"] = result.params.n;
    doc["d"] = result.params.d;
    doc["r"] = result.params.family.r;
    doc["family"] = family_to_string(result.params.family);
    doc["seed"] = result.params.seed;
    doc["count"] = result.params.count;
    json rows = json::array();
    for (const auto& row : result.rows)
        rows.push_back(json{{"index", row.index},
                            {"item_seed", row.item_seed},
                            {"member", row.member},
                            {"defect", row.defect},
                            {"h0", row.h0},
                            {"rank", row.rank},
                            {"evidence", row.evidence}});
    doc["rows"] = std::move(rows);
    doc["members"] = result.member_count;
    json histogram = json::object();
    for (const auto& [defect, count] : result.defect_histogram)
        histogram[std::to_string(defect)] = count;
    doc["defect_histogram"] = std::move(histogram);
    return doc.dump(2) + "\n";
}

std::vector<StratumRow> strata_table(int n, int d, std::uint64_t seed) {
    if (n != 2 || d < 3 || d > 8)
        throw unsupported_cell_error("strata_table: supported cells are n=2, 3<=d<=8");

    auto desc = [&](const std::string& text) { return parse_family(text, 2); };
    auto row = [&](const std::string& family, int index, std::string note = {}) {
        FamilyDescriptor fd = desc(family);
        StratumRow out;
        out.family = family_to_string(fd);
        out.r = fd.r;
        out.dim = stratum_dimension(fd);
        out.codim = 2L * static_cast<long>(fd.r) - *out.dim;
        out.verified = true;
        const auto bound = cc3_bound(2, d, static_cast<int>(fd.r));
        out.bound_applies = bound.applies;
        out.bound_max_dim = bound.max_dim;
        const auto sample = with_constrained_subset(
            fd, SeededRng::derive(seed, static_cast<std::uint64_t>(index)));
        out.spot_member = classify(sample, 2, d).member;
        out.note = std::move(note);
        return out;
    };

    std::vector<StratumRow> rows;
    int index = 0;
    switch (d) {
    case 3:
        rows.push_back(row("line(3)", index++, "aligned triple"));
        rows.push_back(row("general(3)", index++));
        rows.push_back(row("general(2)", index++, "locus empty for r=2"));
        break;
    case 4:
        rows.push_back(row("line(3)", index++, "aligned triple"));
        rows.push_back(row("line(3)+general(1)", index++, "exactly 3 aligned"));
        rows.push_back(row("general(4)", index++));
        rows.push_back(row("general(5)", index++, "dense cell"));
        break;
    case 5:
        rows.push_back(row("line(3)", index++, "locus empty for r=3"));
        rows.push_back(row("line(4)", index++));
        rows.push_back(row("line(4)+general(1)", index++));
        rows.push_back(row("conic(6)", index++));
        rows.push_back(row("conic(6)+general(1)", index++));
        rows.push_back(row("general(7)", index++));
        break;
    default:
        break;
    }
    if (d == 6) {
        rows.push_back(row("ci_cubics", index++, "two cubics through 8 free points"));
        rows.push_back(row("general(9)", index++));
    }
    if (d >= 6) {
        if (const auto nodal = nodal_stratum_info(d)) {
            StratumRow meta;
            meta.family = "nodal_curve(d=" + std::to_string(d) + ")";
            meta.r = nodal->r;
            meta.dim = nodal->dim;
            meta.codim = nodal->codim;
            meta.verified = false; // quoted dimension count, not computable here
            const auto bound = cc3_bound(2, d, static_cast<int>(nodal->r));
            meta.bound_applies = bound.applies;
            meta.bound_max_dim = bound.max_dim;
            meta.note = "node sets of irreducible degree-" + std::to_string(d) +
                        " curves; dimension quoted, not sampled";
            rows.push_back(std::move(meta));
        }
    }
    return rows;
}

std::string strata_to_text(const std::vector<StratumRow>& rows) {
    std::ostringstream out;
    out << "family | r | dim | codim | bound(rn-n) | member(spot) | note\n";
    for (const auto& row : rows) {
        out << row.family << " | " << row.r << " | ";
        if (row.dim)
            out << *row.dim;
        else
            out << "-";
        out << " | ";
        if (row.codim)
            out << *row.codim;
        else
            out << "-";
        out << " | ";
        if (row.bound_applies)
            out << "<=" << row.bound_max_dim;
        else
            out << "n/a";
        out << " | ";
        if (row.spot_member)
            out << (*row.spot_member ? "yes" : "no");
        else
            out << (row.verified ? "-" : "unverified");
        if (!row.note.empty()) out << " | " << row.note;
        out << '\n';
    }
    return out.str();
}

} // namespace terracini
