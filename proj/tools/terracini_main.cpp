// terracini: exact-arithmetic membership tests for Terracini loci of
// Veronese and Segre embeddings, plus generators and batch scans.
//
// Exit codes: 0 non-member (or informational command), 10 member,
// 64 usage error, 65 data/input error, 70 internal error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "terracini/configurations.hpp"
#include "terracini/errors.hpp"
#include "terracini/pointset_io.hpp"
#include "terracini/reporting.hpp"
#include "terracini/rng.hpp"

namespace {

constexpr int kExitMember = 10;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitInternal = 70;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw terracini::error("cannot write output file: " + out_path);
    out << text;
}

struct CheckOptions {
    std::string points_path;
    std::string family;
    int n = 2;
    int degree = 0;
    std::uint64_t seed = 0;
    bool seed_set = false;
    long bound = 1000;
    std::string mode = "exact";
    int primes = 2;
    std::string format = "json";
    std::string out_path;
};

int run_check(const CheckOptions& opt) {
    std::vector<terracini::ProjPoint> points;
    std::string source;
    int n = opt.n;
    if (!opt.points_path.empty() && !opt.family.empty())
        throw terracini::parse_error("check: --points and --family are exclusive");
    if (!opt.points_path.empty()) {
        const auto file = terracini::load_point_set(opt.points_path);
        n = file.n;
        points = file.points();
        source = "file:" + opt.points_path;
    } else {
        if (opt.family.empty())
            throw terracini::parse_error("check: need --points or --family");
        if (!opt.seed_set)
            throw terracini::parse_error("check: generators need an explicit --seed");
        const auto desc = terracini::parse_family(opt.family, n);
        points = terracini::with_constrained_subset(desc, opt.seed, opt.bound);
        source = "family:" + terracini::family_to_string(desc) +
                 " seed=" + std::to_string(opt.seed);
    }

    auto report = terracini::check_points(points, n, opt.degree, source,
                                          opt.mode == "exact", opt.primes, opt.seed + 1);
    if (opt.seed_set) report.seed = opt.seed;
    emit(terracini::write_run_report(report), opt.out_path);
    return report.verdict->member ? kExitMember : 0;
}

struct DaggerOptions {
    std::string points_path;
    int degree = 0;
};

int run_dagger(const DaggerOptions& opt) {
    const auto file = terracini::load_point_set(opt.points_path);
    const auto points = file.points();
    const auto report = terracini::dagger(points, file.n, opt.degree);
    std::cout << "point | h1(I_{S u 2p}(" << opt.degree << ")) | pass\n";
    for (const auto& entry : report.entries) {
        std::cout << points[entry.point_index].to_string() << " | " << entry.h1 << " | "
                  << (entry.passes ? "yes" : "no") << '\n';
    }
    std::cout << "overall: " << (report.overall ? "pass" : "fail") << '\n';
    return report.overall ? 0 : kExitMember;
}

struct ScanOptions {
    int n = 2;
    int degree = 0;
    std::string family;
    int count = 1;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int jobs = 1;
    long bound = 1000;
    std::string format = "csv";
    std::string out_path;
};

int run_scan_cmd(const ScanOptions& opt) {
    if (!opt.seed_set)
        throw terracini::parse_error("scan: generators need an explicit --seed");
    terracini::ScanParams params;
    params.n = opt.n;
    params.d = opt.degree;
    params.family = terracini::parse_family(opt.family, opt.n);
    params.count = opt.count;
    params.seed = opt.seed;
    params.jobs = opt.jobs;
    params.bound = opt.bound;
    const auto result = terracini::run_scan(params);
    emit(opt.format == "json" ? terracini::scan_to_json(result) : result.csv,
         opt.out_path);
    return 0;
}

struct GenOptions {
    int n = 2;
    std::string family;
    std::uint64_t seed = 0;
    bool seed_set = false;
    long bound = 1000;
    std::string out_path;
};

int run_gen(const GenOptions& opt) {
    if (!opt.seed_set)
        throw terracini::parse_error("gen: generators need an explicit --seed");
    const auto desc = terracini::parse_family(opt.family, opt.n);
    const auto points = terracini::with_constrained_subset(desc, opt.seed, opt.bound);
    terracini::PointSetFile file;
    file.n = opt.n;
    for (const auto& p : points) file.items.push_back({p, terracini::PointKind::reduced});
    emit(terracini::write_point_set(file), opt.out_path);
    return 0;
}

struct StrataOptions {
    int n = 2;
    int degree = 0;
    std::uint64_t seed = 1;
};

int run_strata(const StrataOptions& opt) {
    const auto rows = terracini::strata_table(opt.n, opt.degree, opt.seed);
    std::cout << terracini::strata_to_text(rows);
    return 0;
}

struct SegreOptions {
    std::string points_path;
    std::string family;
    std::string factors = "3,3,3";
    int count = 1;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int conjecture_samples = 0;
    std::string out_path;
};

std::size_t parse_small_count(const std::string& text, const std::string& what) {
    if (text.empty() || text.size() > 4 ||
        text.find_first_not_of("0123456789") != std::string::npos)
        throw terracini::parse_error("bad " + what + ": '" + text + "'");
    return static_cast<std::size_t>(std::stoul(text));
}

std::vector<std::size_t> parse_factors(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_small_count(item, "--factors entry"));
    if (out.empty()) throw terracini::parse_error("segre: bad --factors");
    for (std::size_t d : out)
        if (d < 1) throw terracini::parse_error("segre: factor dimensions must be >= 1");
    return out;
}

int run_segre(const SegreOptions& opt) {
    if (opt.conjecture_samples > 0) {
        if (!opt.seed_set)
            throw terracini::parse_error("segre: the evidence sweep needs --seed");
        const auto ev =
            terracini::conjecture_sweep(opt.conjecture_samples, opt.seed);
        std::cout << "samples=" << ev.samples << " members=" << ev.members
                  << " equivalent_pair=" << ev.members_with_equivalent_pair
                  << " all_equivalent=" << ev.members_with_all_equivalent
                  << " indeterminate=" << ev.equivalence_indeterminate << '\n';
        return 0;
    }
    if (!opt.points_path.empty()) {
        const auto file = terracini::load_segre_tuples(opt.points_path);
        const auto report =
            terracini::check_segre(file.points, "file:" + opt.points_path);
        emit(terracini::write_run_report(report), opt.out_path);
        return report.segre->member ? kExitMember : 0;
    }

    if (!opt.seed_set)
        throw terracini::parse_error("segre: generators need an explicit --seed");
    const auto dims = parse_factors(opt.factors);
    std::ostringstream csv;
    csv << "index,item_seed,rank,expected,drop,member\n";
    for (int i = 0; i < opt.count; ++i) {
        const std::uint64_t item_seed =
            terracini::SeededRng::derive(opt.seed, static_cast<std::uint64_t>(i));
        std::vector<terracini::SegrePoint> config;
        if (opt.family == "equivalent(6)") {
            config = terracini::equiv_factor_config(6, item_seed);
        } else {
            // random(r) on the given factors
            const auto open = opt.family.find('(');
            if (open == std::string::npos || opt.family.substr(0, open) != "random" ||
                opt.family.back() != ')')
                throw terracini::parse_error(
                    "segre: family must be random(r) or equivalent(6)");
            const std::size_t r = parse_small_count(
                opt.family.substr(open + 1, opt.family.size() - open - 2), "family count");
            if (r < 1) throw terracini::parse_error("segre: need r >= 1");
            terracini::SeededRng rng(item_seed);
            while (config.size() < r) {
                terracini::SegrePoint p;
                for (std::size_t f = 0; f < dims.size(); ++f) {
                    std::vector<terracini::Rational> coords;
                    for (std::size_t c = 0; c < dims[f]; ++c)
                        coords.emplace_back(rng.uniform(-20, 20));
                    coords.emplace_back(1);
                    p.factors.emplace_back(std::move(coords));
                }
                if (std::find(config.begin(), config.end(), p) == config.end())
                    config.push_back(std::move(p));
            }
        }
        const auto verdict = terracini::segre_terracini(config);
        csv << i << ',' << item_seed << ',' << verdict.rank << ',' << verdict.expected
            << ',' << verdict.drop << ',' << (verdict.member ? 1 : 0) << '\n';
    }
    emit(csv.str(), opt.out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Terracini-locus membership tests on Veronese and Segre embeddings"};
    app.require_subcommand(1);

    CheckOptions check;
    auto* check_cmd = app.add_subcommand("check", "decide membership of a point set");
    check_cmd->add_option("--points", check.points_path, "point-set JSON file");
    check_cmd->add_option("--family", check.family, "generator descriptor");
    check_cmd->add_option("--n", check.n, "ambient projective dimension")->capture_default_str();
    check_cmd->add_option("--degree", check.degree, "degree d")->required();
    check_cmd->add_option("--seed", check.seed, "generator seed")
        ->each([&check](const std::string&) { check.seed_set = true; });
    check_cmd->add_option("--bound", check.bound, "coordinate height bound")
        ->capture_default_str();
    check_cmd->add_option("--mode", check.mode, "exact|modular")
        ->check(CLI::IsMember({"exact", "modular"}))
        ->capture_default_str();
    check_cmd->add_option("--primes", check.primes, "prime count for modular mode")
        ->capture_default_str();
    check_cmd->add_option("--format", check.format, "json")
        ->check(CLI::IsMember({"json"}))
        ->capture_default_str();
    check_cmd->add_option("--out", check.out_path, "write the report here");

    DaggerOptions dag;
    auto* dagger_cmd =
        app.add_subcommand("dagger", "per-point independence table for S u 2p");
    dagger_cmd->add_option("--points", dag.points_path, "point-set JSON file")->required();
    dagger_cmd->add_option("--degree", dag.degree, "degree d")->required();

    ScanOptions scan;
    auto* scan_cmd = app.add_subcommand("scan", "classify many samples of a family");
    scan_cmd->add_option("--n", scan.n, "ambient projective dimension")->capture_default_str();
    scan_cmd->add_option("--degree", scan.degree, "degree d")->required();
    scan_cmd->add_option("--family", scan.family, "generator descriptor")->required();
    scan_cmd->add_option("--count", scan.count, "sample count")->required();
    scan_cmd->add_option("--seed", scan.seed, "scan seed")
        ->each([&scan](const std::string&) { scan.seed_set = true; });
    scan_cmd->add_option("--jobs", scan.jobs, "worker threads")->capture_default_str();
    scan_cmd->add_option("--bound", scan.bound, "coordinate height bound")
        ->capture_default_str();
    scan_cmd->add_option("--format", scan.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    scan_cmd->add_option("--out", scan.out_path, "write the output here");

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "emit one family sample as a point-set file");
    gen_cmd->add_option("--n", gen.n, "ambient projective dimension")->capture_default_str();
    gen_cmd->add_option("--family", gen.family, "generator descriptor")->required();
    gen_cmd->add_option("--seed", gen.seed, "generator seed")
        ->each([&gen](const std::string&) { gen.seed_set = true; });
    gen_cmd->add_option("--bound", gen.bound, "coordinate height bound")
        ->capture_default_str();
    gen_cmd->add_option("--out", gen.out_path, "write the point set here");

    StrataOptions strata;
    auto* strata_cmd = app.add_subcommand("strata", "named strata table for (n, d)");
    strata_cmd->add_option("--n", strata.n, "ambient projective dimension")
        ->capture_default_str();
    strata_cmd->add_option("--degree", strata.degree, "degree d")->required();
    strata_cmd->add_option("--seed", strata.seed, "spot-check seed")->capture_default_str();

    SegreOptions segre;
    auto* segre_cmd =
        app.add_subcommand("segre", "tangent-span rank tests on Segre embeddings");
    segre_cmd->add_option("--points", segre.points_path, "point-tuple JSON file");
    segre_cmd->add_option("--family", segre.family, "random(r) or equivalent(6)");
    segre_cmd->add_option("--factors", segre.factors, "factor dimensions, e.g. 3,3,3")
        ->capture_default_str();
    segre_cmd->add_option("--count", segre.count, "sample count")->capture_default_str();
    segre_cmd->add_option("--seed", segre.seed, "generator seed")
        ->each([&segre](const std::string&) { segre.seed_set = true; });
    segre_cmd->add_option("--conjecture", segre.conjecture_samples,
                          "run the equivalence-evidence sweep with this many samples");
    segre_cmd->add_option("--out", segre.out_path, "write the output here");

    try {
        app.parse(argc, argv);
        if (check_cmd->parsed()) return run_check(check);
        if (dagger_cmd->parsed()) return run_dagger(dag);
        if (scan_cmd->parsed()) return run_scan_cmd(scan);
        if (gen_cmd->parsed()) return run_gen(gen);
        if (strata_cmd->parsed()) return run_strata(strata);
        if (segre_cmd->parsed()) return run_segre(segre);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const terracini::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
