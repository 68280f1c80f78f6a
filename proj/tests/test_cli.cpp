#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "terracini/pointset_io.hpp"
#include "terracini/reporting.hpp"

using namespace terracini;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(TERRACINI_BIN) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.output.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

TEST_CASE("check: aligned triple is a member with exit code 10") {
    PointSetFile file;
    file.n = 2;
    for (long x : {0L, 1L, 2L})
        file.items.push_back({ProjPoint(std::vector<Rational>{Rational(x), Rational(0),
                                                              Rational(1)}),
                              PointKind::reduced});
    const auto path = temp_file("terracini_aligned3.json");
    save_point_set(path.string(), file);

    const auto result = run("check --points " + path.string() + " --degree 3");
    CHECK(result.exit_code == 10);
    const auto report = parse_run_report(result.output);
    CHECK(report.verdict->member);
    CHECK(*report.verdict->defect == 2);
    CHECK(report.system->h0 == 3);

    // the same triple drops out at d=5
    const auto quintic = run("check --points " + path.string() + " --degree 5");
    CHECK(quintic.exit_code == 0);
}

TEST_CASE("check: generated general 6-point set at d=5 excludes via meta") {
    const auto result = run("check --family 'general(6)' --n 2 --seed 42 --degree 5");
    CHECK(result.exit_code == 0);
    const auto report = parse_run_report(result.output);
    CHECK_FALSE(report.verdict->member);
    CHECK(report.verdict->evidence.kind == Evidence::Kind::meta);
    CHECK(report.verdict->evidence.q == 2);
}

TEST_CASE("check requires a seed for generator input") {
    const auto result = run("check --family 'general(6)' --n 2 --degree 5");
    CHECK(result.exit_code == 65);
}

TEST_CASE("usage errors exit with 64") {
    CHECK(run("check --points nowhere.json").exit_code == 64); // missing --degree
    CHECK(run("frobnicate").exit_code == 64);
    CHECK(run("").exit_code == 64);
}

TEST_CASE("data errors exit with 65") {
    CHECK(run("check --points /nonexistent/file.json --degree 3").exit_code == 65);
    CHECK(run("segre --family 'random(6)' --factors a,b --seed 1").exit_code == 65);
    CHECK(run("check --points x.json --family 'general(3)' --degree 3").exit_code == 65);
}

TEST_CASE("gen then check round trip") {
    const auto path = temp_file("terracini_gen_roundtrip.json");
    const auto gen = run("gen --family 'conic(6)+general(1)' --n 2 --seed 9 --out " +
                         path.string());
    REQUIRE(gen.exit_code == 0);
    const auto file = load_point_set(path.string());
    CHECK(file.items.size() == 7);

    const auto check = run("check --points " + path.string() + " --degree 5");
    CHECK(check.exit_code == 10); // 6 on a conic: member
}

TEST_CASE("nine base points of a cubic pencil are a sextic member") {
    const auto result = run("check --family ci_cubics --n 2 --seed 8 --degree 6");
    CHECK(result.exit_code == 10);
    const auto report = parse_run_report(result.output);
    CHECK(report.verdict->member);
    CHECK(report.system->h0 == 3);
    CHECK(*report.verdict->defect >= 2);
}

TEST_CASE("scan emits byte-identical CSV under different job counts") {
    const auto out1 = temp_file("terracini_scan_j1.csv");
    const auto out4 = temp_file("terracini_scan_j4.csv");
    const std::string base =
        "scan --n 2 --degree 5 --family 'general(7)' --count 8 --seed 11 --out ";
    REQUIRE(run(base + out1.string() + " --jobs 1").exit_code == 0);
    REQUIRE(run(base + out4.string() + " --jobs 4").exit_code == 0);
    const auto csv1 = slurp(out1);
    CHECK(csv1 == slurp(out4));
    CHECK(csv1.find("# members=0/8") != std::string::npos);
}

TEST_CASE("dagger prints the per-point table") {
    PointSetFile file;
    file.n = 2;
    const long coords[4][2] = {{0, 0}, {1, 0}, {0, 1}, {3, 2}};
    for (const auto& c : coords)
        file.items.push_back({ProjPoint(std::vector<Rational>{Rational(c[0]),
                                                              Rational(c[1]), Rational(1)}),
                              PointKind::reduced});
    const auto path = temp_file("terracini_dagger4.json");
    save_point_set(path.string(), file);

    const auto result = run("dagger --points " + path.string() + " --degree 3");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("overall: pass") != std::string::npos);

    // aligned quadruple at d=2 fails the per-point test
    PointSetFile bad;
    bad.n = 2;
    for (long x : {0L, 1L, 2L, 3L})
        bad.items.push_back({ProjPoint(std::vector<Rational>{Rational(x), Rational(0),
                                                             Rational(1)}),
                             PointKind::reduced});
    const auto bad_path = temp_file("terracini_dagger_aligned.json");
    save_point_set(bad_path.string(), bad);
    const auto failing = run("dagger --points " + bad_path.string() + " --degree 2");
    CHECK(failing.exit_code == 10);
    CHECK(failing.output.find("overall: fail") != std::string::npos);
}

TEST_CASE("strata prints the (2,5) table") {
    const auto result = run("strata --n 2 --degree 5");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("conic(6)") != std::string::npos);
    CHECK(result.output.find("line(4)") != std::string::npos);
}

TEST_CASE("segre point-tuple file input") {
    SegreTupleFile file;
    file.factor_dims = {1, 1, 1};
    for (long t : {0L, 1L}) {
        SegrePoint p;
        for (int f = 0; f < 3; ++f)
            p.factors.push_back(
                ProjPoint(std::vector<Rational>{Rational(t + f), Rational(1)}));
        file.points.push_back(std::move(p));
    }
    const auto path = temp_file("terracini_tuples.json");
    std::ofstream(path) << write_segre_tuples(file);

    const auto result = run("segre --points " + path.string());
    CHECK(result.exit_code == 0); // two generic points: full rank 8
    const auto report = parse_run_report(result.output);
    CHECK(report.segre->rank == 8);
    CHECK_FALSE(report.segre->member);
}

TEST_CASE("segre family sweeps") {
    const auto random = run("segre --family 'random(6)' --seed 3 --count 3");
    CHECK(random.exit_code == 0);
    CHECK(random.output.find(",60,60,0,0") != std::string::npos);

    const auto equiv = run("segre --family 'equivalent(6)' --seed 3 --count 2");
    CHECK(equiv.exit_code == 0);
    CHECK(equiv.output.find(",56,60,4,1") != std::string::npos);

    const auto sweep = run("segre --conjecture 3 --seed 5");
    CHECK(sweep.exit_code == 0);
    CHECK(sweep.output.find("samples=3") != std::string::npos);
}
