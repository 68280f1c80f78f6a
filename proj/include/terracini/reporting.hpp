#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "terracini/conditions.hpp"
#include "terracini/configurations.hpp"
#include "terracini/segre.hpp"
#include "terracini/terracini.hpp"

namespace terracini {

/// Arithmetic backend of a run. Exact mode is authoritative; modular mode
/// reports the max rank over the sampled primes and is labeled verified only
/// when a second prime confirms it.
struct ArithmeticMode {
    bool exact = true;
    std::vector<std::uint64_t> primes;
    bool verified = true;

    bool operator==(const ArithmeticMode&) const = default;
};

/// Machine-readable record of one CLI run. Serializes losslessly (exact
/// rationals as "p/q" strings); schema_version pins the layout.
struct RunReport {
    int schema_version = 1;
    std::string command;
    std::string source;
    int n = 0;
    int d = 0;
    std::size_t r = 0;
    std::optional<std::uint64_t> seed;
    ArithmeticMode mode;
    std::optional<LinearSystemReport> system;
    std::optional<TerraciniVerdict> verdict;
    std::optional<SegreVerdict> segre;
    std::vector<CriterionTrial> trail;
    long timing_ms = 0;

    bool operator==(const RunReport&) const = default;
};

std::string write_run_report(const RunReport& report);
RunReport parse_run_report(const std::string& text);

/// classify + full cohomology of 2S, assembled into a report. In modular
/// mode the rank of 2S is recomputed with `prime_count` random primes seeded
/// from `prime_seed` and the report is labeled accordingly (the verdict is
/// still taken from the classification path).
RunReport check_points(const std::vector<ProjPoint>& points, int n, int d,
                       const std::string& source, bool exact_mode = true,
                       int prime_count = 2, std::uint64_t prime_seed = 1);

struct ScanParams {
    int n = 2;
    int d = 0;
    FamilyDescriptor family;
    int count = 1;
    std::uint64_t seed = 0;
    int jobs = 1;
    long bound = 1000;
};

struct ScanRow {
    int index = 0;
    std::uint64_t item_seed = 0;
    bool member = false;
    long defect = 0;
    long h0 = 0;
    long rank = 0;
    std::string evidence;
};

struct ScanResult {
    ScanParams params;
    std::vector<ScanRow> rows;
    int member_count = 0;
    std::map<long, int> defect_histogram;
    std::string csv; // identical bytes for any jobs value
};

/// Generates `count` samples of the family, classifies each (worker pool of
/// `jobs` threads, aggregation in input order) and renders the CSV.
ScanResult run_scan(const ScanParams& params);

/// The same rows and summary as the CSV, as a JSON document (deterministic
/// bytes as well).
std::string scan_to_json(const ScanResult& result);

/// One row of the named-strata table for a supported (n, d) cell.
struct StratumRow {
    std::string family;           // descriptor text or a metadata label
    std::size_t r = 0;
    std::optional<long> dim;      // formula-based stratum dimension
    std::optional<long> codim;
    bool verified = true;         // false for quoted (non-computable) entries
    bool bound_applies = false;   // dimension bound r*n - n
    long bound_max_dim = 0;
    std::optional<bool> spot_member; // classification of one sampled config
    std::string note;
};

/// Named strata for (2,3), (2,4), (2,5), (2,6) with spot checks, plus
/// metadata-only rows for the nodal families at d = 6, 7, 8. Throws
/// unsupported_cell_error otherwise.
std::vector<StratumRow> strata_table(int n, int d, std::uint64_t seed = 1);

std::string strata_to_text(const std::vector<StratumRow>& rows);

/// Report for a Segre tangent-span run.
RunReport check_segre(const std::vector<SegrePoint>& points, const std::string& source);

} // namespace terracini
