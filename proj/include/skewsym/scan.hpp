#pragma once

#include "skewsym/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace skewsym {

enum class OutputFormat { kTabular, kStructured };

struct RunConfig {
    double tol = 1e-9;
    std::uint64_t seed = 0;
    int trials = 1;
    int dim = 2;
    int threads = 1;
    std::string out;  // empty = stdout
    OutputFormat format = OutputFormat::kTabular;
};

struct ScanRecord {
    int trial = 0;
    int dim = 0;
    std::uint64_t seed = 0;  // per-trial derived seed
    double dist = 0.0;
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double ratio1 = 1.0;
    double ratio2 = 1.0;
    bool degenerate = false;
};

struct ScanSummary {
    double max_ratio1 = 0.0;
    double max_ratio2_deviation = 0.0;  // max |ratio2 - 1|
};

/// One record per trial: a fresh random conjugation and a complex Ginibre
/// operator, both derived from hash(seed, trial), so the output is a pure
/// function of the config no matter how many threads run the trials.
std::vector<ScanRecord> ratio_scan(const RunConfig& config);

ScanSummary summarize(const std::vector<ScanRecord>& records);

/// Header row, one CSV line per record (17 significant digits), and a
/// trailing '#'-prefixed summary line.
std::string scan_to_csv(const std::vector<ScanRecord>& records);

/// The same content as a JSON document with per-record degeneracy flags.
std::string scan_to_json(const std::vector<ScanRecord>& records);

}  // namespace skewsym
