#include "skewsym/scan.hpp"

#include "skewsym/conjugation.hpp"
#include "skewsym/duality.hpp"
#include "skewsym/io.hpp"
#include "skewsym/random.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

namespace skewsym {

namespace {

ScanRecord run_trial(const RunConfig& config, int trial) {
    ScanRecord rec;
    rec.trial = trial;
    rec.dim = config.dim;
    rec.seed = mix_seed(config.seed, static_cast<std::uint64_t>(trial));

    const Conjugation c = random_conjugation(config.dim, mix_seed(rec.seed, 0));
    Rng rng(mix_seed(rec.seed, 1));
    const ComplexMatrix t = ginibre_matrix(config.dim, config.dim, rng);

    const DistanceReport d = distance_to_skew(c, t);
    rec.dist = d.dist;
    rec.alpha1 = alpha(c, t, 1).value;
    rec.alpha2 = alpha(c, t, 2).value;
    const HyperreflexivityRatios ratios = hyperreflexivity_ratios(c, t);
    rec.ratio1 = ratios.ratio1;
    rec.ratio2 = ratios.ratio2;
    rec.degenerate = ratios.degenerate;
    return rec;
}

}  // namespace

std::vector<ScanRecord> ratio_scan(const RunConfig& config) {
    if (config.trials < 1) throw InvalidArgument("ratio_scan: trials must be >= 1");
    if (config.dim < 1) throw InvalidArgument("ratio_scan: dim must be >= 1");
    std::vector<ScanRecord> records(static_cast<std::size_t>(config.trials));

    const int threads = std::clamp(config.threads, 1, config.trials);
    if (threads == 1) {
        for (int trial = 0; trial < config.trials; ++trial) {
            records[static_cast<std::size_t>(trial)] = run_trial(config, trial);
        }
        return records;
    }
    // Trials are independent; each writes only its own slot, so the result
    // does not depend on the partition.
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w]() {
            for (int trial = w; trial < config.trials; trial += threads) {
                records[static_cast<std::size_t>(trial)] = run_trial(config, trial);
            }
        });
    }
    for (std::thread& th : pool) th.join();
    return records;
}

ScanSummary summarize(const std::vector<ScanRecord>& records) {
    ScanSummary s;
    for (const ScanRecord& r : records) {
        s.max_ratio1 = std::max(s.max_ratio1, r.ratio1);
        s.max_ratio2_deviation = std::max(s.max_ratio2_deviation, std::abs(r.ratio2 - 1.0));
    }
    return s;
}

std::string scan_to_csv(const std::vector<ScanRecord>& records) {
    std::ostringstream out;
    out << "trial,dim,seed,dist,alpha1,alpha2,ratio1,ratio2\n";
    for (const ScanRecord& r : records) {
        out << r.trial << ',' << r.dim << ',' << r.seed << ',' << format_float(r.dist)
            << ',' << format_float(r.alpha1) << ',' << format_float(r.alpha2) << ','
            << format_float(r.ratio1) << ',' << format_float(r.ratio2) << '\n';
    }
    const ScanSummary s = summarize(records);
    out << "# summary max_ratio1=" << format_float(s.max_ratio1)
        << " max_abs_ratio2_minus_1=" << format_float(s.max_ratio2_deviation) << '\n';
    return out.str();
}

std::string scan_to_json(const std::vector<ScanRecord>& records) {
    Json arr = Json::array();
    for (const ScanRecord& r : records) {
        arr.push_back(Json{{"trial", r.trial},
                           {"dim", r.dim},
                           {"seed", r.seed},
                           {"dist", r.dist},
                           {"alpha1", r.alpha1},
                           {"alpha2", r.alpha2},
                           {"ratio1", r.ratio1},
                           {"ratio2", r.ratio2},
                           {"degenerate", r.degenerate}});
    }
    const ScanSummary s = summarize(records);
    Json doc{{"records", std::move(arr)},
             {"summary", Json{{"max_ratio1", s.max_ratio1},
                              {"max_abs_ratio2_minus_1", s.max_ratio2_deviation}}}};
    return doc.dump(2) + "\n";
}

}  // namespace skewsym
