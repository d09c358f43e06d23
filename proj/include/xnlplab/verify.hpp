#ifndef XNLPLAB_VERIFY_HPP
#define XNLPLAB_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace xnlplab {

// One cross-check: the same question answered by two independent routes.
struct VerificationRecord {
    std::string id;
    std::string left;
    std::string right;
    bool agree = false;
    bool timeout = false;
    double wall_ms = 0.0;
};

struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    std::vector<VerificationRecord> records;  // sorted by id
    std::vector<std::string> timeouts;

    int total() const { return static_cast<int>(records.size()); }
    int disagreements() const;
    bool all_agree() const { return disagreements() == 0; }

    // Deterministic under fixed seed and budget; wall times are included
    // only on request so default reports are byte-stable.
    nlohmann::json to_json(bool with_timings = false) const;
};

struct SweepBounds {
    int max_counters = 2;   // NNCCM sweeps
    int max_value = 1;
    int max_rounds = 2;
    int samples = 300;      // randomized sweeps
    int max_vertices = 8;   // random graph size cap
    int max_jobs = 5;       // P3 exhaustive sweep
    int max_bins = 3;       // bin packing sweeps
    int max_capacity = 4;
    int max_items = 5;
    int max_deadline = 8;   // chain scheduling sweep
    int max_delay = 2;
    int max_chains = 4;
    int threads = 0;        // 0 = hardware concurrency
};

// Suites: shuffle-reduction, dag-reduction, tree-construction,
// sched-equivalence, binpack-equivalence, oracle-agreement.
VerificationReport run_verification_suite(const std::string& suite,
                                          const SweepBounds& bounds,
                                          std::uint64_t seed,
                                          std::uint64_t budget);

std::vector<std::string> verification_suite_names();

}  // namespace xnlplab

#endif
