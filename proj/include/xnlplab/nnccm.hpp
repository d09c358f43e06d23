#ifndef XNLPLAB_NNCCM_HPP
#define XNLPLAB_NNCCM_HPP

#include <functional>
#include <optional>
#include <vector>

namespace xnlplab {

// One pairwise equality check: the machine halts and rejects when
// counter c1 has value n1 and counter c2 has value n2 simultaneously.
struct NnccmCheck {
    int c1 = 1;  // in [1, counters]
    int n1 = 0;  // in [0, max_value]
    int c2 = 1;
    int n2 = 0;
    bool operator==(const NnccmCheck&) const = default;
};

// Nondeterministic nondecreasing checking counter machine: `counters`
// counters over [0, max_value], initially zero. Each round any subset of
// counters may jump to any larger value <= max_value, then one check runs.
struct NnccmInstance {
    int counters = 1;
    int max_value = 0;
    std::vector<NnccmCheck> checks;

    int rounds() const { return static_cast<int>(checks.size()); }
    void validate() const;  // throws std::invalid_argument
    bool operator==(const NnccmInstance&) const = default;
};

// Post-increase counter values at each check. values[j][i] is the value
// of counter i+1 when check j+1 is performed; columns are nondecreasing.
struct Run {
    std::vector<std::vector<int>> values;
    bool operator==(const Run&) const = default;
};

bool accepts(const NnccmInstance& inst);
std::optional<Run> find_run(const NnccmInstance& inst);

// True iff `run` is in-range, per-counter nondecreasing and passes every
// check. Shape mismatch against the instance throws instead of false.
bool validate_run(const NnccmInstance& inst, const Run& run);

// All instances with exactly k counters, max value n and r checks, in
// lexicographic check order. There are (k*(n+1))^(2r) of them.
void enumerate_instances(int k, int n, int r,
                         const std::function<void(const NnccmInstance&)>& yield);
std::vector<NnccmInstance> enumerate_instances(int k, int n, int r);

}  // namespace xnlplab

#endif
