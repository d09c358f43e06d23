#ifndef XNLPLAB_SCHEDULING_HPP
#define XNLPLAB_SCHEDULING_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "xnlplab/decision.hpp"
#include "xnlplab/digraph.hpp"

namespace xnlplab {

enum class DelayKind { none, min, max, exact };

std::string delay_kind_name(DelayKind k);
DelayKind delay_kind_from_name(const std::string& s);

struct PrecArc {
    int from = 0;
    int to = 0;
    DelayKind kind = DelayKind::none;
    int delay = 0;  // ignored for kind none
    bool operator==(const PrecArc&) const = default;
};

enum class PrecStructure { general, chains };

struct SchedJob {
    int duration = 1;  // p_j >= 1
    int size = 1;      // machines required, >= 1
    bool operator==(const SchedJob&) const = default;
};

// Feasibility instance: schedule all jobs in [0, deadline) on `machines`
// identical machines under delay-typed precedence constraints.
struct SchedInstance {
    int machines = 1;
    std::vector<SchedJob> jobs;
    std::vector<PrecArc> prec;
    int deadline = 1;
    PrecStructure structure = PrecStructure::general;

    int job_count() const { return static_cast<int>(jobs.size()); }
    Digraph prec_graph() const;
    void validate() const;  // throws std::invalid_argument
    bool operator==(const SchedInstance&) const = default;
};

struct Schedule {
    std::vector<int> start;
    bool operator==(const Schedule&) const = default;
};

// Capacity and per-arc delay constraints. Starts outside [0, D - p_j]
// throw; constraint violations return false.
bool verify_schedule(const SchedInstance& inst, const Schedule& s);

using SchedDecision = Decision<Schedule>;

// Exact feasibility by chronological backtracking over start times with
// earliest/latest-start window propagation.
SchedDecision feasible(const SchedInstance& inst,
                       std::uint64_t budget = kDefaultSearchBudget);

// Directed bandwidth <= limit as unit-job single-machine scheduling with
// uniform maximum delays limit - 1 and deadline n.
SchedInstance bandwidth_to_sched(const Digraph& g, int limit);

// Inverse of bandwidth_to_sched on its image; rejects instances outside
// the single-machine unit-job uniform-max-delay fragment.
std::pair<Digraph, int> sched_to_bandwidth(const SchedInstance& inst);

// P3 | prec, p=1, size in {1,2} | Cmax <= D to single-machine minimum
// delays of value 3: sizes become durations and a rigid anchor assembly
// pins a three-slot window per original time unit.
SchedInstance parallel_to_min_delay(const SchedInstance& inst);

}  // namespace xnlplab

#endif
