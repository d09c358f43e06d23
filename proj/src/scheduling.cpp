#include "xnlplab/scheduling.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace xnlplab {

std::string delay_kind_name(DelayKind k) {
    switch (k) {
        case DelayKind::none: return "none";
        case DelayKind::min: return "min";
        case DelayKind::max: return "max";
        case DelayKind::exact: return "exact";
    }
    return "?";
}

DelayKind delay_kind_from_name(const std::string& s) {
    if (s == "none") return DelayKind::none;
    if (s == "min") return DelayKind::min;
    if (s == "max") return DelayKind::max;
    if (s == "exact") return DelayKind::exact;
    throw std::invalid_argument("sched: unknown delay kind '" + s + "'");
}

Digraph SchedInstance::prec_graph() const {
    Digraph g(job_count());
    for (const PrecArc& a : prec) g.add_arc(a.from, a.to);
    return g;
}

void SchedInstance::validate() const {
    if (machines < 1) throw std::invalid_argument("sched: machines must be positive");
    if (deadline < 1) throw std::invalid_argument("sched: deadline must be positive");
    for (const SchedJob& j : jobs) {
        if (j.duration < 1) throw std::invalid_argument("sched: duration must be positive");
        if (j.size < 1) throw std::invalid_argument("sched: size must be positive");
    }
    for (const PrecArc& a : prec) {
        if (a.from < 0 || a.from >= job_count() || a.to < 0 || a.to >= job_count())
            throw std::invalid_argument("sched: precedence endpoint out of range");
        if (a.delay < 0) throw std::invalid_argument("sched: negative delay");
    }
    Digraph g = prec_graph();
    if (!g.is_acyclic()) throw std::invalid_argument("sched: cyclic precedence");
    if (structure == PrecStructure::chains)
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.in_degree(v) > 1 || g.out_degree(v) > 1)
                throw std::invalid_argument("sched: chains tag with branching precedence");
}

bool verify_schedule(const SchedInstance& inst, const Schedule& s) {
    inst.validate();
    const int n = inst.job_count();
    if (static_cast<int>(s.start.size()) != n)
        throw std::invalid_argument("schedule: job count mismatch");
    for (int j = 0; j < n; ++j)
        if (s.start[j] < 0 || s.start[j] + inst.jobs[j].duration > inst.deadline)
            throw std::invalid_argument("schedule: start outside [0, D - p]");

    std::vector<int> usage(inst.deadline, 0);
    for (int j = 0; j < n; ++j)
        for (int t = s.start[j]; t < s.start[j] + inst.jobs[j].duration; ++t)
            usage[t] += inst.jobs[j].size;
    for (int t = 0; t < inst.deadline; ++t)
        if (usage[t] > inst.machines) return false;

    for (const PrecArc& a : inst.prec) {
        int completion = s.start[a.from] + inst.jobs[a.from].duration;
        int gap = s.start[a.to] - completion;
        switch (a.kind) {
            case DelayKind::none:
                if (gap < 0) return false;
                break;
            case DelayKind::min:
                if (gap < a.delay) return false;
                break;
            case DelayKind::max:
                if (gap < 0 || gap > a.delay) return false;
                break;
            case DelayKind::exact:
                if (gap != a.delay) return false;
                break;
        }
    }
    return true;
}

// ------------------------------------------------------------ feasible

namespace {

struct Windows {
    std::vector<int> est, lst;
};

// Tighten start windows to a fixpoint; false when some window empties.
bool propagate(const SchedInstance& inst, Windows& w) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const PrecArc& a : inst.prec) {
            const int pi = inst.jobs[a.from].duration;
            int lo = 0, hi = -1;  // bounds on start_to - start_from - p_from
            switch (a.kind) {
                case DelayKind::none: lo = 0; hi = -1; break;
                case DelayKind::min: lo = a.delay; hi = -1; break;
                case DelayKind::max: lo = 0; hi = a.delay; break;
                case DelayKind::exact: lo = a.delay; hi = a.delay; break;
            }
            int v;
            v = w.est[a.from] + pi + lo;
            if (v > w.est[a.to]) { w.est[a.to] = v; changed = true; }
            v = w.lst[a.to] - pi - lo;
            if (v < w.lst[a.from]) { w.lst[a.from] = v; changed = true; }
            if (hi >= 0) {
                v = w.est[a.to] - pi - hi;
                if (v > w.est[a.from]) { w.est[a.from] = v; changed = true; }
                v = w.lst[a.from] + pi + hi;
                if (v < w.lst[a.to]) { w.lst[a.to] = v; changed = true; }
            }
        }
        for (std::size_t j = 0; j < w.est.size(); ++j)
            if (w.est[j] > w.lst[j]) return false;
    }
    return true;
}

struct SchedSearch {
    const SchedInstance& inst;
    const std::uint64_t budget;
    std::uint64_t expansions = 0;
    bool out_of_budget = false;
    std::vector<int> start;
    std::vector<int> usage;
    int assigned = 0;

    SchedSearch(const SchedInstance& i, std::uint64_t b) : inst(i), budget(b) {
        start.assign(inst.job_count(), -1);
        usage.assign(inst.deadline, 0);
    }

    bool fits(int j, int t) const {
        for (int tau = t; tau < t + inst.jobs[j].duration; ++tau)
            if (usage[tau] + inst.jobs[j].size > inst.machines) return false;
        return true;
    }

    bool search(const Windows& w) {
        if (assigned == inst.job_count()) return true;
        if (++expansions > budget) {
            out_of_budget = true;
            return false;
        }
        // earliest-start unassigned job, ties by id
        int j = -1;
        for (int cand = 0; cand < inst.job_count(); ++cand) {
            if (start[cand] >= 0) continue;
            if (j < 0 || w.est[cand] < w.est[j]) j = cand;
        }
        for (int t = w.est[j]; t <= w.lst[j]; ++t) {
            if (!fits(j, t)) continue;
            Windows next = w;
            next.est[j] = next.lst[j] = t;
            if (!propagate(inst, next)) continue;
            start[j] = t;
            ++assigned;
            for (int tau = t; tau < t + inst.jobs[j].duration; ++tau)
                usage[tau] += inst.jobs[j].size;
            bool ok = search(next);
            for (int tau = t; tau < t + inst.jobs[j].duration; ++tau)
                usage[tau] -= inst.jobs[j].size;
            --assigned;
            start[j] = -1;
            if (ok) return true;
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

SchedDecision feasible(const SchedInstance& inst, std::uint64_t budget) {
    inst.validate();
    const int n = inst.job_count();
    if (n == 0) return SchedDecision::make_feasible(Schedule{});

    long long area = 0;
    for (const SchedJob& j : inst.jobs)
        area += static_cast<long long>(j.duration) * j.size;
    if (area > static_cast<long long>(inst.machines) * inst.deadline)
        return SchedDecision::make_infeasible();
    for (const SchedJob& j : inst.jobs)
        if (j.duration > inst.deadline || j.size > inst.machines)
            return SchedDecision::make_infeasible();

    Windows w;
    w.est.assign(n, 0);
    w.lst.resize(n);
    for (int j = 0; j < n; ++j) w.lst[j] = inst.deadline - inst.jobs[j].duration;
    if (!propagate(inst, w)) return SchedDecision::make_infeasible();

    SchedSearch search(inst, budget);
    if (search.search(w)) {
        Schedule s{search.start};
        if (!verify_schedule(inst, s))
            throw std::logic_error("feasible: found schedule does not verify");
        return SchedDecision::make_feasible(std::move(s));
    }
    if (search.out_of_budget) return SchedDecision::make_timeout();
    return SchedDecision::make_infeasible();
}

// ---------------------------------------------------------- reductions

SchedInstance bandwidth_to_sched(const Digraph& g, int limit) {
    if (limit < 1) throw std::invalid_argument("bandwidth_to_sched: limit must be positive");
    if (!g.is_acyclic()) throw std::invalid_argument("bandwidth_to_sched: cyclic input");
    SchedInstance inst;
    inst.machines = 1;
    inst.deadline = std::max(1, g.vertex_count());
    inst.jobs.assign(g.vertex_count(), SchedJob{1, 1});
    for (auto [u, v] : g.arcs())
        inst.prec.push_back({u, v, DelayKind::max, limit - 1});
    return inst;
}

std::pair<Digraph, int> sched_to_bandwidth(const SchedInstance& inst) {
    inst.validate();
    if (inst.machines != 1)
        throw std::invalid_argument("sched_to_bandwidth: needs a single machine");
    for (const SchedJob& j : inst.jobs)
        if (j.duration != 1 || j.size != 1)
            throw std::invalid_argument("sched_to_bandwidth: needs unit jobs");
    if (inst.deadline != std::max(1, inst.job_count()))
        throw std::invalid_argument("sched_to_bandwidth: deadline must equal job count");
    int delay = -1;
    for (const PrecArc& a : inst.prec) {
        if (a.kind != DelayKind::max)
            throw std::invalid_argument("sched_to_bandwidth: needs maximum delays");
        if (delay >= 0 && a.delay != delay)
            throw std::invalid_argument("sched_to_bandwidth: mixed delay values");
        delay = a.delay;
    }
    return {inst.prec_graph(), delay < 0 ? 1 : delay + 1};
}

// Rigid anchor assembly: per original time unit t, a duration-2 anchor
// at [6t, 6t+2) chained by an exact-0 delay to a unit anchor at 6t+2,
// chained by an exact-3 delay to the next pair; one final unit anchor
// pinned at 6D by the deadline 6D+1. Real jobs live in {6t+3..6t+5}.
SchedInstance parallel_to_min_delay(const SchedInstance& inst) {
    inst.validate();
    if (inst.machines != 3)
        throw std::invalid_argument("parallel_to_min_delay: needs three machines");
    for (const SchedJob& j : inst.jobs) {
        if (j.duration != 1)
            throw std::invalid_argument("parallel_to_min_delay: needs unit durations");
        if (j.size != 1 && j.size != 2)
            throw std::invalid_argument("parallel_to_min_delay: sizes must be 1 or 2");
    }
    for (const PrecArc& a : inst.prec)
        if (a.kind != DelayKind::none)
            throw std::invalid_argument("parallel_to_min_delay: needs plain precedence");

    SchedInstance out;
    out.machines = 1;
    if (inst.jobs.empty()) {
        out.deadline = 1;
        return out;
    }
    const int horizon = inst.deadline;
    const int n = inst.job_count();
    out.deadline = 6 * horizon + 1;
    for (int j = 0; j < n; ++j) out.jobs.push_back({inst.jobs[j].size, 1});
    for (const PrecArc& a : inst.prec)
        out.prec.push_back({a.from, a.to, DelayKind::min, 3});
    for (int t = 0; t < horizon; ++t) {
        int wide = out.job_count();
        out.jobs.push_back({2, 1});
        int unit = out.job_count();
        out.jobs.push_back({1, 1});
        out.prec.push_back({wide, unit, DelayKind::exact, 0});
        if (t > 0) out.prec.push_back({unit - 2, wide, DelayKind::exact, 3});
    }
    int last = out.job_count();
    out.jobs.push_back({1, 1});
    out.prec.push_back({last - 1, last, DelayKind::exact, 3});
    return out;
}

}  // namespace xnlplab
