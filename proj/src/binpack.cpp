#include "xnlplab/binpack.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace xnlplab {

void BinPackingInstance::validate() const {
    if (capacity < 1) throw std::invalid_argument("binpack: capacity must be positive");
    if (bins < 1) throw std::invalid_argument("binpack: bin count must be positive");
    for (int a : items)
        if (a < 1) throw std::invalid_argument("binpack: items must be positive");
}

bool verify_packing(const BinPackingInstance& bp, const Packing& p) {
    bp.validate();
    if (p.assign.size() != bp.items.size())
        throw std::invalid_argument("packing: item count mismatch");
    std::vector<int> load(bp.bins, 0);
    for (std::size_t i = 0; i < bp.items.size(); ++i) {
        int b = p.assign[i];
        if (b < 1 || b > bp.bins)
            throw std::invalid_argument("packing: bin index out of range");
        load[b - 1] += bp.items[i];
    }
    for (int l : load)
        if (l > bp.capacity) return false;
    return true;
}

namespace {

bool pack(const BinPackingInstance& bp, std::size_t item, int used_bins,
          std::vector<int>& load, std::vector<int>& assign) {
    if (item == bp.items.size()) return true;
    // bins are interchangeable: an item may open at most one new bin,
    // so the first item of each nonempty bin has the smallest index
    int tries = std::min(bp.bins, used_bins + 1);
    for (int b = 0; b < tries; ++b) {
        if (load[b] + bp.items[item] > bp.capacity) continue;
        load[b] += bp.items[item];
        assign[item] = b + 1;
        if (pack(bp, item + 1, std::max(used_bins, b + 1), load, assign)) return true;
        load[b] -= bp.items[item];
    }
    return false;
}

}  // namespace

std::optional<Packing> binpack_feasible(const BinPackingInstance& bp) {
    bp.validate();
    long long total = std::accumulate(bp.items.begin(), bp.items.end(), 0LL);
    if (total > static_cast<long long>(bp.capacity) * bp.bins) return std::nullopt;
    std::vector<int> load(bp.bins, 0);
    std::vector<int> assign(bp.items.size(), 0);
    if (!pack(bp, 0, 0, load, assign)) return std::nullopt;
    Packing p{std::move(assign)};
    if (!verify_packing(bp, p))
        throw std::logic_error("binpack_feasible: packing does not verify");
    return p;
}

SchedInstance binpack_to_chains(const BinPackingInstance& bp) {
    bp.validate();
    SchedInstance out;
    out.machines = 1;
    out.structure = PrecStructure::chains;
    for (int a : bp.items) {
        if (a <= bp.capacity) continue;
        // an oversized item fits no bin; emit a canonically infeasible
        // instance (two unit jobs, one slot)
        out.deadline = 1;
        out.jobs.assign(2, SchedJob{1, 1});
        return out;
    }
    out.deadline = bp.bins * bp.capacity;
    for (int a : bp.items) {
        int first = out.job_count();
        for (int l = 0; l < a; ++l) out.jobs.push_back({1, 1});
        for (int l = 1; l < a; ++l)
            out.prec.push_back({first + l - 1, first + l, DelayKind::exact, bp.bins - 1});
    }
    return out;
}

std::vector<int> chain_lengths(const SchedInstance& inst) {
    Digraph g = inst.prec_graph();
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.in_degree(v) > 1 || g.out_degree(v) > 1)
            throw std::invalid_argument("chain_lengths: branching precedence");
    std::vector<int> lengths;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.in_degree(v) != 0) continue;
        int len = 1, cur = v;
        while (g.out_degree(cur) == 1) {
            cur = g.out(cur)[0];
            ++len;
        }
        lengths.push_back(len);
    }
    return lengths;
}

BinPackingInstance chains_to_binpack(const SchedInstance& inst) {
    inst.validate();
    if (inst.machines != 1)
        throw std::invalid_argument("chains_to_binpack: needs a single machine");
    for (const SchedJob& j : inst.jobs)
        if (j.duration != 1 || j.size != 1)
            throw std::invalid_argument("chains_to_binpack: needs unit jobs");
    int delay = -1;
    for (const PrecArc& a : inst.prec) {
        if (a.kind != DelayKind::exact)
            throw std::invalid_argument("chains_to_binpack: needs exact delays");
        if (delay >= 0 && a.delay != delay)
            throw std::invalid_argument("chains_to_binpack: mixed delay values");
        delay = a.delay;
    }
    std::vector<int> lengths = chain_lengths(inst);  // also rejects branching
    if (delay < 0) delay = 0;

    const int d = inst.deadline;
    const int period = delay + 1;                    // k bins
    const int base = (d + period - 1) / period;      // B' = ceil(D / (l+1))
    const int deficit = base * period - d;           // r'

    // slot-count identity behind the fill item sizes: deficit residue
    // classes have base-1 slots in [0, D), the rest have base
    for (int rho = 0; rho < period; ++rho) {
        int slots = d / period + (rho < d % period ? 1 : 0);
        int expected = (deficit > 0 && rho >= d % period) ? base - 1 : base;
        if (slots != expected)
            throw std::logic_error("chains_to_binpack: slot-count identity broken");
    }

    BinPackingInstance bp;
    bp.bins = period;
    bp.capacity = 2 * base + 1;
    bp.items = std::move(lengths);
    for (int i = 0; i < deficit; ++i) bp.items.push_back(base + 2);
    for (int i = 0; i < period - deficit; ++i) bp.items.push_back(base + 1);
    return bp;
}

}  // namespace xnlplab
