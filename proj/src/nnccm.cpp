#include "xnlplab/nnccm.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace xnlplab {

void NnccmInstance::validate() const {
    if (counters < 1) throw std::invalid_argument("nnccm: counters must be positive");
    if (max_value < 0) throw std::invalid_argument("nnccm: max_value must be nonnegative");
    for (const NnccmCheck& c : checks) {
        if (c.c1 < 1 || c.c1 > counters || c.c2 < 1 || c.c2 > counters)
            throw std::invalid_argument("nnccm: check counter index out of range");
        if (c.n1 < 0 || c.n1 > max_value || c.n2 < 0 || c.n2 > max_value)
            throw std::invalid_argument("nnccm: check value out of range");
    }
}

namespace {

bool check_fires(const NnccmCheck& c, const std::vector<int>& v) {
    return v[c.c1 - 1] == c.n1 && v[c.c2 - 1] == c.n2;
}

// Every vector of [0, n]^k dominating some member of `lower`, minus
// those firing the check. Explicit enumeration; desk scale.
std::set<std::vector<int>> survivors_after(const std::set<std::vector<int>>& lower,
                                           const NnccmCheck& check, int k, int n) {
    std::set<std::vector<int>> out;
    std::vector<int> v(k, 0);
    while (true) {
        bool dominated = false;
        for (const auto& u : lower) {
            bool ge = true;
            for (int i = 0; i < k; ++i)
                if (v[i] < u[i]) { ge = false; break; }
            if (ge) { dominated = true; break; }
        }
        if (dominated && !check_fires(check, v)) out.insert(v);
        int i = k - 1;
        while (i >= 0 && v[i] == n) v[i--] = 0;
        if (i < 0) break;
        ++v[i];
    }
    return out;
}

// Frontier sets after each round; empty optional when some round dies.
std::optional<std::vector<std::set<std::vector<int>>>> frontiers(
    const NnccmInstance& inst) {
    const int k = inst.counters, n = inst.max_value;
    std::vector<std::set<std::vector<int>>> layers;
    layers.reserve(inst.rounds() + 1);
    layers.push_back({std::vector<int>(k, 0)});
    for (const NnccmCheck& c : inst.checks) {
        layers.push_back(survivors_after(layers.back(), c, k, n));
        if (layers.back().empty()) return std::nullopt;
    }
    return layers;
}

}  // namespace

bool accepts(const NnccmInstance& inst) {
    inst.validate();
    return frontiers(inst).has_value();
}

std::optional<Run> find_run(const NnccmInstance& inst) {
    inst.validate();
    auto layers = frontiers(inst);
    if (!layers) return std::nullopt;
    const int r = inst.rounds();
    Run run;
    run.values.resize(r);
    if (r == 0) return run;

    // Backward pass: pick the lexicographically smallest survivor
    // compatible with the next round's choice.
    run.values[r - 1] = *(*layers)[r].begin();
    for (int j = r - 2; j >= 0; --j) {
        const std::vector<int>& above = run.values[j + 1];
        bool found = false;
        for (const auto& u : (*layers)[j + 1]) {
            bool le = true;
            for (std::size_t i = 0; i < u.size(); ++i)
                if (u[i] > above[i]) { le = false; break; }
            if (le) {
                run.values[j] = u;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("nnccm: frontier chain broken");
    }
    return run;
}

bool validate_run(const NnccmInstance& inst, const Run& run) {
    inst.validate();
    const int k = inst.counters, n = inst.max_value, r = inst.rounds();
    if (static_cast<int>(run.values.size()) != r)
        throw std::invalid_argument("run: round count mismatch");
    for (const auto& row : run.values)
        if (static_cast<int>(row.size()) != k)
            throw std::invalid_argument("run: counter count mismatch");
    for (int j = 0; j < r; ++j) {
        for (int i = 0; i < k; ++i) {
            int v = run.values[j][i];
            if (v < 0 || v > n) return false;
            if (j > 0 && v < run.values[j - 1][i]) return false;
        }
        if (check_fires(inst.checks[j], run.values[j])) return false;
    }
    return true;
}

void enumerate_instances(int k, int n, int r,
                         const std::function<void(const NnccmInstance&)>& yield) {
    if (k < 1 || n < 0 || r < 0)
        throw std::invalid_argument("enumerate_instances: bad bounds");
    NnccmInstance inst;
    inst.counters = k;
    inst.max_value = n;
    inst.checks.assign(r, NnccmCheck{1, 0, 1, 0});

    // Odometer over the 4r-digit mixed-radix space (counter, value)^2r.
    const int pairs = 2 * r;
    std::vector<int> digit(2 * pairs, 0);  // (c-1, v) per pair
    auto write = [&] {
        for (int j = 0; j < r; ++j) {
            inst.checks[j].c1 = digit[4 * j] + 1;
            inst.checks[j].n1 = digit[4 * j + 1];
            inst.checks[j].c2 = digit[4 * j + 2] + 1;
            inst.checks[j].n2 = digit[4 * j + 3];
        }
        yield(inst);
    };
    write();
    while (true) {
        int i = static_cast<int>(digit.size()) - 1;
        while (i >= 0) {
            int radix = (i % 2 == 0) ? k : n + 1;
            if (digit[i] + 1 < radix) break;
            digit[i--] = 0;
        }
        if (i < 0) break;
        ++digit[i];
        write();
    }
}

std::vector<NnccmInstance> enumerate_instances(int k, int n, int r) {
    std::vector<NnccmInstance> out;
    enumerate_instances(k, n, r, [&](const NnccmInstance& m) { out.push_back(m); });
    return out;
}

}  // namespace xnlplab
