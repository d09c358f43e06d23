#ifndef XNLPLAB_BINPACK_HPP
#define XNLPLAB_BINPACK_HPP

#include <optional>
#include <vector>

#include "xnlplab/scheduling.hpp"

namespace xnlplab {

struct BinPackingInstance {
    int capacity = 1;  // B
    int bins = 1;      // k
    std::vector<int> items;

    void validate() const;  // throws std::invalid_argument
    bool operator==(const BinPackingInstance&) const = default;
};

struct Packing {
    std::vector<int> assign;  // item index -> bin in [1, bins]
    bool operator==(const Packing&) const = default;
};

bool verify_packing(const BinPackingInstance& bp, const Packing& p);

// Backtracking with bin-interchange symmetry breaking: the first item
// of each nonempty bin has the smallest index in that bin.
std::optional<Packing> binpack_feasible(const BinPackingInstance& bp);

// Items become exact-delay chains of unit jobs with delay bins-1 and
// deadline bins*capacity; a bin is a start-time residue class modulo
// the chain period. Oversized items short-circuit to a canonical
// infeasible instance.
SchedInstance binpack_to_chains(const BinPackingInstance& bp);

// Single-machine unit-job chains with a common exact delay back to bin
// packing, with one fill item per bin encoding the slot-count deficit.
BinPackingInstance chains_to_binpack(const SchedInstance& inst);

// Chain lengths of a chains-structured instance, in order of each
// chain's first job.
std::vector<int> chain_lengths(const SchedInstance& inst);

}  // namespace xnlplab

#endif
