#ifndef XNLPLAB_BANDWIDTH_HPP
#define XNLPLAB_BANDWIDTH_HPP

#include <cstdint>

#include "xnlplab/decision.hpp"
#include "xnlplab/digraph.hpp"

namespace xnlplab {

// Max arc stretch position(w) - position(v); 0 for arcless graphs.
// Rejects non-topological orderings.
int bandwidth_of(const Digraph& g, const TopOrdering& f);

using BandwidthDecision = Decision<TopOrdering>;

// Branch and bound over orderings keeping the placed-set plus the last
// `limit` placed vertices as state. Feasible results carry a certifying
// ordering; infeasible only after exhausting the search space.
BandwidthDecision exact_bandwidth(const Digraph& g, int limit,
                                  std::uint64_t budget = kDefaultSearchBudget);

// Oracle: enumerate every topological ordering. Throws above the cap.
int brute_bandwidth(const Digraph& g, int cap = 10);

// Maximum antichain size of the reachability partial order, via
// Dilworth duality: n minus a maximum matching of the closure.
int width(const Digraph& g);

// Oracle: enumerate vertex subsets, test pairwise unreachability.
int brute_width(const Digraph& g, int cap = 12);

// Orders a downward directed tree by nondecreasing depth, vertex id
// within a depth. Bandwidth is at most 2*width - 1.
TopOrdering depth_layout(const Digraph& tree);

// Downward directed caterpillar: spine path with one hair path per
// spine vertex. Constant bandwidth, width equal to the spine length.
Digraph gen_caterpillar(int spine_len, int hair_len);

}  // namespace xnlplab

#endif
