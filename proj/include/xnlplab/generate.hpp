#ifndef XNLPLAB_GENERATE_HPP
#define XNLPLAB_GENERATE_HPP

#include <random>

#include "xnlplab/binpack.hpp"
#include "xnlplab/digraph.hpp"
#include "xnlplab/nnccm.hpp"
#include "xnlplab/shuffle.hpp"

namespace xnlplab {

using Rng = std::mt19937_64;

// Random DAG: arcs point forward along a random vertex permutation,
// each included with probability `density`.
Digraph gen_random_dag(int n, double density, Rng& rng);

// Random downward directed tree by uniform attachment.
Digraph gen_random_tree(int n, Rng& rng);

NnccmInstance gen_random_nnccm(int k, int n, int r, Rng& rng);

// Mix of planted members (target built by interleaving the sources) and
// free instances; total source length at most `max_total`.
ShuffleInstance gen_random_shuffle(int max_sources, int max_total,
                                   int alphabet, Rng& rng);

BinPackingInstance gen_random_binpack(int max_bins, int max_capacity,
                                      int max_items, Rng& rng);

}  // namespace xnlplab

#endif
