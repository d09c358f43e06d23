#include "xnlplab/generate.hpp"

#include <algorithm>
#include <numeric>

namespace xnlplab {

Digraph gen_random_dag(int n, double density, Rng& rng) {
    Digraph g(n);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::bernoulli_distribution arc(density);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (arc(rng)) g.add_arc(perm[i], perm[j]);
    return g;
}

Digraph gen_random_tree(int n, Rng& rng) {
    Digraph g(n);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        g.add_arc(parent(rng), v);
    }
    return g;
}

NnccmInstance gen_random_nnccm(int k, int n, int r, Rng& rng) {
    NnccmInstance m;
    m.counters = k;
    m.max_value = n;
    std::uniform_int_distribution<int> counter(1, k);
    std::uniform_int_distribution<int> value(0, n);
    for (int j = 0; j < r; ++j)
        m.checks.push_back({counter(rng), value(rng), counter(rng), value(rng)});
    return m;
}

ShuffleInstance gen_random_shuffle(int max_sources, int max_total, int alphabet,
                                   Rng& rng) {
    ShuffleInstance inst;
    std::uniform_int_distribution<int> nsources(1, max_sources);
    std::uniform_int_distribution<int> letter(0, alphabet - 1);
    const int m = nsources(rng);
    std::uniform_int_distribution<int> slack(0, max_total - 1);
    int total = 1 + slack(rng);
    std::vector<std::string> words(m);
    for (int l = 0; l < total; ++l) {
        std::uniform_int_distribution<int> which(0, m - 1);
        words[which(rng)].push_back(static_cast<char>('a' + letter(rng)));
    }
    for (const std::string& w : words) inst.sources.push_back(Word::from_string(w));

    std::bernoulli_distribution plant(0.5);
    if (plant(rng)) {
        // target by interleaving: a uniformly chosen unconsumed source
        // contributes its next letter
        std::vector<int> pos(m, 0);
        std::string target;
        for (int l = 0; l < total; ++l) {
            std::vector<int> open;
            for (int i = 0; i < m; ++i)
                if (pos[i] < static_cast<int>(words[i].size())) open.push_back(i);
            std::uniform_int_distribution<int> which(0, static_cast<int>(open.size()) - 1);
            int i = open[which(rng)];
            target.push_back(words[i][pos[i]++]);
        }
        inst.target = Word::from_string(target);
    } else {
        std::string target;
        for (int l = 0; l < total; ++l)
            target.push_back(static_cast<char>('a' + letter(rng)));
        inst.target = Word::from_string(target);
    }
    return inst;
}

BinPackingInstance gen_random_binpack(int max_bins, int max_capacity, int max_items,
                                      Rng& rng) {
    BinPackingInstance bp;
    bp.bins = std::uniform_int_distribution<int>(1, max_bins)(rng);
    bp.capacity = std::uniform_int_distribution<int>(1, max_capacity)(rng);
    int count = std::uniform_int_distribution<int>(0, max_items)(rng);
    for (int i = 0; i < count; ++i)
        bp.items.push_back(std::uniform_int_distribution<int>(1, bp.capacity)(rng));
    return bp;
}

}  // namespace xnlplab
