#include "xnlplab/shuffle.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace xnlplab {

// ---------------------------------------------------------------- Word

Word Word::from_string(const std::string& s) {
    Word w;
    for (char c : s) w.append_run(c, 1);
    return w;
}

Word Word::run(char letter, int length) {
    Word w;
    w.append_run(letter, length);
    return w;
}

void Word::append_run(char letter, int length) {
    if (length < 0) throw std::invalid_argument("word: negative run length");
    if (length == 0) return;
    if (!blocks_.empty() && blocks_.back().letter == letter) {
        blocks_.back().length += length;
    } else {
        blocks_.push_back({letter, length});
        prefix_.push_back(size_);
    }
    size_ += length;
}

void Word::append(const Word& w) {
    for (const Block& b : w.blocks_) append_run(b.letter, b.length);
}

char Word::at(int pos) const { return blocks_[block_of(pos) - 1].letter; }

int Word::count(char letter) const {
    int total = 0;
    for (const Block& b : blocks_)
        if (b.letter == letter) total += b.length;
    return total;
}

int Word::block_of(int pos) const {
    if (pos < 1 || pos > size_) throw std::out_of_range("word: position out of range");
    // last block whose first position is <= pos
    auto it = std::upper_bound(prefix_.begin(), prefix_.end(), pos - 1);
    return static_cast<int>(it - prefix_.begin());
}

int Word::block_start(int block) const {
    if (block < 1 || block > block_count())
        throw std::out_of_range("word: block index out of range");
    return prefix_[block - 1] + 1;
}

std::string Word::to_string() const {
    std::string s;
    s.reserve(size_);
    for (const Block& b : blocks_) s.append(b.length, b.letter);
    return s;
}

int ShuffleInstance::total_source_length() const {
    int total = 0;
    for (const Word& s : sources) total += s.size();
    return total;
}

// -------------------------------------------------------- brute oracle

bool brute_shuffle(const ShuffleInstance& inst) {
    const Word& t = inst.target;
    const int m = static_cast<int>(inst.sources.size());
    if (inst.total_source_length() != t.size()) return false;

    std::map<std::vector<int>, bool> memo;
    std::vector<int> pos(m, 0);

    std::function<bool()> go = [&]() -> bool {
        int q = std::accumulate(pos.begin(), pos.end(), 0);
        if (q == t.size()) return true;
        auto it = memo.find(pos);
        if (it != memo.end()) return it->second;
        char ch = t.at(q + 1);
        bool ok = false;
        for (int i = 0; i < m && !ok; ++i) {
            if (pos[i] < inst.sources[i].size() &&
                inst.sources[i].at(pos[i] + 1) == ch) {
                ++pos[i];
                ok = go();
                --pos[i];
            }
        }
        memo[pos] = ok;
        return ok;
    };
    return go();
}

// ----------------------------------------------------------- DP solver

namespace {

bool is_uniform(const Word& w) { return w.block_count() <= 1; }

struct LetterPool {
    char letter;
    std::vector<int> members;  // source indices, ascending
    std::vector<int> prefix;   // prefix length sums over members
    int capacity = 0;
};

}  // namespace

std::optional<InterleavingWitness> shuffle_dp(const ShuffleInstance& inst) {
    const Word& t = inst.target;
    const int m = static_cast<int>(inst.sources.size());
    if (inst.total_source_length() != t.size()) return std::nullopt;

    std::vector<int> tracked;
    std::map<char, LetterPool> pools;
    for (int i = 0; i < m; ++i) {
        const Word& s = inst.sources[i];
        if (s.empty()) continue;
        if (is_uniform(s)) {
            LetterPool& p = pools[s.blocks()[0].letter];
            p.letter = s.blocks()[0].letter;
            p.prefix.push_back(p.capacity);
            p.members.push_back(i);
            p.capacity += s.size();
        } else {
            tracked.push_back(i);
        }
    }
    const int nt = static_cast<int>(tracked.size());

    // prefix letter counts for the target and each tracked source
    std::set<char> alphabet;
    for (int q = 1; q <= t.size(); ++q) alphabet.insert(t.at(q));
    for (int i = 0; i < m; ++i)
        for (const auto& b : inst.sources[i].blocks()) alphabet.insert(b.letter);

    std::map<char, std::vector<int>> tcount;
    for (char ch : alphabet) {
        auto& v = tcount[ch];
        v.assign(t.size() + 1, 0);
        for (int q = 1; q <= t.size(); ++q)
            v[q] = v[q - 1] + (t.at(q) == ch ? 1 : 0);
    }
    std::map<char, std::vector<std::vector<int>>> scount;  // per letter, per tracked
    for (char ch : alphabet) {
        auto& rows = scount[ch];
        rows.resize(nt);
        for (int ti = 0; ti < nt; ++ti) {
            const Word& s = inst.sources[tracked[ti]];
            rows[ti].assign(s.size() + 1, 0);
            for (int p = 1; p <= s.size(); ++p)
                rows[ti][p] = rows[ti][p - 1] + (s.at(p) == ch ? 1 : 0);
        }
    }

    auto pool_consumed = [&](char ch, int q, const std::vector<int>& state) {
        int c = tcount[ch][q];
        for (int ti = 0; ti < nt; ++ti) c -= scount[ch][ti][state[ti]];
        return c;
    };

    // layer q maps each reachable state to the source that consumed t[q]
    using Layer = std::map<std::vector<int>, int>;
    std::vector<Layer> layers(t.size() + 1);
    layers[0][std::vector<int>(nt, 0)] = -1;

    for (int q = 0; q < t.size(); ++q) {
        char ch = t.at(q + 1);
        auto pit = pools.find(ch);
        for (const auto& [state, from] : layers[q]) {
            (void)from;
            // moves ordered by the advancing source's index
            std::vector<std::pair<int, int>> moves;  // (source idx, tracked pos or -1)
            for (int ti = 0; ti < nt; ++ti) {
                const Word& s = inst.sources[tracked[ti]];
                if (state[ti] < s.size() && s.at(state[ti] + 1) == ch)
                    moves.push_back({tracked[ti], ti});
            }
            if (pit != pools.end()) {
                int used = pool_consumed(ch, q, state);
                if (used < pit->second.capacity) {
                    const LetterPool& p = pit->second;
                    // the advancing word is the first with remaining letters
                    int wi = static_cast<int>(std::upper_bound(p.prefix.begin(),
                                                               p.prefix.end(), used) -
                                              p.prefix.begin()) - 1;
                    moves.push_back({p.members[wi], -1});
                }
            }
            std::sort(moves.begin(), moves.end());
            for (auto [src, ti] : moves) {
                std::vector<int> next = state;
                if (ti >= 0) ++next[ti];
                layers[q + 1].try_emplace(std::move(next), src);
            }
        }
        if (layers[q + 1].empty()) return std::nullopt;
    }

    // any state in the final layer is complete: pool caps are enforced
    // per step and the total lengths match
    const auto& final_layer = layers[t.size()];
    if (final_layer.empty()) return std::nullopt;
    std::vector<int> state = final_layer.begin()->first;

    InterleavingWitness w;
    w.assignment.resize(m);
    for (int i = 0; i < m; ++i) w.assignment[i].resize(inst.sources[i].size(), 0);

    std::map<int, int> tracked_index;
    for (int ti = 0; ti < nt; ++ti) tracked_index[tracked[ti]] = ti;
    for (int q = t.size(); q >= 1; --q) {
        int src = layers[q].at(state);
        auto it = tracked_index.find(src);
        if (it != tracked_index.end()) {
            w.assignment[src][state[it->second] - 1] = q;
            --state[it->second];
        } else {
            // pool word: position = letters this word consumed so far
            char ch = t.at(q);
            const LetterPool& p = pools.at(ch);
            int wi = static_cast<int>(std::find(p.members.begin(), p.members.end(), src) -
                                      p.members.begin());
            int used_before = pool_consumed(ch, q - 1, state);
            w.assignment[src][used_before - p.prefix[wi]] = q;
        }
    }
    return w;
}

bool verify_witness(const ShuffleInstance& inst, const InterleavingWitness& w) {
    const int m = static_cast<int>(inst.sources.size());
    if (static_cast<int>(w.assignment.size()) != m)
        throw std::invalid_argument("witness: source count mismatch");
    for (int i = 0; i < m; ++i)
        if (static_cast<int>(w.assignment[i].size()) != inst.sources[i].size())
            throw std::invalid_argument("witness: letter count mismatch");
    for (int i = 0; i < m; ++i)
        for (int pos : w.assignment[i])
            if (pos < 1 || pos > inst.target.size())
                throw std::invalid_argument("witness: target position out of range");

    if (inst.total_source_length() != inst.target.size()) return false;
    std::vector<bool> hit(inst.target.size(), false);
    for (int i = 0; i < m; ++i) {
        const auto& row = w.assignment[i];
        for (std::size_t p = 0; p < row.size(); ++p) {
            if (p > 0 && row[p] <= row[p - 1]) return false;  // increasing
            if (hit[row[p] - 1]) return false;                // injective
            hit[row[p] - 1] = true;
            if (inst.sources[i].at(static_cast<int>(p) + 1) != inst.target.at(row[p]))
                return false;
        }
    }
    return true;  // injective over matching totals = bijective
}

// ------------------------------------------------------- the reduction

int ReductionMeta::b_block_length(int counter, int round, int p) const {
    const NnccmCheck& c = machine.checks.at(round - 1);
    int value = machine.max_value - p;
    if ((counter == c.c1 && value == c.n1) || (counter == c.c2 && value == c.n2))
        return 2;
    return 1;
}

ShuffleReduction reduce_nnccm_to_shuffle(const NnccmInstance& m) {
    m.validate();
    const int k = m.counters, n = m.max_value, r = m.rounds();
    if (n < 1 || r < 1)
        throw std::invalid_argument(
            "reduce_nnccm_to_shuffle: requires max_value >= 1 and at least one check");

    ShuffleReduction red;
    red.meta.reps = 2 * k * n + 1;
    red.meta.machine = m;
    const int reps = red.meta.reps;

    for (int i = 1; i <= k; ++i) {
        Word s;
        for (int j = 1; j <= r; ++j) {
            Word rep;
            for (int p = 0; p <= n; ++p) {
                rep.append_run('a', 1);
                rep.append_run('b', red.meta.b_block_length(i, j, p));
            }
            for (int q = 0; q < reps; ++q) s.append(rep);
        }
        red.instance.sources.push_back(std::move(s));
    }

    Word target;
    {
        Word super;
        for (int p = 0; p < n; ++p) {
            super.append_run('a', k);
            super.append_run('b', k + 2);
        }
        super.append_run('a', k);
        super.append_run('b', k + 1);
        for (int q = 0; q < reps * r; ++q) target.append(super);
        for (int p = 0; p < n; ++p) {
            target.append_run('a', k);
            target.append_run('b', k + 2);
        }
    }

    int source_a = 0, source_b = 0;
    for (const Word& s : red.instance.sources) {
        source_a += s.count('a');
        source_b += s.count('b');
    }
    const int fill_a = target.count('a') - source_a;
    const int fill_b = target.count('b') - source_b;
    if (fill_a < 0 || fill_b < 0)
        throw std::logic_error("reduce_nnccm_to_shuffle: negative filler exponent");
    red.instance.sources.push_back(Word::run('a', fill_a));
    red.instance.sources.push_back(Word::run('b', fill_b));
    red.instance.target = std::move(target);

    if (red.instance.total_source_length() != red.instance.target.size())
        throw std::logic_error("reduce_nnccm_to_shuffle: length mismatch");
    // block-count identities
    const int expected_t_blocks = 2 * (n + 1) * reps * r + 2 * n;
    if (red.instance.target.block_count() != expected_t_blocks)
        throw std::logic_error("reduce_nnccm_to_shuffle: target block count");
    for (int i = 0; i < k; ++i)
        if (red.instance.sources[i].block_count() != 2 * (n + 1) * reps * r)
            throw std::logic_error("reduce_nnccm_to_shuffle: source block count");
    return red;
}

InterleavingWitness witness_from_run(const NnccmInstance& m, const Run& run) {
    if (!validate_run(m, run))
        throw std::invalid_argument("witness_from_run: run does not validate");
    ShuffleReduction red = reduce_nnccm_to_shuffle(m);
    const ShuffleInstance& inst = red.instance;
    const int k = m.counters, n = m.max_value, r = m.rounds();
    const int reps = red.meta.reps;
    const int per_check = 2 * (n + 1) * reps;  // source blocks per check
    const Word& t = inst.target;

    // target block -> contributing source blocks, by ascending source
    std::vector<std::vector<std::pair<int, int>>> contrib(t.block_count() + 1);
    for (int i = 1; i <= k; ++i) {
        const Word& s = inst.sources[i - 1];
        for (int pi = 1; pi <= s.block_count(); ++pi) {
            int j = (pi - 1) / per_check + 1;
            int shift = 2 * run.values[j - 1][i - 1];
            contrib[pi + shift].push_back({i, pi});
        }
    }

    InterleavingWitness w;
    w.assignment.resize(inst.sources.size());
    for (std::size_t i = 0; i < inst.sources.size(); ++i)
        w.assignment[i].resize(inst.sources[i].size(), 0);

    int fill_a_next = 1, fill_b_next = 1;  // cursors into the filler words
    for (int tau = 1; tau <= t.block_count(); ++tau) {
        const int base = t.block_start(tau);
        const int len = t.blocks()[tau - 1].length;
        const char letter = t.blocks()[tau - 1].letter;
        int off = 0;
        for (auto [i, pi] : contrib[tau]) {
            const Word& s = inst.sources[i - 1];
            if (s.blocks()[pi - 1].letter != letter)
                throw std::logic_error("witness_from_run: block letter mismatch");
            int start = s.block_start(pi);
            for (int l = 0; l < s.blocks()[pi - 1].length; ++l) {
                if (off >= len)
                    throw std::logic_error("witness_from_run: target block overfull");
                w.assignment[i - 1][start + l - 1] = base + off++;
            }
        }
        int filler = (letter == 'a') ? k : k + 1;  // 0-based source index
        int& cursor = (letter == 'a') ? fill_a_next : fill_b_next;
        while (off < len) {
            if (cursor > inst.sources[filler].size())
                throw std::logic_error("witness_from_run: filler exhausted");
            w.assignment[filler][cursor - 1] = base + off++;
            ++cursor;
        }
    }
    if (fill_a_next != inst.sources[k].size() + 1 ||
        fill_b_next != inst.sources[k + 1].size() + 1)
        throw std::logic_error("witness_from_run: filler letters left over");
    if (!verify_witness(inst, w))
        throw std::logic_error("witness_from_run: constructed witness invalid");
    return w;
}

Run run_from_witness(const NnccmInstance& m, const ShuffleInstance& inst,
                     const ReductionMeta& meta, const InterleavingWitness& w) {
    if (!verify_witness(inst, w))
        throw std::invalid_argument("run_from_witness: witness does not verify");
    const int k = m.counters, n = m.max_value, r = m.rounds();
    const int reps = meta.reps;
    const Word& t = inst.target;
    const int source_blocks = 2 * (n + 1) * reps * r;

    // f'(i, pi): target block receiving the first letter of block pi
    std::vector<std::vector<int>> fp(k + 1);
    for (int i = 1; i <= k; ++i) {
        const Word& s = inst.sources[i - 1];
        fp[i].assign(s.block_count() + 1, 0);
        for (int pi = 1; pi <= s.block_count(); ++pi) {
            int letter_pos = w.assignment[i - 1][s.block_start(pi) - 1];
            fp[i][pi] = t.block_of(letter_pos);
        }
        if (s.block_count() != source_blocks)
            throw std::invalid_argument("run_from_witness: unexpected source shape");
    }

    auto delta = [&](int i, int pi) { return fp[i][pi] - pi; };
    for (int i = 1; i <= k; ++i) {
        for (int pi = 1; pi <= source_blocks; ++pi) {
            int d = delta(i, pi);
            if (d < 0 || d > 2 * n || d % 2 != 0)
                throw std::invalid_argument("run_from_witness: offset out of range");
            if (pi > 1 && d < delta(i, pi - 1))
                throw std::invalid_argument("run_from_witness: offsets decrease");
        }
    }

    // no block skip at source block pi: the offset stays flat into pi+1
    auto skip_free = [&](int i, int pi) {
        return pi == source_blocks || delta(i, pi) == delta(i, pi + 1);
    };

    const int sb = 2 * (n + 1);  // blocks per repetition in the target
    Run run;
    run.values.assign(r, std::vector<int>(k, 0));
    for (int j = 1; j <= r; ++j) {
        bool found = false;
        for (int s = reps * (j - 1) + 1; s <= reps * j && !found; ++s) {
            int tau = sb * s;  // short b-block position in the target
            if (t.blocks()[tau - 1].letter != 'b' || t.blocks()[tau - 1].length != k + 1)
                throw std::logic_error("run_from_witness: expected a short b-block");
            bool ok = true;
            std::vector<int> vals(k, 0);
            for (int i = 1; i <= k && ok; ++i) {
                // unique pi with fp(i, pi) == tau, if any (fp is increasing)
                auto& row = fp[i];
                auto it = std::lower_bound(row.begin() + 1, row.end(), tau);
                if (it == row.end() || *it != tau) { ok = false; break; }
                int pi = static_cast<int>(it - row.begin());
                if (!skip_free(i, pi)) { ok = false; break; }
                vals[i - 1] = delta(i, pi) / 2;
            }
            if (ok) {
                run.values[j - 1] = vals;
                found = true;
            }
        }
        if (!found)
            throw std::runtime_error(
                "run_from_witness: no skip-free short b-block for check " +
                std::to_string(j));
    }
    if (!validate_run(m, run))
        throw std::runtime_error("run_from_witness: extracted run does not validate");
    return run;
}

}  // namespace xnlplab
