#ifndef XNLPLAB_SHUFFLE_HPP
#define XNLPLAB_SHUFFLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "xnlplab/nnccm.hpp"

namespace xnlplab {

// Word over an arbitrary char alphabet, stored as run-length-encoded
// blocks (maximal single-letter runs). Letters and blocks are 1-based.
class Word {
public:
    struct Block {
        char letter;
        int length;
        bool operator==(const Block&) const = default;
    };

    Word() = default;
    static Word from_string(const std::string& s);
    static Word run(char letter, int length);

    void append_run(char letter, int length);
    void append(const Word& w);

    int size() const { return size_; }
    bool empty() const { return size_ == 0; }
    char at(int pos) const;  // 1-based, throws std::out_of_range
    int count(char letter) const;

    const std::vector<Block>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    int block_of(int pos) const;     // block index containing letter `pos`
    int block_start(int block) const;  // position of the block's first letter

    std::string to_string() const;
    bool operator==(const Word&) const = default;

private:
    std::vector<Block> blocks_;
    std::vector<int> prefix_;  // prefix_[b] = letters in blocks_[0..b)
    int size_ = 0;
};

struct ShuffleInstance {
    std::vector<Word> sources;
    Word target;

    int total_source_length() const;
    bool operator==(const ShuffleInstance&) const = default;
};

// assignment[i][p-1] = target position of source i's p-th letter.
// Source index i is 0-based internally; 1-based in the JSON triples.
struct InterleavingWitness {
    std::vector<std::vector<int>> assignment;
    bool operator==(const InterleavingWitness&) const = default;
};

// Direct recursive membership test with memo on position tuples. Serves
// as the oracle for shuffle_dp.
bool brute_shuffle(const ShuffleInstance& inst);

// Frontier dynamic program advancing one target letter at a time.
// Uniform single-letter sources are kept out of the frontier state;
// their consumption is derived from letter counts.
std::optional<InterleavingWitness> shuffle_dp(const ShuffleInstance& inst);

// Checks bijectivity, per-source monotonicity and letter equality.
// Structurally broken witnesses (wrong shape, out-of-range target
// positions) throw; logical violations return false.
bool verify_witness(const ShuffleInstance& inst, const InterleavingWitness& w);

// Data accompanying a reduction output: repetition count N = 2kn+1 and
// the source machine, from which the long-block predicate is derived.
struct ReductionMeta {
    int reps = 0;  // N
    NnccmInstance machine;

    int counters() const { return machine.counters; }
    int max_value() const { return machine.max_value; }
    int rounds() const { return machine.rounds(); }
    // Length (1 or 2) of the b-block at sub-position p of check `round`
    // in source `counter`; all arguments 1-based except p in [0, n].
    int b_block_length(int counter, int round, int p) const;
};

struct ShuffleReduction {
    ShuffleInstance instance;
    ReductionMeta meta;
};

// Counter-machine acceptance to binary shuffle membership. Emits k
// counter source words, the block-structured target, and two uniform
// filler words balancing the letter counts. Requires n >= 1, r >= 1.
ShuffleReduction reduce_nnccm_to_shuffle(const NnccmInstance& m);

// Constructive membership witness from an accepting run: blocks of the
// j-th check region shift by twice the counter value at check j.
InterleavingWitness witness_from_run(const NnccmInstance& m, const Run& run);

// Recovers an accepting run from any valid witness by reading block
// position offsets at a skip-free short b-block of each check interval.
Run run_from_witness(const NnccmInstance& m, const ShuffleInstance& inst,
                     const ReductionMeta& meta, const InterleavingWitness& w);

}  // namespace xnlplab

#endif
