#pragma once

#include "blockspec/oracle.hpp"
#include "blockspec/series.hpp"

#include <random>
#include <string>

namespace blockspec {

/// Block decomposition of one sampled structure.
struct BlockSequenceSample {
    BlockSeq blocks;  // (length, type) pairs, left to right
    int total = 0;    // lengths sum to total

    /// "length:type;length:type;..." (empty string for total = 0).
    std::string to_line() const;
};

/// Draws the block decomposition of a uniformly random structure by the
/// recursive method over the sequence construction: the first block gets
/// length k with probability f(k) g(n-k) / g(n) and a type proportional to
/// the per-type block counts at length k.  Streams are reproducible:
/// identical seed, identical draws.
class BlockSequenceSampler {
public:
    /// Tables cover sizes up to max_n; bundle order must exceed max_n.
    BlockSequenceSampler(const SeriesBundle& bundle, int max_n, std::uint64_t seed);

    BlockSequenceSample sample(int n);
    int max_n() const { return max_n_; }

    /// Exact probability the sampler assigns to one block sequence
    /// (product of per-block counts over g(n)); used to compare against the
    /// enumeration census.
    Rat sequence_probability(const BlockSeq& seq) const;

private:
    int pick_length(int n);
    BlockType pick_type(int k);

    int max_n_;
    std::mt19937_64 rng_;
    std::vector<Int> g_, f_;
    std::vector<std::array<Int, kBlockTypeCount>> type_counts_;  // [k][type]
    std::vector<std::vector<Int>> first_cum_;  // [n][k-1] = sum_{k'<=k} f(k') g(n-k')
};

/// Uniform integer in [0, bound) from 64-bit draws by rejection.
Int uniform_below(const Int& bound, std::mt19937_64& rng);

}  // namespace blockspec
