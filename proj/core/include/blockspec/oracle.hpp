#pragma once

#include "blockspec/diagram.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace blockspec {

/// Block decomposition as a sequence of (length, type) pairs.
using BlockSeq = std::vector<std::pair<int, BlockType>>;

constexpr int kBlockTypeCount = 7;
int block_type_index(BlockType t);
BlockType block_type_at(int idx);

/// Everything the exhaustive enumeration measures about the structures of
/// one length.  All counters fit in 64 bits at exhaustive scale.
struct EnumerationStats {
    int n = 0;
    StructureParams params;
    std::int64_t count = 0;

    /// longest_block[m] = structures whose longest block has length m
    /// (m = 1..n; the empty structure at n = 0 contributes nothing).
    std::vector<std::int64_t> longest_block;

    /// block_census[k][type] = blocks of length k and given type summed
    /// over all structures.
    std::vector<std::array<std::int64_t, kBlockTypeCount>> block_census;

    /// by_count[k][b] = structures with exactly b blocks of length k.
    std::vector<std::vector<std::int64_t>> by_count;

    /// typed_by_count[k][type][b] = structures with exactly b blocks of
    /// length k and given type.
    std::vector<std::array<std::vector<std::int64_t>, kBlockTypeCount>> typed_by_count;

    /// Census of full block sequences.
    std::map<BlockSeq, std::int64_t> sequence_census;

    void merge(const EnumerationStats& other);
};

/// Exhaustively enumerates all diagrams over n vertices with arc length
/// >= lambda, keeps those whose maximal stacks all have length >= r and
/// whose components all have genus <= gamma, and accumulates statistics.
/// The search is partitioned over the choice at the first vertex and the
/// partial results merged in a fixed order.
///
/// Throws config_error when n exceeds max_n (combinatorial explosion).
EnumerationStats enumerate_structures(int n, const StructureParams& p, int max_n = 14,
                                      bool parallel = true);

/// Decomposition of one diagram into its (length, type) block sequence.
BlockSeq block_sequence(const Diagram& d);

/// True iff d satisfies the gamma / stack / arc-length constraints.
bool is_structure(const Diagram& d, const StructureParams& p);

}  // namespace blockspec
