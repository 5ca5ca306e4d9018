#include "blockspec/sampler.hpp"

#include <algorithm>

namespace blockspec {

std::string BlockSequenceSample::to_line() const {
    std::string s;
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(blocks[i].first);
        s += ':';
        s += to_string(blocks[i].second);
    }
    return s;
}

Int uniform_below(const Int& bound, std::mt19937_64& rng) {
    if (bound <= 0) throw config_error("uniform_below: bound must be positive");
    if (bound == 1) return Int(0);
    const unsigned bits = msb(bound) + 1;
    const unsigned words = (bits + 63) / 64;
    for (;;) {
        Int r(0);
        for (unsigned wi = 0; wi < words; ++wi) {
            r <<= 64;
            r |= Int(rng());
        }
        r &= (Int(1) << bits) - 1;
        if (r < bound) return r;
    }
}

namespace {

Int integer_coeff(const Rat& q, const char* what) {
    if (denominator(q) != 1 || q < 0)
        throw consistency_error(std::string(what) + ": counting coefficient is not a nonnegative integer");
    return numerator(q);
}

}  // namespace

BlockSequenceSampler::BlockSequenceSampler(const SeriesBundle& bundle, int max_n,
                                           std::uint64_t seed)
    : max_n_(max_n), rng_(seed) {
    if (max_n < 0) throw config_error("sampler: max_n must be >= 0");
    if (bundle.order <= max_n) throw config_error("sampler: series order must exceed max_n");

    g_.resize(static_cast<size_t>(max_n) + 1);
    f_.resize(static_cast<size_t>(max_n) + 1);
    for (int j = 0; j <= max_n; ++j) {
        g_[static_cast<size_t>(j)] = integer_coeff(bundle.g(j), "sampler g");
        f_[static_cast<size_t>(j)] = integer_coeff(bundle.f(j), "sampler f");
    }

    auto types = block_type_series_all(bundle);
    type_counts_.assign(static_cast<size_t>(max_n) + 1, {});
    for (int k = 0; k <= max_n; ++k) {
        auto& row = type_counts_[static_cast<size_t>(k)];
        row[block_type_index(BlockType::Trivial)] = k == 1 ? Int(1) : Int(0);
        for (BlockType t : {BlockType::T, BlockType::H, BlockType::K, BlockType::L, BlockType::M,
                            BlockType::Other})
            row[block_type_index(t)] = integer_coeff(types.at(t)[k], "sampler type counts");
        Int sum(0);
        for (const Int& v : row) sum += v;
        if (sum != f_[static_cast<size_t>(k)])
            throw consistency_error("sampler: type counts do not add up to f(k)");
    }

    first_cum_.assign(static_cast<size_t>(max_n) + 1, {});
    for (int n = 1; n <= max_n; ++n) {
        auto& cum = first_cum_[static_cast<size_t>(n)];
        cum.resize(static_cast<size_t>(n));
        Int acc(0);
        for (int k = 1; k <= n; ++k) {
            acc += f_[static_cast<size_t>(k)] * g_[static_cast<size_t>(n - k)];
            cum[static_cast<size_t>(k - 1)] = acc;
        }
        if (acc != g_[static_cast<size_t>(n)])
            throw consistency_error("sampler: sequence identity sum f(k) g(n-k) = g(n) fails");
    }
}

int BlockSequenceSampler::pick_length(int n) {
    const auto& cum = first_cum_[static_cast<size_t>(n)];
    Int u = uniform_below(g_[static_cast<size_t>(n)], rng_);
    auto it = std::upper_bound(cum.begin(), cum.end(), u);
    return static_cast<int>(it - cum.begin()) + 1;
}

BlockType BlockSequenceSampler::pick_type(int k) {
    Int u = uniform_below(f_[static_cast<size_t>(k)], rng_);
    const auto& row = type_counts_[static_cast<size_t>(k)];
    Int acc(0);
    for (int t = 0; t < kBlockTypeCount; ++t) {
        acc += row[static_cast<size_t>(t)];
        if (u < acc) return block_type_at(t);
    }
    throw consistency_error("sampler: type draw out of range");
}

BlockSequenceSample BlockSequenceSampler::sample(int n) {
    if (n < 0 || n > max_n_) throw config_error("sampler: n outside the table range");
    BlockSequenceSample s;
    s.total = n;
    int rem = n;
    while (rem > 0) {
        int k = pick_length(rem);
        s.blocks.emplace_back(k, pick_type(k));
        rem -= k;
    }
    return s;
}

Rat BlockSequenceSampler::sequence_probability(const BlockSeq& seq) const {
    int total = 0;
    Rat num(1);
    for (const auto& [len, type] : seq) {
        if (len < 1 || len > max_n_) return Rat(0);
        total += len;
        num *= Rat(type_counts_[static_cast<size_t>(len)][block_type_index(type)]);
    }
    if (total > max_n_) throw config_error("sequence_probability: total exceeds the table range");
    return num / Rat(g_[static_cast<size_t>(total)]);
}

}  // namespace blockspec
