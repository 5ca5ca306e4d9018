#include "blockspec/oracle.hpp"

#include "blockspec/numeric.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <thread>

namespace blockspec {

int block_type_index(BlockType t) { return static_cast<int>(t); }

BlockType block_type_at(int idx) { return static_cast<BlockType>(idx); }

void EnumerationStats::merge(const EnumerationStats& other) {
    count += other.count;
    for (size_t m = 0; m < longest_block.size(); ++m) longest_block[m] += other.longest_block[m];
    for (size_t k = 0; k < block_census.size(); ++k)
        for (int t = 0; t < kBlockTypeCount; ++t) block_census[k][t] += other.block_census[k][t];
    for (size_t k = 0; k < by_count.size(); ++k)
        for (size_t b = 0; b < by_count[k].size(); ++b) by_count[k][b] += other.by_count[k][b];
    for (size_t k = 0; k < typed_by_count.size(); ++k)
        for (int t = 0; t < kBlockTypeCount; ++t)
            for (size_t b = 0; b < typed_by_count[k][t].size(); ++b)
                typed_by_count[k][t][b] += other.typed_by_count[k][t][b];
    for (const auto& [seq, c] : other.sequence_census) sequence_census[seq] += c;
}

namespace {

EnumerationStats make_empty_stats(int n, const StructureParams& p) {
    EnumerationStats s;
    s.n = n;
    s.params = p;
    s.longest_block.assign(static_cast<size_t>(n) + 1, 0);
    s.block_census.assign(static_cast<size_t>(n) + 1, {});
    s.by_count.assign(static_cast<size_t>(n) + 1, {});
    s.typed_by_count.assign(static_cast<size_t>(n) + 1, {});
    for (int k = 0; k <= n; ++k) {
        size_t bmax = k >= 1 ? static_cast<size_t>(n / k) + 1 : 1;
        s.by_count[k].assign(bmax, 0);
        for (int t = 0; t < kBlockTypeCount; ++t) s.typed_by_count[k][t].assign(bmax, 0);
    }
    return s;
}

bool stacks_ok(const std::vector<Arc>& arcs, int r) {
    if (r <= 1) return true;
    std::set<Arc> present(arcs.begin(), arcs.end());
    for (const auto& [i, j] : arcs) {
        if (present.count({i - 1, j + 1})) continue;  // not a stack start
        int len = 1;
        while (present.count({i + len, j - len})) ++len;
        if (len < r) return false;
    }
    return true;
}

void record(const Diagram& d, EnumerationStats& s) {
    s.count += 1;
    if (d.n == 0) {
        s.sequence_census[BlockSeq{}] += 1;
        return;
    }
    std::vector<Component> comps = components(d);
    std::vector<BlockRecord> bl = blocks(d, comps);
    BlockSeq seq;
    seq.reserve(bl.size());
    int longest = 0;
    std::vector<int> per_len(static_cast<size_t>(d.n) + 1, 0);
    std::vector<std::array<int, kBlockTypeCount>> per_len_type(static_cast<size_t>(d.n) + 1,
                                                              std::array<int, kBlockTypeCount>{});
    for (const auto& b : bl) {
        int len = b.length();
        BlockType t = b.kind == BlockKind::Trivial ? BlockType::Trivial : *b.shadow_type;
        seq.emplace_back(len, t);
        longest = std::max(longest, len);
        s.block_census[len][block_type_index(t)] += 1;
        per_len[len] += 1;
        per_len_type[len][block_type_index(t)] += 1;
    }
    s.longest_block[longest] += 1;
    for (int k = 1; k <= d.n; ++k) {
        s.by_count[k][per_len[k]] += 1;
        for (int t = 0; t < kBlockTypeCount; ++t)
            s.typed_by_count[k][t][per_len_type[k][t]] += 1;
    }
    s.sequence_census[std::move(seq)] += 1;
}

// Depth-first enumeration over partial matchings; vertex v is the first
// still-unassigned position.
void enumerate_rec(int v, int n, int lambda, const StructureParams& p,
                   std::vector<int>& partner, std::vector<Arc>& arcs, EnumerationStats& s) {
    while (v <= n && partner[v] != 0) ++v;
    if (v > n) {
        Diagram d(n, arcs);
        if (is_structure(d, p)) record(d, s);
        return;
    }
    // v unpaired.
    partner[v] = -1;
    enumerate_rec(v + 1, n, lambda, p, partner, arcs, s);
    partner[v] = 0;
    // v paired with j, arc length >= lambda.
    for (int j = v + lambda; j <= n; ++j) {
        if (partner[j] != 0) continue;
        partner[v] = j;
        partner[j] = v;
        arcs.emplace_back(v, j);
        enumerate_rec(v + 1, n, lambda, p, partner, arcs, s);
        arcs.pop_back();
        partner[v] = partner[j] = 0;
    }
}

}  // namespace

bool is_structure(const Diagram& d, const StructureParams& p) {
    for (const auto& [i, j] : d.arcs)
        if (j - i < p.lambda) return false;
    if (!stacks_ok(d.arcs, p.r)) return false;
    for (const auto& c : components(d))
        if (c.genus > p.gamma) return false;
    return true;
}

BlockSeq block_sequence(const Diagram& d) {
    BlockSeq seq;
    for (const auto& b : blocks(d)) {
        BlockType t = b.kind == BlockKind::Trivial ? BlockType::Trivial : *b.shadow_type;
        seq.emplace_back(b.length(), t);
    }
    return seq;
}

EnumerationStats enumerate_structures(int n, const StructureParams& p, int max_n, bool parallel) {
    if (n < 0) throw config_error("enumerate: n must be nonnegative");
    if (n > max_n)
        throw config_error("enumerate: n=" + std::to_string(n) + " exceeds the exhaustive bound " +
                           std::to_string(max_n));
    EnumerationStats total = make_empty_stats(n, p);
    if (n == 0) {
        record(Diagram(0, {}), total);
        return total;
    }

    // One branch per decision at vertex 1; merged in branch order.
    struct Branch {
        int partner;  // -1: vertex 1 unpaired; else the partner of vertex 1
    };
    std::vector<Branch> branches{{-1}};
    for (int j = 1 + p.lambda; j <= n; ++j) branches.push_back({j});

    auto run_branch = [&](const Branch& br) {
        EnumerationStats s = make_empty_stats(n, p);
        std::vector<int> partner(static_cast<size_t>(n) + 1, 0);
        std::vector<Arc> arcs;
        partner[1] = br.partner;
        if (br.partner > 0) {
            partner[br.partner] = 1;
            arcs.emplace_back(1, br.partner);
        }
        enumerate_rec(2, n, p.lambda, p, partner, arcs, s);
        return s;
    };

    if (!parallel || branches.size() <= 1) {
        for (const auto& br : branches) total.merge(run_branch(br));
        return total;
    }
    std::vector<std::future<EnumerationStats>> futs;
    futs.reserve(branches.size());
    for (const auto& br : branches)
        futs.push_back(std::async(std::launch::async, run_branch, br));
    for (auto& f : futs) total.merge(f.get());
    return total;
}

}  // namespace blockspec
