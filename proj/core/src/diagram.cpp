#include "blockspec/diagram.hpp"

#include "blockspec/numeric.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace blockspec {

Diagram::Diagram(int n_, std::vector<Arc> arcs_) : n(n_), arcs(std::move(arcs_)) {
    if (n < 0) throw config_error("diagram: negative backbone length");
    std::sort(arcs.begin(), arcs.end());
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    for (const auto& [i, j] : arcs) {
        if (i < 1 || j > n || i >= j)
            throw config_error("diagram: arc (" + std::to_string(i) + "," +
                               std::to_string(j) + ") out of range");
        if (used[i] || used[j])
            throw config_error("diagram: vertex paired twice");
        used[i] = used[j] = 1;
    }
    if (n <= 1 && !arcs.empty())
        throw config_error("diagram: arcs require n >= 2");
}

bool arcs_cross(const Arc& a, const Arc& b) {
    return (a.first < b.first && b.first < a.second && a.second < b.second) ||
           (b.first < a.first && a.first < b.second && b.second < a.second);
}

const char* to_string(BlockType t) {
    switch (t) {
        case BlockType::Trivial: return "trivial";
        case BlockType::T: return "T";
        case BlockType::H: return "H";
        case BlockType::K: return "K";
        case BlockType::L: return "L";
        case BlockType::M: return "M";
        case BlockType::Other: return "other";
    }
    return "?";
}

std::optional<BlockType> block_type_from_string(const std::string& s) {
    if (s == "trivial") return BlockType::Trivial;
    if (s == "T") return BlockType::T;
    if (s == "H") return BlockType::H;
    if (s == "K") return BlockType::K;
    if (s == "L") return BlockType::L;
    if (s == "M") return BlockType::M;
    if (s == "other") return BlockType::Other;
    return std::nullopt;
}

StructureParams::StructureParams(int gamma_, int r_, int lambda_)
    : gamma(gamma_), r(r_), lambda(lambda_) {
    if (gamma < 0 || gamma > 2)
        throw config_error("params: gamma must be in [0, 2]");
    if (r < 1 || r > 4) throw config_error("params: stack length r must be in [1, 4]");
    if (lambda < 1 || lambda > 4)
        throw config_error("params: arc length lambda must be in [1, 4]");
    if (lambda > r + 1)
        throw config_error("params: lambda <= r + 1 required");
}

std::string StructureParams::label() const {
    return "gamma=" + std::to_string(gamma) + ",r=" + std::to_string(r) +
           ",lambda=" + std::to_string(lambda);
}

// ---------------------------------------------------------------------------
// Fatgraph boundary walk.
//
// Darts are directed edges; at each backbone vertex the counterclockwise
// order of outgoing darts (arcs drawn above the backbone) is
//   (to v+1, arc, to v-1).
// A boundary component is an orbit of d -> ccw-successor at head(d) of the
// reversed dart.
// ---------------------------------------------------------------------------

int boundary_components(const Diagram& d) {
    const int n = d.n;
    if (n == 0) return 0;
    const int m = static_cast<int>(d.arcs.size());
    // Dart ids: backbone edge i in [0, n-2]: right dart 2i (i+1 -> i+2),
    // left dart 2i+1.  Arc t: darts 2(n-1)+2t (left->right) and +1.
    const int nb = 2 * (n - 1);
    const int nd = nb + 2 * m;
    std::vector<int> head(nd), mate(nd);
    std::vector<int> arc_at(static_cast<size_t>(n) + 1, -1);
    for (int i = 0; i + 1 < n; ++i) {
        head[2 * i] = i + 2;
        head[2 * i + 1] = i + 1;
        mate[2 * i] = 2 * i + 1;
        mate[2 * i + 1] = 2 * i;
    }
    for (int t = 0; t < m; ++t) {
        const auto& [a, b] = d.arcs[t];
        head[nb + 2 * t] = b;
        head[nb + 2 * t + 1] = a;
        mate[nb + 2 * t] = nb + 2 * t + 1;
        mate[nb + 2 * t + 1] = nb + 2 * t;
        arc_at[a] = nb + 2 * t;
        arc_at[b] = nb + 2 * t + 1;
    }
    // Outgoing darts at each vertex in ccw order.
    std::vector<std::vector<int>> out(static_cast<size_t>(n) + 1);
    for (int v = 1; v <= n; ++v) {
        if (v < n) out[v].push_back(2 * (v - 1));      // east
        if (arc_at[v] >= 0) out[v].push_back(arc_at[v]);  // north
        if (v > 1) out[v].push_back(2 * (v - 2) + 1);  // west
    }
    std::vector<int> pos(nd);
    for (int v = 1; v <= n; ++v)
        for (size_t k = 0; k < out[v].size(); ++k) pos[out[v][k]] = static_cast<int>(k);

    std::vector<char> seen(nd, 0);
    int faces = 0;
    for (int start = 0; start < nd; ++start) {
        if (seen[start]) continue;
        ++faces;
        int dart = start;
        while (!seen[dart]) {
            seen[dart] = 1;
            int back = mate[dart];
            const auto& ring = out[head[dart]];
            dart = ring[(pos[back] + 1) % ring.size()];
        }
    }
    if (m == 0 && n == 1) return 1;  // isolated disc
    return faces;
}

int genus(const Diagram& d) {
    if (d.n == 0) return 0;
    const int v = d.n;
    const int e = (d.n - 1) + static_cast<int>(d.arcs.size());
    const int chi = v - e + boundary_components(d);
    const int twice_genus = 2 - chi;
    if (twice_genus < 0 || twice_genus % 2 != 0)
        throw consistency_error("fatgraph: impossible Euler characteristic");
    return twice_genus / 2;
}

namespace {

// Induced diagram over the given arcs, vertices relabeled consecutively.
Diagram induced_diagram(const std::vector<Arc>& arcs) {
    std::vector<int> verts;
    verts.reserve(arcs.size() * 2);
    for (const auto& [i, j] : arcs) {
        verts.push_back(i);
        verts.push_back(j);
    }
    std::sort(verts.begin(), verts.end());
    std::map<int, int> relabel;
    for (size_t k = 0; k < verts.size(); ++k) relabel[verts[k]] = static_cast<int>(k) + 1;
    std::vector<Arc> out;
    out.reserve(arcs.size());
    for (const auto& [i, j] : arcs) out.emplace_back(relabel[i], relabel[j]);
    return Diagram(static_cast<int>(verts.size()), std::move(out));
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<Component> components(const Diagram& d) {
    const int m = static_cast<int>(d.arcs.size());
    if (m == 0) return {};
    UnionFind uf(static_cast<size_t>(m));
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (arcs_cross(d.arcs[a], d.arcs[b])) uf.unite(a, b);

    // Maximal arcs: no other arc strictly encloses them.  Arcs are sorted by
    // left endpoint, so a running maximum of right endpoints suffices.
    std::vector<char> is_max(static_cast<size_t>(m), 0);
    int max_j = 0;
    for (int a = 0; a < m; ++a) {
        if (d.arcs[a].second > max_j) {
            is_max[a] = 1;
            max_j = d.arcs[a].second;
        }
    }

    std::map<int, std::vector<int>> classes;  // root -> arc indices
    for (int a = 0; a < m; ++a) classes[uf.find(a)].push_back(a);

    std::vector<Component> out;
    out.reserve(classes.size());
    for (auto& [root, idx] : classes) {
        Component c;
        for (int a : idx) {
            c.arcs.push_back(d.arcs[a]);
            c.vertices.push_back(d.arcs[a].first);
            c.vertices.push_back(d.arcs[a].second);
            if (is_max[a]) c.maximal = true;
        }
        std::sort(c.arcs.begin(), c.arcs.end());
        std::sort(c.vertices.begin(), c.vertices.end());
        c.genus = genus(induced_diagram(c.arcs));
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(),
              [](const Component& a, const Component& b) { return a.vertices.front() < b.vertices.front(); });
    return out;
}

Diagram shadow(const Diagram& d) {
    std::vector<Arc> arcs = d.arcs;
    for (;;) {
        // Drop arcs that cross nothing.
        std::vector<Arc> kept;
        for (const auto& a : arcs) {
            bool crosses = false;
            for (const auto& b : arcs)
                if (a != b && arcs_cross(a, b)) {
                    crosses = true;
                    break;
                }
            if (crosses) kept.push_back(a);
        }
        bool changed = kept.size() != arcs.size();
        // Relabel onto the surviving endpoints.
        Diagram cur = induced_diagram(kept);
        // Collapse stacks: keep an arc only if (i-1, j+1) is absent.
        std::set<Arc> present(cur.arcs.begin(), cur.arcs.end());
        std::vector<Arc> collapsed;
        for (const auto& [i, j] : cur.arcs) {
            if (!present.count({i - 1, j + 1})) collapsed.emplace_back(i, j);
        }
        changed = changed || collapsed.size() != cur.arcs.size();
        arcs = std::move(collapsed);
        if (!changed) return induced_diagram(arcs);
        // Re-induce before the next pass so stack tests see fresh labels.
        Diagram next = induced_diagram(arcs);
        arcs = next.arcs;
    }
}

namespace {

// Canonical genus-1 irreducible shadows.
const std::vector<Arc> kShadowH = {{1, 3}, {2, 4}};
const std::vector<Arc> kShadowK = {{1, 3}, {2, 5}, {4, 6}};
const std::vector<Arc> kShadowL = {{1, 4}, {2, 5}, {3, 6}};
const std::vector<Arc> kShadowM = {{1, 4}, {2, 6}, {3, 7}, {5, 8}};

BlockType classify_component(const Component& comp) {
    if (comp.arcs.size() == 1) return BlockType::T;
    Diagram sh = shadow(induced_diagram(comp.arcs));
    if (comp.genus >= 2) return BlockType::Other;
    if (sh.arcs == kShadowH) return BlockType::H;
    if (sh.arcs == kShadowK) return BlockType::K;
    if (sh.arcs == kShadowL) return BlockType::L;
    if (sh.arcs == kShadowM) return BlockType::M;
    throw consistency_error("classify: unrecognized genus-1 shadow");
}

}  // namespace

std::vector<BlockRecord> blocks(const Diagram& d) { return blocks(d, components(d)); }

std::vector<BlockRecord> blocks(const Diagram& d, const std::vector<Component>& comps) {
    std::vector<char> covered(static_cast<size_t>(d.n) + 1, 0);
    std::vector<BlockRecord> out;
    for (const auto& c : comps) {
        if (!c.maximal) continue;
        BlockRecord b;
        b.begin = c.vertices.front();
        b.end = c.vertices.back();
        b.kind = c.arcs.size() == 1 && c.genus == 0 ? BlockKind::ZeroBlock
                                                    : BlockKind::GammaBlock;
        b.shadow_type = classify_component(c);
        out.push_back(b);
        for (int v = b.begin; v <= b.end; ++v) covered[v] = 1;
    }
    std::vector<char> paired(static_cast<size_t>(d.n) + 1, 0);
    for (const auto& [i, j] : d.arcs) paired[i] = paired[j] = 1;
    for (int v = 1; v <= d.n; ++v) {
        if (covered[v]) continue;
        if (paired[v])
            throw consistency_error("blocks: paired vertex outside every maximal span");
        BlockRecord b;
        b.begin = b.end = v;
        b.kind = BlockKind::Trivial;
        out.push_back(b);
    }
    std::sort(out.begin(), out.end(),
              [](const BlockRecord& a, const BlockRecord& b) { return a.begin < b.begin; });
    // Tiling check: consecutive intervals must abut and cover [1, n].
    int expect = 1;
    for (const auto& b : out) {
        if (b.begin != expect)
            throw consistency_error("blocks: intervals do not tile the backbone");
        expect = b.end + 1;
    }
    if (expect != d.n + 1)
        throw consistency_error("blocks: intervals do not cover the backbone");
    return out;
}

BlockType classify_block_type(const BlockRecord& b, const Diagram& d) {
    if (b.kind == BlockKind::Trivial)
        throw config_error("classify_block_type: trivial block has no shadow type");
    std::vector<Arc> inside;
    for (const auto& a : d.arcs)
        if (a.first >= b.begin && a.second <= b.end) inside.push_back(a);
    Diagram sub = induced_diagram(inside);
    std::vector<Component> comps = components(sub);
    for (const auto& c : comps)
        if (c.maximal && c.vertices.front() == 1 && c.vertices.back() == sub.n)
            return classify_component(c);
    throw consistency_error("classify_block_type: no spanning maximal component");
}

Diagram parse_diagram(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw config_error("diagram file: missing header");
    if (line.rfind("n=", 0) != 0) throw config_error("diagram file: first line must be n=<int>");
    int n = 0;
    try {
        n = std::stoi(line.substr(2));
    } catch (const std::exception&) {
        throw config_error("diagram file: bad backbone length");
    }
    std::vector<Arc> arcs;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        int i, j;
        if (!(ls >> i)) continue;  // blank line
        if (!(ls >> j)) throw config_error("diagram file: arc line needs two integers");
        arcs.emplace_back(i, j);
    }
    return Diagram(n, std::move(arcs));
}

std::string format_diagram(const Diagram& d) {
    std::string s = "n=" + std::to_string(d.n) + "\n";
    for (const auto& [i, j] : d.arcs) s += std::to_string(i) + " " + std::to_string(j) + "\n";
    return s;
}

}  // namespace blockspec
