#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace blockspec {

/// Arc over the backbone, stored with first < second, 1-indexed.
using Arc = std::pair<int, int>;

/// A partial matching drawn as arcs in the upper half-plane over a linear
/// backbone of n vertices.  Arc endpoints are pairwise distinct and every
/// arc satisfies 1 <= i < j <= n.
struct Diagram {
    int n = 0;
    std::vector<Arc> arcs;  // kept sorted by left endpoint

    Diagram() = default;
    Diagram(int n_, std::vector<Arc> arcs_);

    bool operator==(const Diagram&) const = default;
};

/// Two arcs (i1,j1), (i2,j2) cross iff i1 < i2 < j1 < j2.
bool arcs_cross(const Arc& a, const Arc& b);

/// One crossing-association class: arcs connected by chains of pairwise
/// crossing arcs, with the induced endpoint set and fatgraph genus.
struct Component {
    std::vector<Arc> arcs;
    std::vector<int> vertices;  // sorted endpoint set
    int genus = 0;
    bool maximal = false;       // contains a nesting-maximal arc
};

enum class BlockKind { Trivial, ZeroBlock, GammaBlock };

/// Named irreducible-shadow classes.  T is the single-arc (rainbow) shadow;
/// H, K, L, M are the four genus-1 shadows by arc count (H: 2 arcs,
/// K: kissing hairpin, L: 3-knot with pairwise crossing arcs, M: 4 arcs);
/// Other covers genus-2 shadows.
enum class BlockType { Trivial, T, H, K, L, M, Other };

const char* to_string(BlockType t);
std::optional<BlockType> block_type_from_string(const std::string& s);

/// One interval of the backbone partition induced by exterior vertices and
/// maximal components.  Blocks of one diagram tile [1, n] disjointly.
struct BlockRecord {
    int begin = 0;  // inclusive backbone positions
    int end = 0;
    BlockKind kind = BlockKind::Trivial;
    std::optional<BlockType> shadow_type;  // unset for trivial blocks
    int length() const { return end - begin + 1; }
};

/// The parameter triple: maximal component genus bound, minimum stack
/// length r, minimum arc length lambda.  lambda <= r + 1 is required by the
/// counting system; gamma <= 2 because only the genus-1 and genus-2 shadow
/// polynomials are built in.
struct StructureParams {
    int gamma = 1;
    int r = 2;
    int lambda = 2;

    StructureParams() = default;
    StructureParams(int gamma_, int r_, int lambda_);

    bool operator==(const StructureParams&) const = default;
    std::string label() const;
};

/// Crossing-association classes of d, in order of leftmost endpoint.
/// The union of the classes is exactly d.arcs.
std::vector<Component> components(const Diagram& d);

/// Fatgraph genus of the whole diagram (backbone included):
/// g = 1 - chi/2 with chi = discs - ribbons + boundary components.
int genus(const Diagram& d);

/// Number of boundary components of the fatgraph surface of d.
int boundary_components(const Diagram& d);

/// Backbone partition into trivial blocks (exterior vertices) and blocks
/// bounded by maximal components, left to right.  Nontrivial blocks carry
/// their shadow type.
std::vector<BlockRecord> blocks(const Diagram& d);

/// Same, reusing an already computed component partition of d.
std::vector<BlockRecord> blocks(const Diagram& d, const std::vector<Component>& comps);

/// The shadow: repeatedly drop arcs that cross nothing, drop unpaired
/// vertices and collapse stacks, until stable.  Result is a diagram on
/// 2m vertices for m remaining arcs (possibly empty); idempotent.
Diagram shadow(const Diagram& d);

/// Type of a nontrivial block of d.  Throws config_error on trivial input.
BlockType classify_block_type(const BlockRecord& b, const Diagram& d);

/// Text format: first line "n=<int>", then one "i j" arc per line.
Diagram parse_diagram(std::istream& in);
std::string format_diagram(const Diagram& d);

}  // namespace blockspec
