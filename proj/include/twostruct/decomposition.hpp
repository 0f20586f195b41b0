#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twostruct/clans.hpp"
#include "twostruct/core.hpp"

namespace twostruct {

enum class NodeKind { Leaf, Complete, Linear, Primitive };

const char* to_string(NodeKind kind);

struct NodeLabel {
    NodeKind kind = NodeKind::Leaf;
    // Complete: the color shared by all cross pairs. Linear: the color of
    // (Y,Z) for Y before Z in the child order. Unused otherwise.
    ColorId color{};
};

struct ClanTree {
    VertexSet vertices;
    NodeLabel label;
    // Linear nodes list children in their linear order, other nodes by
    // smallest vertex.
    std::vector<ClanTree> children;

    bool is_leaf() const { return children.empty(); }
    std::vector<VertexSet> child_sets() const;
    std::size_t singleton_children() const;
};

ClanTree clan_tree(const TwoStructure& sigma);

// Pre-order listing of every node including leaves.
std::vector<const ClanTree*> tree_nodes(const ClanTree& root);
const ClanTree& smallest_node_containing(const ClanTree& root, const VertexSet& w);
const ClanTree* parent_of(const ClanTree& root, const ClanTree& node);
PrimeEnvelope prime_envelope(const ClanTree& root, const VertexSet& w);

// Union of the children of a Linear node between positions first and last
// inclusive, i.e. the smallest interval holding both.
VertexSet linear_interval(const ClanTree& node, std::size_t first, std::size_t last);

std::vector<VertexSet> gallai_family(const TwoStructure& sigma);

struct FamiliesReport {
    std::vector<VertexSet> complete;   // maximal complete clans of singletons
    std::vector<VertexSet> linear;     // maximal linear runs of singletons
    std::vector<VertexSet> primitive;  // primitive nodes with singleton children
    std::vector<VertexSet> classes;    // all equivalence classes, sizes >= 1
    VertexSet upsilon;                 // union of the singleton classes
    VertexSet upsilon_down;            // members of upsilon whose hat is themselves

    VertexSet union_all() const;  // union of complete, linear and primitive
};

FamiliesReport maximal_families(const TwoStructure& sigma, const ClanTree& tree);

struct CompletenessProfile {
    std::size_t c_value = 1;
    std::map<ColorId, VertexSet> isolated;  // symmetric colors only
};

CompletenessProfile completeness_profile(const TwoStructure& sigma);
CompletenessProfile completeness_profile(const TwoStructure& sigma, const FamiliesReport& families);

// Inclusive clans sorted by size. Up to the guard this filters every clan;
// above it candidates come from the clan tree (prime clans plus unions of
// quotient clans at Complete and Linear nodes).
std::vector<VertexSet> inclusive_clans(const TwoStructure& sigma, std::size_t guard = kDefaultGuard);
std::vector<VertexSet> inclusive_clans_from_tree(const TwoStructure& sigma, const ClanTree& tree,
                                                 const FamiliesReport& families);
bool is_inclusive(const TwoStructure& sigma, const ClanTree& tree, const FamiliesReport& families, const VertexSet& j);

}  // namespace twostruct
