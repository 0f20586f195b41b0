#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twostruct/decomposition.hpp"

namespace twostruct {

struct Traverse {
    std::vector<Vertex> order;
    std::vector<std::size_t> position;  // position[v] = index of v in order

    static Traverse from_order(std::vector<Vertex> order);
    bool is_interval(const VertexSet& w) const;
};

using Bicoloration = std::vector<std::uint8_t>;  // indexed by vertex

Traverse build_traverse(const TwoStructure& sigma, const ClanTree& tree);

// Empty when the order is a traverse, otherwise a description of the
// first violated condition.
std::string traverse_violation(const ClanTree& tree, const Traverse& t);

Bicoloration dense_bicoloration(const Traverse& t);
bool is_dense(const Traverse& t, const Bicoloration& beta);
Bicoloration flipped(const Bicoloration& beta);

}  // namespace twostruct
