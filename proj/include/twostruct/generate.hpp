#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "twostruct/core.hpp"

namespace twostruct {

// One representative per isomorphism class, ordered by edge (arc) mask.
std::vector<TwoStructure> all_graphs(std::size_t n);
std::vector<TwoStructure> all_tournaments(std::size_t n);

struct RandomSpec {
    std::size_t n = 5;
    std::size_t max_colors = 4;
    bool reversible = true;
};

// Colors are drawn per unordered pair (reversible) or per ordered pair.
// Unused colors are dropped, so the result may have fewer colors.
TwoStructure random_structure(const RandomSpec& spec, std::mt19937_64& rng);
TwoStructure random_tournament(std::size_t n, std::mt19937_64& rng);
TwoStructure linear_order(std::size_t n);

}  // namespace twostruct
