#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "twostruct/core.hpp"
#include "twostruct/extensions.hpp"

namespace twostruct {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

// kDefaultBudget unless TWOSTRUCT_BUDGET holds a positive integer.
std::uint64_t default_budget();

struct BoundResult {
    std::optional<std::size_t> value;  // empty: no faithful primitive extension exists
    std::string case_tag;
    std::size_t lower = 0;
    std::optional<Extension> witness;
    // Structures with a single color: the graph bound with a second color
    // and its (non-faithful) witness.
    std::optional<std::size_t> sumner;
    std::optional<Extension> sumner_witness;
};

BoundResult primitive_bound(const TwoStructure& sigma);

struct OracleOptions {
    std::uint64_t budget = kDefaultBudget;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct OracleResult {
    std::optional<std::size_t> k;  // empty: none up to k_max
    std::size_t k_max = 0;
    std::optional<Extension> witness;
    std::uint64_t evaluated = 0;
};

// Smallest k <= k_max admitting a primitive faithful k-extension, with the
// lexicographically smallest witness over the new-pair color vector.
OracleResult oracle_min_extension(const TwoStructure& sigma, std::size_t k_max, const OracleOptions& options = {});
OracleResult oracle_min_extension(const TwoStructure& sigma, std::size_t k_max, std::uint64_t budget);

std::size_t count_primitive_1extensions(const TwoStructure& sigma, std::uint64_t budget = default_budget());

}  // namespace twostruct
