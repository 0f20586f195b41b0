#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "twostruct/core.hpp"

namespace twostruct {

inline constexpr std::size_t kDefaultGuard = 16;

// Sorted by (size, lexicographic), no duplicates.
using ClanFamily = std::vector<VertexSet>;
using Factorization = std::vector<VertexSet>;

bool is_clan(const TwoStructure& sigma, const VertexSet& c);

// Least clan containing w.
VertexSet clan_closure(const TwoStructure& sigma, const VertexSet& w);

ClanFamily enumerate_clans(const TwoStructure& sigma, std::size_t min_size = 0, std::size_t guard = kDefaultGuard);

bool is_primitive(const TwoStructure& sigma);

// Prime clans from the clan tree: the empty set plus every tree node.
ClanFamily prime_clans(const TwoStructure& sigma);
// Same family by brute force: clans overlapping no other clan.
ClanFamily prime_clans_by_enumeration(const TwoStructure& sigma, std::size_t guard = kDefaultGuard);

struct QuotientResult {
    TwoStructure structure;
    std::vector<VertexSet> blocks;  // block i is vertex i of the quotient
    std::vector<ColorId> color_map; // quotient color -> sigma color
};
QuotientResult quotient(const TwoStructure& sigma, const Factorization& f);

struct PrimeEnvelope {
    VertexSet tilde;
    std::optional<VertexSet> hat;  // empty when w is the whole vertex set
};
PrimeEnvelope prime_envelope(const TwoStructure& sigma, const VertexSet& w);

namespace detail {

// Closure and primitivity on a raw row-major matrix, restricted to the
// vertices listed in `universe` (all of 0..n-1 when empty).
struct MatrixView {
    std::size_t n;
    const std::uint16_t* data;
    std::uint16_t at(std::size_t u, std::size_t v) const { return data[u * n + v]; }
};

std::vector<std::size_t> closure(MatrixView m, std::span<const std::size_t> universe,
                                 std::span<const std::size_t> seed);
bool primitive(MatrixView m);
bool is_clan(MatrixView m, std::span<const std::size_t> members);

}  // namespace detail

}  // namespace twostruct
