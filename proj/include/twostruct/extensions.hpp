#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twostruct/core.hpp"
#include "twostruct/decomposition.hpp"
#include "twostruct/traverse.hpp"

namespace twostruct {

// tau restricted to its first `original` vertices is the extended structure;
// new vertices follow. color_embedding[e] is the tau color holding color e.
struct Extension {
    TwoStructure tau;
    std::size_t original = 0;
    std::vector<ColorId> color_embedding;
    bool faithful_by_construction = true;  // false only for Sumner witnesses

    std::size_t added() const { return tau.size() - original; }
    VertexSet original_set() const { return VertexSet::range(original); }
};

// sigma as its own 0-extension.
Extension identity_extension(const TwoStructure& sigma);

// Reads an extension from a structure whose first m vertices carry sigma.
// Throws NotAnExtension when the restriction is not sigma's partition.
Extension as_extension(const TwoStructure& sigma, const TwoStructure& tau);

struct FaithfulnessReport {
    bool bijective = true;       // no new colors
    bool star_compatible = true; // no new star incidences
    std::vector<std::string> violations;

    bool faithful() const { return bijective && star_compatible; }
};

FaithfulnessReport is_faithful(const TwoStructure& sigma, const Extension& ext);

// Colors for the pairs touching new vertices. For reversible bases set()
// fills the reverse pair with the star color.
class ExtensionRecipe {
public:
    ExtensionRecipe(const TwoStructure& sigma, std::size_t added);
    // Same, over a catalog that extends sigma's (used for Sumner witnesses).
    ExtensionRecipe(const TwoStructure& sigma, std::size_t added, ColorCatalog palette);

    std::size_t original() const { return n_; }
    std::size_t total() const { return total_; }
    Vertex new_vertex(std::size_t j) const { return n_ + j; }

    void set(Vertex u, Vertex v, ColorId c);
    void set_pair(Vertex u, Vertex v, ColorId uv, ColorId vu);
    ColorId get(Vertex u, Vertex v) const;
    bool is_set(Vertex u, Vertex v) const;

    // Fills pairs still unset between u and every new vertex.
    void fill_row(Vertex u, const std::vector<ColorId>& to_new);

    Extension finish() const;

private:
    ColorId star_color(ColorId c) const;

    std::size_t n_;
    std::size_t total_;
    std::size_t base_colors_;
    ColorCatalog palette_;
    std::vector<ColorId> matrix_;
    std::vector<char> set_;
    std::vector<int> star_;  // -1 when the color has no star partner
};

// Throws InternalProofViolation unless ext is primitive and, unless it is a
// Sumner witness, faithful.
void certify(const TwoStructure& sigma, const Extension& ext, const std::string& construction);
bool is_primitive_faithful(const TwoStructure& sigma, const Extension& ext);

struct OneExtensions {
    std::vector<Extension> extensions;
    std::size_t count = 0;
};
OneExtensions one_extensions_of_primitive(const TwoStructure& sigma);
// eps^nu - eps*nu - eps, computed exactly (signed to allow small cases).
long long one_extension_formula(std::size_t eps, std::size_t nu);

Extension primitivize_complete_clan(const TwoStructure& sigma, const VertexSet& s, ColorId e);
Extension extend_asym_linear_top(const TwoStructure& sigma);
Extension extend_via_inclusive(const TwoStructure& sigma);
Extension extend_small_c(const TwoStructure& sigma);
// The unverified one-vertex candidate built from beta (flip=false) or
// 1-beta (flip=true), exposed for clan-killing checks.
Extension small_c_candidate(const TwoStructure& sigma, bool flip);
Extension extend_log(const TwoStructure& sigma);
Extension extend_power_case(const TwoStructure& sigma, std::size_t k);
Extension extend_tournament(const TwoStructure& sigma);
Extension sumner_extension(const TwoStructure& sigma);
Extension lift_nonreversible(const TwoStructure& sigma, const Extension& rho);

struct ClanKillingReport {
    bool hypotheses_hold = true;
    bool conclusion_holds = true;
    std::vector<std::string> violations;

    bool ok() const { return hypotheses_hold && conclusion_holds; }
};

ClanKillingReport verify_clan_killing(const TwoStructure& sigma, const Extension& ext,
                                      const std::vector<VertexSet>& family);

// Smallest m with base^m >= x (base >= 2).
std::size_t ceil_log(std::size_t base, std::size_t x);
// k with base^k == x, if any (k >= 1).
std::optional<std::size_t> exact_log(std::size_t base, std::size_t x);

}  // namespace twostruct
