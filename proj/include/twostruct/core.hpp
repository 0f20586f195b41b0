#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twostruct/error.hpp"
#include "twostruct/vertex_set.hpp"

namespace twostruct {

struct ColorId {
    std::uint16_t index = 0;

    constexpr ColorId() = default;
    constexpr explicit ColorId(std::size_t i) : index(static_cast<std::uint16_t>(i)) {}

    friend constexpr auto operator<=>(ColorId, ColorId) = default;
};

// Raw matrix entry used on the diagonal.
inline constexpr std::uint16_t kNoColor = 0xFFFF;
inline constexpr std::size_t kMaxColors = 0xFFFE;

enum class ColorKind { Symmetric, Asymmetric, Unpaired };

struct ColorRecord {
    std::string name;
    ColorKind kind = ColorKind::Unpaired;
    ColorId partner{};  // self for symmetric colors, unused for unpaired ones
};

class ColorCatalog {
public:
    ColorId add_symmetric(std::string name);
    std::pair<ColorId, ColorId> add_asymmetric_pair(std::string name, std::string partner_name);
    ColorId add_unpaired(std::string name);
    ColorId add(ColorRecord record);

    std::size_t size() const noexcept { return records_.size(); }
    const ColorRecord& operator[](ColorId c) const { return records_.at(c.index); }
    const std::vector<ColorRecord>& records() const noexcept { return records_; }
    std::optional<ColorId> find(std::string_view name) const;

    // True when every color is symmetric or partnered, i.e. the catalog
    // claims the structure is reversible.
    bool declares_pairing() const;

    // Names unique and well formed, partner map an involution.
    void validate() const;

private:
    std::vector<ColorRecord> records_;
};

bool is_valid_color_name(std::string_view name);

class TwoStructure {
public:
    // pair_color is row-major n*n; diagonal entries are ignored.
    static TwoStructure build(std::size_t n, ColorCatalog catalog, const std::vector<ColorId>& pair_color);

    // Catalog derived from the matrix: colors never used are dropped,
    // kinds come from the star map when the partition is reversible and are
    // Unpaired otherwise. kept[i] is the input index of output color i.
    struct Derived;
    static Derived derive(std::size_t n, const std::vector<std::string>& names, std::vector<std::uint16_t> raw);

    std::size_t size() const noexcept { return n_; }
    std::size_t color_count() const noexcept { return catalog_.size(); }
    const ColorCatalog& catalog() const noexcept { return catalog_; }
    const std::string& name(ColorId c) const { return catalog_[c].name; }

    ColorId color(Vertex u, Vertex v) const { return ColorId(raw_[u * n_ + v]); }
    std::uint16_t raw(Vertex u, Vertex v) const { return raw_[u * n_ + v]; }
    std::span<const std::uint16_t> matrix() const noexcept { return raw_; }

    bool is_reversible() const noexcept { return reversible_; }
    // Star partner of a color; requires a reversible structure.
    ColorId star_of(ColorId c) const;
    bool is_symmetric(ColorId c) const;
    std::vector<ColorId> symmetric_colors() const;
    std::vector<ColorId> asymmetric_colors() const;

    VertexSet vertices() const { return VertexSet::range(n_); }

private:
    TwoStructure() = default;
    void compute_star();

    std::size_t n_ = 0;
    ColorCatalog catalog_;
    std::vector<std::uint16_t> raw_;
    bool reversible_ = false;
    std::vector<std::uint16_t> star_;  // filled when reversible
};

struct TwoStructure::Derived {
    TwoStructure structure;
    std::vector<ColorId> kept;
};

TwoStructure from_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);
TwoStructure from_tournament(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& arcs);

TwoStructure star(const TwoStructure& sigma);

struct MeetResult {
    TwoStructure structure;
    // For each output color, the pair (left color, right color) it refines.
    std::vector<std::pair<ColorId, ColorId>> provenance;
};
MeetResult meet(const TwoStructure& sigma, const TwoStructure& tau);

struct SubstructureResult {
    TwoStructure structure;
    std::vector<Vertex> vertex_map;  // new id -> old id
    std::vector<ColorId> color_map;  // new color -> old color
};
SubstructureResult substructure(const TwoStructure& sigma, const VertexSet& w);

struct ReversibilityReport {
    bool reversible = false;
    std::vector<ColorId> symmetric;
    std::vector<ColorId> asymmetric;
};
ReversibilityReport is_reversible(const TwoStructure& sigma);

// Matrix with colors renumbered by first occurrence in row-major order.
std::vector<std::uint16_t> canonical_matrix(const TwoStructure& sigma);
bool same_partition(const TwoStructure& a, const TwoStructure& b);
// Same partition, same names, same catalog order.
bool identical(const TwoStructure& a, const TwoStructure& b);

}  // namespace twostruct
