#include "twostruct/core.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace twostruct {

namespace {

std::string kind_word(ColorKind k) {
    switch (k) {
        case ColorKind::Symmetric: return "symmetric";
        case ColorKind::Asymmetric: return "asymmetric";
        case ColorKind::Unpaired: return "unpaired";
    }
    return "?";
}

}  // namespace

bool is_valid_color_name(std::string_view name) {
    if (name.empty() || name == ".") return false;
    for (char ch : name) {
        auto c = static_cast<unsigned char>(ch);
        if (c <= 0x20 || c == 0x7f || ch == '#') return false;
    }
    return true;
}

ColorId ColorCatalog::add_symmetric(std::string name) {
    ColorId id(records_.size());
    records_.push_back({std::move(name), ColorKind::Symmetric, id});
    return id;
}

std::pair<ColorId, ColorId> ColorCatalog::add_asymmetric_pair(std::string name, std::string partner_name) {
    ColorId a(records_.size());
    ColorId b(records_.size() + 1);
    records_.push_back({std::move(name), ColorKind::Asymmetric, b});
    records_.push_back({std::move(partner_name), ColorKind::Asymmetric, a});
    return {a, b};
}

ColorId ColorCatalog::add_unpaired(std::string name) {
    ColorId id(records_.size());
    records_.push_back({std::move(name), ColorKind::Unpaired, id});
    return id;
}

ColorId ColorCatalog::add(ColorRecord record) {
    ColorId id(records_.size());
    records_.push_back(std::move(record));
    return id;
}

std::optional<ColorId> ColorCatalog::find(std::string_view name) const {
    for (std::size_t i = 0; i < records_.size(); ++i)
        if (records_[i].name == name) return ColorId(i);
    return std::nullopt;
}

bool ColorCatalog::declares_pairing() const {
    return std::none_of(records_.begin(), records_.end(),
                        [](const ColorRecord& r) { return r.kind == ColorKind::Unpaired; });
}

void ColorCatalog::validate() const {
    if (records_.size() > kMaxColors) throw Error(ErrorKind::TooLarge, "too many colors");
    std::set<std::string_view> seen;
    for (const auto& r : records_) {
        if (!is_valid_color_name(r.name)) throw Error(ErrorKind::BadColorName, "bad color name '" + r.name + "'");
        if (!seen.insert(r.name).second) throw Error(ErrorKind::BadColorName, "duplicate color name '" + r.name + "'");
    }
    bool any_unpaired = false;
    bool any_paired = false;
    for (std::size_t i = 0; i < records_.size(); ++i) {
        const auto& r = records_[i];
        if (r.kind == ColorKind::Unpaired) {
            any_unpaired = true;
            continue;
        }
        any_paired = true;
        if (r.kind == ColorKind::Symmetric) {
            if (r.partner.index != i)
                throw Error(ErrorKind::BadPartnerInvolution, "symmetric color '" + r.name + "' has a partner");
            continue;
        }
        if (r.partner.index >= records_.size())
            throw Error(ErrorKind::BadPartnerInvolution, "partner of '" + r.name + "' does not exist");
        if (r.partner.index == i)
            throw Error(ErrorKind::BadPartnerInvolution, "asymmetric color '" + r.name + "' is its own partner");
        const auto& p = records_[r.partner.index];
        if (p.kind != ColorKind::Asymmetric || p.partner.index != i)
            throw Error(ErrorKind::BadPartnerInvolution,
                        "partner of '" + r.name + "' is '" + p.name + "' (" + kind_word(p.kind) + ") which does not pair back");
    }
    if (any_paired && any_unpaired)
        throw Error(ErrorKind::BadPartnerInvolution, "catalog mixes paired and unpaired colors");
}

TwoStructure TwoStructure::build(std::size_t n, ColorCatalog catalog, const std::vector<ColorId>& pair_color) {
    if (n == 0) throw Error(ErrorKind::EmptySet, "a 2-structure needs at least one vertex");
    if (pair_color.size() != n * n)
        throw Error(ErrorKind::OutOfRange, "pair map has " + std::to_string(pair_color.size()) + " entries, expected " +
                                               std::to_string(n * n));
    catalog.validate();

    TwoStructure s;
    s.n_ = n;
    s.raw_.assign(n * n, kNoColor);
    std::vector<char> used(catalog.size(), 0);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            ColorId c = pair_color[u * n + v];
            if (c.index >= catalog.size())
                throw Error(ErrorKind::UnknownColor, "pair (" + std::to_string(u) + "," + std::to_string(v) +
                                                         ") uses color index " + std::to_string(c.index));
            s.raw_[u * n + v] = c.index;
            used[c.index] = 1;
        }
    }
    if (catalog.declares_pairing()) {
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                ColorId c = s.color(u, v);
                ColorId expected = catalog[c].partner;
                if (s.color(v, u) != expected)
                    throw Error(ErrorKind::StarViolation,
                                "pair (" + std::to_string(v) + "," + std::to_string(u) + ") has color '" +
                                    catalog[s.color(v, u)].name + "' but the star of '" + catalog[c].name + "' is '" +
                                    catalog[expected].name + "'");
            }
        }
    }
    for (std::size_t i = 0; i < catalog.size(); ++i)
        if (!used[i]) throw Error(ErrorKind::UnusedColor, "color '" + catalog[ColorId(i)].name + "' is never used");
    s.catalog_ = std::move(catalog);
    s.compute_star();
    return s;
}

void TwoStructure::compute_star() {
    const std::size_t k = catalog_.size();
    std::vector<std::uint16_t> rev(k, kNoColor);
    bool ok = true;
    for (Vertex u = 0; u < n_ && ok; ++u) {
        for (Vertex v = 0; v < n_; ++v) {
            if (u == v) continue;
            std::uint16_t c = raw(u, v);
            std::uint16_t r = raw(v, u);
            if (rev[c] == kNoColor) {
                rev[c] = r;
            } else if (rev[c] != r) {
                ok = false;
                break;
            }
        }
    }
    reversible_ = ok;
    if (ok)
        star_ = std::move(rev);
    else
        star_.clear();
}

TwoStructure::Derived TwoStructure::derive(std::size_t n, const std::vector<std::string>& names,
                                           std::vector<std::uint16_t> raw) {
    if (n == 0) throw Error(ErrorKind::EmptySet, "a 2-structure needs at least one vertex");
    std::vector<std::uint16_t> remap(names.size(), kNoColor);
    Derived out{TwoStructure(), {}};
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            auto& c = raw[u * n + v];
            if (u == v) {
                c = kNoColor;
                continue;
            }
            if (c >= names.size()) throw Error(ErrorKind::UnknownColor, "color index out of range");
            if (remap[c] == kNoColor) remap[c] = 0;
        }
    }
    std::uint16_t next = 0;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (remap[i] == kNoColor) continue;
        remap[i] = next++;
        out.kept.push_back(ColorId(i));
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v) raw[u * n + v] = remap[raw[u * n + v]];

    TwoStructure& s = out.structure;
    s.n_ = n;
    s.raw_ = std::move(raw);
    for (ColorId old : out.kept) s.catalog_.add_unpaired(names[old.index]);
    // Temporarily unpaired so compute_star can read the matrix.
    s.compute_star();
    if (s.reversible_) {
        ColorCatalog cat;
        for (std::size_t i = 0; i < out.kept.size(); ++i) {
            ColorRecord r;
            r.name = names[out.kept[i].index];
            r.partner = ColorId(s.star_[i]);
            r.kind = (s.star_[i] == i) ? ColorKind::Symmetric : ColorKind::Asymmetric;
            cat.add(std::move(r));
        }
        s.catalog_ = std::move(cat);
    }
    s.catalog_.validate();
    return out;
}

ColorId TwoStructure::star_of(ColorId c) const {
    if (!reversible_) throw Error(ErrorKind::NotReversible, "star of a color is only defined for reversible structures");
    return ColorId(star_.at(c.index));
}

bool TwoStructure::is_symmetric(ColorId c) const { return reversible_ && star_.at(c.index) == c.index; }

std::vector<ColorId> TwoStructure::symmetric_colors() const {
    std::vector<ColorId> out;
    if (!reversible_) return out;
    for (std::size_t i = 0; i < star_.size(); ++i)
        if (star_[i] == i) out.push_back(ColorId(i));
    return out;
}

std::vector<ColorId> TwoStructure::asymmetric_colors() const {
    std::vector<ColorId> out;
    if (!reversible_) return out;
    for (std::size_t i = 0; i < star_.size(); ++i)
        if (star_[i] != i) out.push_back(ColorId(i));
    return out;
}

namespace {

void check_vertex(std::size_t n, Vertex v) {
    if (v >= n) throw Error(ErrorKind::OutOfRange, "vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
}

}  // namespace

TwoStructure from_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    if (n == 0) throw Error(ErrorKind::EmptySet, "a graph needs at least one vertex");
    std::vector<std::uint16_t> raw(n * n, 1);
    for (auto [u, v] : edges) {
        check_vertex(n, u);
        check_vertex(n, v);
        if (u == v) throw Error(ErrorKind::OutOfRange, "loop at vertex " + std::to_string(u));
        raw[u * n + v] = 0;
        raw[v * n + u] = 0;
    }
    return TwoStructure::derive(n, {"edge", "nonedge"}, std::move(raw)).structure;
}

TwoStructure from_tournament(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& arcs) {
    if (n == 0) throw Error(ErrorKind::EmptySet, "a tournament needs at least one vertex");
    std::vector<std::uint16_t> raw(n * n, kNoColor);
    for (auto [u, v] : arcs) {
        check_vertex(n, u);
        check_vertex(n, v);
        if (u == v) throw Error(ErrorKind::NotATournament, "loop at vertex " + std::to_string(u));
        if (raw[u * n + v] != kNoColor)
            throw Error(ErrorKind::NotATournament,
                        "pair {" + std::to_string(u) + "," + std::to_string(v) + "} given more than once");
        raw[u * n + v] = 0;
        raw[v * n + u] = 1;
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (raw[u * n + v] == kNoColor)
                throw Error(ErrorKind::NotATournament,
                            "pair {" + std::to_string(u) + "," + std::to_string(v) + "} has no arc");
    return TwoStructure::derive(n, {"fwd", "bwd"}, std::move(raw)).structure;
}

TwoStructure star(const TwoStructure& sigma) {
    const std::size_t n = sigma.size();
    std::vector<ColorId> m(n * n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v) m[u * n + v] = sigma.color(v, u);
    return TwoStructure::build(n, sigma.catalog(), m);
}

MeetResult meet(const TwoStructure& sigma, const TwoStructure& tau) {
    const std::size_t n = sigma.size();
    if (tau.size() != n)
        throw Error(ErrorKind::VertexSetMismatch,
                    "meet of structures on " + std::to_string(n) + " and " + std::to_string(tau.size()) + " vertices");
    std::map<std::pair<std::uint16_t, std::uint16_t>, std::uint16_t> ids;
    std::vector<std::pair<ColorId, ColorId>> prov;
    std::vector<std::uint16_t> raw(n * n, kNoColor);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            auto key = std::make_pair(sigma.raw(u, v), tau.raw(u, v));
            auto [it, fresh] = ids.try_emplace(key, static_cast<std::uint16_t>(prov.size()));
            if (fresh) prov.emplace_back(ColorId(key.first), ColorId(key.second));
            raw[u * n + v] = it->second;
        }
    }
    std::vector<std::string> names;
    std::set<std::string> taken;
    for (auto [a, b] : prov) {
        std::string name = sigma.name(a) + "&" + tau.name(b);
        std::string candidate = name;
        for (int k = 2; !taken.insert(candidate).second; ++k) candidate = name + "~" + std::to_string(k);
        names.push_back(candidate);
    }
    auto derived = TwoStructure::derive(n, names, std::move(raw));
    return {std::move(derived.structure), std::move(prov)};
}

SubstructureResult substructure(const TwoStructure& sigma, const VertexSet& w) {
    if (w.empty()) throw Error(ErrorKind::EmptySet, "substructure on the empty set");
    for (Vertex v : w) check_vertex(sigma.size(), v);
    const std::size_t m = w.size();
    std::vector<std::uint16_t> raw(m * m, kNoColor);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j) raw[i * m + j] = sigma.raw(w[i], w[j]);
    std::vector<std::string> names;
    for (const auto& r : sigma.catalog().records()) names.push_back(r.name);
    auto derived = TwoStructure::derive(m, names, std::move(raw));
    return {std::move(derived.structure), w.ids(), std::move(derived.kept)};
}

ReversibilityReport is_reversible(const TwoStructure& sigma) {
    ReversibilityReport r;
    r.reversible = sigma.is_reversible();
    r.symmetric = sigma.symmetric_colors();
    r.asymmetric = sigma.asymmetric_colors();
    return r;
}

std::vector<std::uint16_t> canonical_matrix(const TwoStructure& sigma) {
    const std::size_t n = sigma.size();
    std::vector<std::uint16_t> relabel(sigma.color_count(), kNoColor);
    std::vector<std::uint16_t> out(n * n, kNoColor);
    std::uint16_t next = 0;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            auto& r = relabel[sigma.raw(u, v)];
            if (r == kNoColor) r = next++;
            out[u * n + v] = r;
        }
    }
    return out;
}

bool same_partition(const TwoStructure& a, const TwoStructure& b) {
    return a.size() == b.size() && canonical_matrix(a) == canonical_matrix(b);
}

bool identical(const TwoStructure& a, const TwoStructure& b) {
    if (a.size() != b.size() || a.color_count() != b.color_count()) return false;
    if (!std::equal(a.matrix().begin(), a.matrix().end(), b.matrix().begin())) return false;
    for (std::size_t i = 0; i < a.color_count(); ++i) {
        const auto& x = a.catalog()[ColorId(i)];
        const auto& y = b.catalog()[ColorId(i)];
        if (x.name != y.name || x.kind != y.kind || (x.kind == ColorKind::Asymmetric && x.partner != y.partner))
            return false;
    }
    return true;
}

}  // namespace twostruct
