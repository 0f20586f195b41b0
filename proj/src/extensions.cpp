#include "twostruct/extensions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "color_vectors.hpp"
#include "twostruct/clans.hpp"

namespace twostruct {

std::size_t ceil_log(std::size_t base, std::size_t x) {
    if (base < 2) throw Error(ErrorKind::TooFewColors, "logarithm base below 2");
    std::size_t m = 0;
    std::size_t p = 1;
    while (p < x) {
        p *= base;
        ++m;
    }
    return m;
}

std::optional<std::size_t> exact_log(std::size_t base, std::size_t x) {
    if (base < 2 || x < base) return std::nullopt;
    std::size_t k = 1;
    std::size_t p = base;
    while (p < x) {
        p *= base;
        ++k;
    }
    if (p == x) return k;
    return std::nullopt;
}

namespace {

std::vector<ColorId> identity_colors(std::size_t k) {
    std::vector<ColorId> out;
    for (std::size_t i = 0; i < k; ++i) out.emplace_back(i);
    return out;
}

std::string pair_string(Vertex u, Vertex v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

}  // namespace

Extension identity_extension(const TwoStructure& sigma) {
    return Extension{sigma, sigma.size(), identity_colors(sigma.color_count()), true};
}

Extension as_extension(const TwoStructure& sigma, const TwoStructure& tau) {
    const std::size_t n = sigma.size();
    if (tau.size() < n) throw Error(ErrorKind::NotAnExtension, "extension has fewer vertices than the base");
    std::vector<int> fwd(sigma.color_count(), -1);
    std::vector<int> back(tau.color_count(), -1);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            int s = sigma.color(u, v).index;
            int t = tau.color(u, v).index;
            if (fwd[s] == -1 && back[t] == -1) {
                fwd[s] = t;
                back[t] = s;
            } else if (fwd[s] != t || back[t] != s) {
                throw Error(ErrorKind::NotAnExtension, "restriction differs from the base at " + pair_string(u, v));
            }
        }
    }
    Extension ext{tau, n, {}, true};
    for (int t : fwd) ext.color_embedding.emplace_back(static_cast<std::size_t>(t));
    return ext;
}

FaithfulnessReport is_faithful(const TwoStructure& sigma, const Extension& ext) {
    const std::size_t n = sigma.size();
    const TwoStructure& tau = ext.tau;
    if (ext.original != n || tau.size() < n)
        throw Error(ErrorKind::NotAnExtension, "original prefix does not match the base size");
    if (ext.color_embedding.size() != sigma.color_count())
        throw Error(ErrorKind::NotAnExtension, "color embedding has the wrong length");
    std::vector<int> preimage(tau.color_count(), -1);
    for (std::size_t e = 0; e < ext.color_embedding.size(); ++e) {
        ColorId t = ext.color_embedding[e];
        if (t.index >= tau.color_count() || preimage[t.index] != -1)
            throw Error(ErrorKind::NotAnExtension, "color embedding is not injective");
        preimage[t.index] = static_cast<int>(e);
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v && tau.color(u, v) != ext.color_embedding[sigma.color(u, v).index])
                throw Error(ErrorKind::NotAnExtension, "restriction differs from the base at " + pair_string(u, v));

    FaithfulnessReport report;
    const std::size_t total = tau.size();
    std::vector<char> reported(tau.color_count(), 0);
    for (Vertex x = 0; x < total; ++x) {
        for (Vertex y = 0; y < total; ++y) {
            if (x == y) continue;
            int c = tau.color(x, y).index;
            if (preimage[c] == -1 && !reported[c]) {
                reported[c] = 1;
                report.bijective = false;
                report.violations.push_back("E1: color " + tau.name(ColorId(c)) + " of " + pair_string(x, y) +
                                            " holds no pair of the base");
            }
        }
    }

    std::set<std::pair<int, int>> seen;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v) seen.emplace(sigma.color(u, v).index, sigma.color(v, u).index);
    for (Vertex x = 0; x < total; ++x) {
        for (Vertex y = std::max<Vertex>(x + 1, n); y < total; ++y) {
            int e = preimage[tau.color(x, y).index];
            int f = preimage[tau.color(y, x).index];
            if (e == -1 || f == -1) continue;
            if (!seen.count({e, f})) {
                report.star_compatible = false;
                report.violations.push_back("E2: " + pair_string(x, y) + " pairs " + sigma.name(ColorId(e)) + " with " +
                                            sigma.name(ColorId(f)) + ", which never meet in the base");
            }
        }
    }
    return report;
}

ExtensionRecipe::ExtensionRecipe(const TwoStructure& sigma, std::size_t added)
    : ExtensionRecipe(sigma, added, sigma.catalog()) {}

ExtensionRecipe::ExtensionRecipe(const TwoStructure& sigma, std::size_t added, ColorCatalog palette)
    : n_(sigma.size()), total_(sigma.size() + added), base_colors_(sigma.color_count()), palette_(std::move(palette)) {
    if (palette_.size() < sigma.color_count())
        throw Error(ErrorKind::PreconditionFailed, "palette is smaller than the base catalog");
    matrix_.assign(total_ * total_, ColorId(0));
    set_.assign(total_ * total_, 0);
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v = 0; v < n_; ++v) {
            if (u == v) continue;
            matrix_[u * total_ + v] = sigma.color(u, v);
            set_[u * total_ + v] = 1;
        }
    }
    star_.assign(palette_.size(), -1);
    for (std::size_t c = 0; c < palette_.size(); ++c) {
        if (c < sigma.color_count()) {
            if (sigma.is_reversible()) star_[c] = sigma.star_of(ColorId(c)).index;
            continue;
        }
        const ColorRecord& r = palette_[ColorId(c)];
        if (r.kind == ColorKind::Symmetric) star_[c] = static_cast<int>(c);
        if (r.kind == ColorKind::Asymmetric) star_[c] = r.partner.index;
    }
}

ColorId ExtensionRecipe::star_color(ColorId c) const {
    if (c.index >= star_.size()) throw Error(ErrorKind::UnknownColor, "color outside the palette");
    if (star_[c.index] < 0) throw Error(ErrorKind::NotReversible, "color has no star partner; use set_pair");
    return ColorId(static_cast<std::size_t>(star_[c.index]));
}

void ExtensionRecipe::set(Vertex u, Vertex v, ColorId c) { set_pair(u, v, c, star_color(c)); }

void ExtensionRecipe::set_pair(Vertex u, Vertex v, ColorId uv, ColorId vu) {
    if (u >= total_ || v >= total_ || u == v) throw Error(ErrorKind::OutOfRange, "bad pair " + pair_string(u, v));
    if (u < n_ && v < n_) throw Error(ErrorKind::PreconditionFailed, "pairs of the base are fixed");
    if (uv.index >= palette_.size() || vu.index >= palette_.size())
        throw Error(ErrorKind::UnknownColor, "color outside the palette");
    matrix_[u * total_ + v] = uv;
    matrix_[v * total_ + u] = vu;
    set_[u * total_ + v] = 1;
    set_[v * total_ + u] = 1;
}

ColorId ExtensionRecipe::get(Vertex u, Vertex v) const { return matrix_.at(u * total_ + v); }
bool ExtensionRecipe::is_set(Vertex u, Vertex v) const { return set_.at(u * total_ + v) != 0; }

void ExtensionRecipe::fill_row(Vertex u, const std::vector<ColorId>& to_new) {
    for (std::size_t j = 0; j < to_new.size() && j < total_ - n_; ++j)
        if (u != new_vertex(j) && !is_set(u, new_vertex(j))) set(u, new_vertex(j), to_new[j]);
}

Extension ExtensionRecipe::finish() const {
    for (Vertex u = 0; u < total_; ++u)
        for (Vertex v = 0; v < total_; ++v)
            if (u != v && !set_[u * total_ + v])
                throw Error(ErrorKind::PreconditionFailed, "pair " + pair_string(u, v) + " has no color");
    TwoStructure tau = TwoStructure::build(total_, palette_, matrix_);
    return Extension{std::move(tau), n_, identity_colors(base_colors_), true};
}

bool is_primitive_faithful(const TwoStructure& sigma, const Extension& ext) {
    if (!is_primitive(ext.tau)) return false;
    if (!ext.faithful_by_construction) return true;
    return is_faithful(sigma, ext).faithful();
}

void certify(const TwoStructure& sigma, const Extension& ext, const std::string& construction) {
    if (!is_primitive(ext.tau))
        throw Error(ErrorKind::InternalProofViolation, construction + " produced an imprimitive extension");
    if (!ext.faithful_by_construction) return;
    auto report = is_faithful(sigma, ext);
    if (!report.faithful())
        throw Error(ErrorKind::InternalProofViolation,
                    construction + " produced an unfaithful extension: " + report.violations.front());
    if (sigma.is_reversible() != ext.tau.is_reversible())
        throw Error(ErrorKind::InternalProofViolation, construction + " changed reversibility");
}

long long one_extension_formula(std::size_t eps, std::size_t nu) {
    long long p = 1;
    for (std::size_t i = 0; i < nu; ++i) p *= static_cast<long long>(eps);
    return p - static_cast<long long>(eps * nu) - static_cast<long long>(eps);
}

OneExtensions one_extensions_of_primitive(const TwoStructure& sigma) {
    if (!sigma.is_reversible()) throw Error(ErrorKind::NotReversible, "one-vertex extensions need a reversible structure");
    if (!is_primitive(sigma)) throw Error(ErrorKind::NotPrimitive, "structure is not primitive");
    const std::size_t n = sigma.size();
    const std::size_t eps = sigma.color_count();
    long long total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= static_cast<long long>(eps);
        if (total > (1LL << 24)) throw Error(ErrorKind::BudgetExceeded, "too many one-vertex colorings");
    }
    OneExtensions out;
    std::vector<ColorId> x(n, ColorId(0));
    const Vertex a = n;
    do {
        if (detail::is_constant(x)) continue;
        bool twin = false;
        for (Vertex v = 0; v < n && !twin; ++v) {
            bool same = true;
            for (Vertex w = 0; w < n && same; ++w)
                if (w != v && x[w] != sigma.color(v, w)) same = false;
            twin = same;
        }
        if (twin) continue;
        ExtensionRecipe r(sigma, 1);
        for (Vertex w = 0; w < n; ++w) r.set(a, w, x[w]);
        out.extensions.push_back(r.finish());
    } while (detail::next_vector(x, eps));
    out.count = out.extensions.size();
    return out;
}

Extension lift_nonreversible(const TwoStructure& sigma, const Extension& rho) {
    const std::size_t n = sigma.size();
    MeetResult mu = meet(sigma, star(sigma));
    auto report = is_faithful(mu.structure, rho);
    if (!report.faithful()) throw Error(ErrorKind::NotFaithful, report.violations.front());
    std::vector<int> inverse(rho.tau.color_count(), -1);
    for (std::size_t m = 0; m < rho.color_embedding.size(); ++m) inverse[rho.color_embedding[m].index] = static_cast<int>(m);

    const std::size_t total = rho.tau.size();
    std::vector<ColorId> matrix(total * total, ColorId(0));
    for (Vertex x = 0; x < total; ++x) {
        for (Vertex y = 0; y < total; ++y) {
            if (x == y) continue;
            if (x < n && y < n) {
                matrix[x * total + y] = sigma.color(x, y);
            } else {
                int m = inverse[rho.tau.color(x, y).index];
                matrix[x * total + y] = mu.provenance[static_cast<std::size_t>(m)].first;
            }
        }
    }
    Extension ext{TwoStructure::build(total, sigma.catalog(), matrix), n, identity_colors(sigma.color_count()), true};
    if (!same_partition(meet(ext.tau, star(ext.tau)).structure, rho.tau))
        throw Error(ErrorKind::InternalProofViolation, "lifted extension does not meet back to the given one");
    auto lifted = is_faithful(sigma, ext);
    if (!lifted.faithful()) throw Error(ErrorKind::InternalProofViolation, "lifted extension is not faithful");
    return ext;
}

}  // namespace twostruct
