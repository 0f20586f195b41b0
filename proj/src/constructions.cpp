#include <algorithm>
#include <functional>

#include "color_vectors.hpp"
#include "twostruct/bound.hpp"
#include "twostruct/clans.hpp"
#include "twostruct/extensions.hpp"

namespace twostruct {

namespace {

using Vec = std::vector<ColorId>;

struct Context {
    const TwoStructure& sigma;
    ClanTree tree;
    FamiliesReport families;
    Traverse traverse;
    Bicoloration beta;
    CompletenessProfile profile;

    explicit Context(const TwoStructure& s)
        : sigma(s),
          tree(clan_tree(s)),
          families(maximal_families(s, tree)),
          traverse(build_traverse(s, tree)),
          beta(dense_bicoloration(traverse)) {
        if (s.is_reversible()) profile = completeness_profile(s, families);
    }

    std::uint8_t side(Vertex v, bool flip) const { return static_cast<std::uint8_t>(beta[v] ^ (flip ? 1 : 0)); }
};

[[noreturn]] void fail_pre(const std::string& what) { throw Error(ErrorKind::PreconditionFailed, what); }

bool asymmetric(const TwoStructure& s) { return s.is_reversible() && s.symmetric_colors().empty() && s.color_count() > 0; }

ColorId lowest_except(std::size_t eps, std::initializer_list<ColorId> avoid) {
    for (std::size_t i = 0; i < eps; ++i) {
        ColorId c(i);
        if (std::find(avoid.begin(), avoid.end(), c) == avoid.end()) return c;
    }
    throw Error(ErrorKind::InternalProofViolation, "no admissible color left");
}

bool primitive_on(const TwoStructure& t, const std::vector<Vertex>& members) {
    const std::size_t m = members.size();
    std::vector<std::uint16_t> raw(m * m, kNoColor);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j) raw[i * m + j] = t.raw(members[i], members[j]);
    return detail::primitive(detail::MatrixView{m, raw.data()});
}

std::vector<Vertex> with_new(const VertexSet& x, std::size_t first_new, std::size_t added) {
    std::vector<Vertex> out = x.ids();
    for (std::size_t j = 0; j < added; ++j) out.push_back(first_new + j);
    return out;
}

// Lexicographically smallest (a,w) vector over P making sigma[P] plus a
// primitive: neither constant nor equal to some row of sigma off its vertex.
Vec l2ext_vector(const TwoStructure& s, const VertexSet& p) {
    const std::size_t m = p.size();
    Vec x(m, ColorId(0));
    do {
        if (detail::is_constant(x)) continue;
        bool twin = false;
        for (std::size_t k = 0; k < m && !twin; ++k) {
            bool same = true;
            for (std::size_t i = 0; i < m && same; ++i)
                if (i != k && x[i] != s.color(p[k], p[i])) same = false;
            twin = same;
        }
        if (!twin) return x;
    } while (detail::next_vector(x, s.color_count()));
    throw Error(ErrorKind::InternalProofViolation, "no one-vertex primitive extension of " + p.to_string());
}

std::vector<Vertex> in_traverse_order(const Context& cx, const VertexSet& x) {
    std::vector<Vertex> out = x.ids();
    std::sort(out.begin(), out.end(), [&](Vertex u, Vertex v) { return cx.traverse.position[u] < cx.traverse.position[v]; });
    return out;
}

// Alternating colors on a linear run: (l_i,a) is lambda* for even i and
// lambda for odd i. With `third`, the last member takes a color outside
// {lambda, lambda*} instead, which makes every run length work.
void wire_linear(ExtensionRecipe& r, const Context& cx, const VertexSet& l, Vertex a, bool third) {
    const ClanTree& node = smallest_node_containing(cx.tree, l);
    if (node.label.kind != NodeKind::Linear)
        throw Error(ErrorKind::InternalMismatch, "linear run " + l.to_string() + " outside a linear node");
    ColorId lambda = node.label.color;
    ColorId back = cx.sigma.star_of(lambda);
    auto order = in_traverse_order(cx, l);
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (third && i + 1 == order.size()) {
            r.set(order[i], a, lowest_except(cx.sigma.color_count(), {lambda, back}));
        } else {
            r.set(order[i], a, i % 2 == 0 ? back : lambda);
        }
    }
}

// Colors from `colors` indexed by digits of an odometer.
struct Palette {
    std::vector<ColorId> colors;

    bool next(std::vector<std::size_t>& d) const {
        for (std::size_t i = d.size(); i-- > 0;) {
            if (d[i] + 1 < colors.size()) {
                ++d[i];
                return true;
            }
            d[i] = 0;
        }
        return false;
    }
    Vec map(const std::vector<std::size_t>& d) const {
        Vec out;
        for (std::size_t i : d) out.push_back(colors[i]);
        return out;
    }
};

Palette all_colors(const TwoStructure& s) {
    Palette p;
    for (std::size_t i = 0; i < s.color_count(); ++i) p.colors.emplace_back(i);
    return p;
}

// Injection of s into vectors over m new vertices that avoids the constant
// e vector. With `unit_first`, s[j] (j < m) gets e at position j and f
// elsewhere; the rest take the smallest unused vectors.
std::vector<Vec> complete_clan_vectors(const Palette& pal, std::size_t size, std::size_t m, ColorId e, ColorId f,
                                       bool unit_first) {
    std::vector<Vec> out;
    if (unit_first) {
        for (std::size_t j = 0; j < m && j < size; ++j) {
            Vec v(m, f);
            v[j] = e;
            out.push_back(std::move(v));
        }
    }
    std::vector<std::size_t> d(m, 0);
    do {
        if (out.size() >= size) break;
        Vec v = pal.map(d);
        if (std::all_of(v.begin(), v.end(), [&](ColorId c) { return c == e; })) continue;
        if (std::find(out.begin(), out.end(), v) != out.end()) continue;
        out.push_back(std::move(v));
    } while (pal.next(d));
    if (out.size() < size) throw Error(ErrorKind::InternalProofViolation, "not enough color vectors");
    return out;
}

void wire_new_clique(ExtensionRecipe& r, std::size_t m, ColorId f) {
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) r.set(r.new_vertex(i), r.new_vertex(j), f);
}

void set_vector(ExtensionRecipe& r, Vertex v, const Vec& x) {
    for (std::size_t j = 0; j < x.size(); ++j) r.set(v, r.new_vertex(j), x[j]);
}

void require_reversible(const TwoStructure& s, const char* what) {
    if (!s.is_reversible()) throw Error(ErrorKind::NotReversible, std::string(what) + " needs a reversible structure");
}

// --- one-vertex construction used for small completeness ----------------

Extension small_c_build(const Context& cx, bool flip) {
    const TwoStructure& s = cx.sigma;
    const std::size_t n = s.size();
    const std::size_t eps = s.color_count();
    const Vertex a = n;
    ExtensionRecipe r(s, 1);
    std::vector<char> done(n, 0);
    for (const auto& c : cx.families.complete) {
        ColorId e = s.color(c[0], c[1]);
        std::vector<ColorId> others;
        for (std::size_t i = 0; i < eps; ++i)
            if (ColorId(i) != e) others.emplace_back(i);
        if (others.size() < c.size()) throw Error(ErrorKind::InternalProofViolation, "complete clan too large");
        for (std::size_t i = 0; i < c.size(); ++i) {
            r.set(a, c[i], others[i]);
            done[c[i]] = 1;
        }
    }
    for (const auto& l : cx.families.linear) {
        wire_linear(r, cx, l, a, true);
        for (Vertex v : l) done[v] = 1;
    }
    for (const auto& p : cx.families.primitive) {
        Vec x = l2ext_vector(s, p);
        for (std::size_t i = 0; i < p.size(); ++i) r.set(a, p[i], x[i]);
        for (Vertex v : p) done[v] = 1;
    }
    ColorId e0(0);
    ColorId e1 = lowest_except(eps, {e0, s.star_of(e0)});
    for (Vertex v = 0; v < n; ++v)
        if (!done[v]) r.set(v, a, cx.side(v, flip) ? e1 : e0);
    return r.finish();
}

void check_small_c(const Context& cx) {
    const TwoStructure& s = cx.sigma;
    require_reversible(s, "the small completeness construction");
    if (is_primitive(s)) fail_pre("structure is already primitive");
    const std::size_t c = cx.profile.c_value;
    const std::size_t eps = s.color_count();
    bool ok = (c >= 2 && c < eps) || (c == 1 && (eps >= 3 || (eps == 2 && s.symmetric_colors().size() == 2)));
    if (!ok)
        fail_pre("needs c < eps with c >= 2, or c = 1 with eps >= 3 or two symmetric colors (c = " + std::to_string(c) +
                 ", eps = " + std::to_string(eps) + ")");
}

// --- logarithmic construction --------------------------------------------

Extension log_build(const Context& cx, bool flip) {
    const TwoStructure& s = cx.sigma;
    const std::size_t n = s.size();
    const std::size_t eps = s.color_count();
    const std::size_t c = cx.profile.c_value;
    const std::size_t k = ceil_log(eps, c + 1);
    const Palette pal = all_colors(s);
    ExtensionRecipe r(s, k);

    const VertexSet* cmax = nullptr;
    for (const auto& x : cx.families.complete)
        if (x.size() == c) {
            cmax = &x;
            break;
        }
    if (!cmax) throw Error(ErrorKind::InternalMismatch, "no complete clan of maximum size");
    std::vector<char> done(n, 0);
    {
        ColorId e = s.color((*cmax)[0], (*cmax)[1]);
        ColorId f = lowest_except(eps, {e});
        auto vecs = complete_clan_vectors(pal, cmax->size(), k, e, f, k >= 2);
        for (std::size_t i = 0; i < cmax->size(); ++i) {
            set_vector(r, (*cmax)[i], vecs[i]);
            done[(*cmax)[i]] = 1;
        }
        wire_new_clique(r, k, f);
    }
    for (const auto& x : cx.families.complete) {
        if (&x == cmax) continue;
        ColorId e = s.color(x[0], x[1]);
        auto vecs = complete_clan_vectors(pal, x.size(), k, e, e, false);
        for (std::size_t i = 0; i < x.size(); ++i) {
            set_vector(r, x[i], vecs[i]);
            done[x[i]] = 1;
        }
    }
    std::vector<Vec> a01;
    std::vector<std::size_t> d(k, 0);
    do {
        Vec v = pal.map(d);
        if (!detail::is_constant(v)) a01.push_back(std::move(v));
    } while (a01.size() < 2 && pal.next(d));
    for (Vertex v = 0; v < n; ++v)
        if (!done[v]) set_vector(r, v, a01[cx.side(v, flip)]);
    return r.finish();
}

// --- power case with c = eps = 2 -----------------------------------------

Extension pair_build(const Context& cx, bool flip) {
    const TwoStructure& s = cx.sigma;
    const std::size_t n = s.size();
    const Vertex a = n;
    ExtensionRecipe r(s, 1);
    ColorId e0(0);
    ColorId e1(1);
    std::vector<char> done(n, 0);
    for (const auto& c : cx.families.complete) {
        r.set(c[0], a, e0);
        r.set(c[1], a, e1);
        done[c[0]] = done[c[1]] = 1;
    }
    for (const auto& p : cx.families.primitive) {
        Vec x = l2ext_vector(s, p);
        for (std::size_t i = 0; i < p.size(); ++i) r.set(a, p[i], x[i]);
        for (Vertex v : p) done[v] = 1;
    }
    for (Vertex v = 0; v < n; ++v)
        if (!done[v]) r.set(v, a, cx.side(v, flip) ? e1 : e0);
    return r.finish();
}

// --- tournaments -----------------------------------------------------------

Extension tournament_build(const Context& cx, bool flip) {
    const TwoStructure& s = cx.sigma;
    const std::size_t n = s.size();
    const Vertex a = n;
    ExtensionRecipe r(s, 1);
    std::vector<char> done(n, 0);
    for (const auto& l : cx.families.linear) {
        if (l.size() % 2 != 0) continue;
        wire_linear(r, cx, l, a, false);
        for (Vertex v : l) done[v] = 1;
    }
    for (const auto& p : cx.families.primitive) {
        if (p.size() == 3) continue;
        Vec x = l2ext_vector(s, p);
        for (std::size_t i = 0; i < p.size(); ++i) r.set(a, p[i], x[i]);
        for (Vertex v : p) done[v] = 1;
    }
    ColorId e0(0);
    ColorId e1 = s.star_of(e0);
    for (Vertex v = 0; v < n; ++v)
        if (!done[v]) r.set(v, a, cx.side(v, flip) ? e1 : e0);
    return r.finish();
}

bool is_linear_order(const ClanTree& tree) {
    return tree.label.kind == NodeKind::Linear && tree.singleton_children() == tree.children.size();
}

Extension alternating_extension(const Context& cx) {
    ExtensionRecipe r(cx.sigma, 1);
    wire_linear(r, cx, cx.sigma.vertices(), cx.sigma.size(), false);
    return r.finish();
}

template <typename Build>
std::optional<Extension> try_both(const Context& cx, Build build) {
    for (bool flip : {false, true}) {
        Extension ext = build(cx, flip);
        if (is_primitive_faithful(cx.sigma, ext)) return ext;
    }
    return std::nullopt;
}

Extension compose(const Extension& inner, const Extension& outer) {
    Extension out{outer.tau, inner.original, {}, inner.faithful_by_construction && outer.faithful_by_construction};
    for (ColorId c : inner.color_embedding) out.color_embedding.push_back(outer.color_embedding[c.index]);
    return out;
}

}  // namespace

// --------------------------------------------------------------------------

Extension primitivize_complete_clan(const TwoStructure& sigma, const VertexSet& s, ColorId e) {
    require_reversible(sigma, "primitivizing a complete clan");
    const std::size_t eps = sigma.color_count();
    if (eps < 2) throw Error(ErrorKind::TooFewColors, "needs at least two colors");
    if (s.size() < 2 || s.back() >= sigma.size()) throw Error(ErrorKind::NotEComplete, "needs at least two vertices in range");
    if (e.index >= eps || !sigma.is_symmetric(e)) throw Error(ErrorKind::NotEComplete, "color is not symmetric");
    for (Vertex u : s)
        for (Vertex v : s)
            if (u != v && sigma.color(u, v) != e)
                throw Error(ErrorKind::NotEComplete, s.to_string() + " is not complete in " + sigma.name(e));

    const std::size_t m = ceil_log(eps, s.size() + 1);
    const std::size_t n = sigma.size();
    ColorId f = lowest_except(eps, {e});
    ExtensionRecipe r(sigma, m);
    // With one new vertex the unit vector of e is the excluded constant, so
    // the smallest non-constant choices are used directly.
    auto vecs = complete_clan_vectors(all_colors(sigma), s.size(), m, e, f, m >= 2);
    for (std::size_t i = 0; i < s.size(); ++i) set_vector(r, s[i], vecs[i]);
    wire_new_clique(r, m, f);
    for (Vertex v = 0; v < n; ++v)
        if (!s.contains(v)) set_vector(r, v, Vec(m, ColorId(0)));
    Extension ext = r.finish();

    if (!primitive_on(ext.tau, with_new(s, n, m)))
        throw Error(ErrorKind::InternalProofViolation, "complete clan plus new vertices is not primitive");
    if (m >= 2) {
        for (std::size_t j = 0; j < m; ++j) {
            Vertex v = s[j];
            for (std::size_t i = 0; i < m; ++i)
                if ((ext.tau.color(v, n + i) == e) != (i == j))
                    throw Error(ErrorKind::InternalProofViolation, "unit vectors of e are not unique");
        }
    }
    auto report = is_faithful(sigma, ext);
    if (!report.faithful()) throw Error(ErrorKind::InternalProofViolation, report.violations.front());
    return ext;
}

Extension extend_asym_linear_top(const TwoStructure& sigma) {
    if (!asymmetric(sigma)) fail_pre("structure is not asymmetric, so the top color is not asymmetric");
    if (sigma.size() < 2) fail_pre("needs at least two vertices");
    Context cx(sigma);
    const ClanTree& root = cx.tree;
    if (root.label.kind != NodeKind::Linear) fail_pre("the root of the clan tree is not linear");
    std::size_t lo = root.children.size();
    std::size_t hi = 0;
    for (std::size_t i = 0; i < root.children.size(); ++i) {
        if (root.children[i].vertices.size() >= 2) {
            lo = std::min(lo, i);
            hi = i;
        }
    }
    if (lo == root.children.size()) fail_pre("every Gallai block is a singleton");

    Bicoloration beta = cx.beta;
    auto patch = [&](std::size_t from, std::size_t to, Vertex end, std::uint8_t want) {
        bool flip = beta[end] != want;
        for (std::size_t i = from; i < to; ++i)
            for (Vertex v : root.children[i].vertices)
                if (flip) beta[v] = static_cast<std::uint8_t>(1 - beta[v]);
    };
    if (lo > 0) patch(0, lo, root.children.front().vertices.front(), 1);
    if (hi + 1 < root.children.size()) patch(hi + 1, root.children.size(), root.children.back().vertices.front(), 0);

    ColorId e0 = root.label.color;
    ColorId e1 = sigma.star_of(e0);
    ExtensionRecipe r(sigma, 1);
    for (Vertex v = 0; v < sigma.size(); ++v) r.set(v, sigma.size(), beta[v] ? e1 : e0);
    Extension ext = r.finish();
    certify(sigma, ext, "linear top extension");
    return ext;
}

Extension extend_via_inclusive(const TwoStructure& sigma) {
    if (!asymmetric(sigma)) fail_pre("structure is not asymmetric");
    if (is_primitive(sigma)) fail_pre("structure is primitive; its only inclusive clan is the vertex set");
    Context cx(sigma);
    std::vector<VertexSet> candidates;
    for (auto& j : inclusive_clans(sigma))
        if (j.size() >= 2 && j.size() < sigma.size()) candidates.push_back(std::move(j));
    if (candidates.empty()) fail_pre("no proper inclusive clan with two or more vertices");

    const std::size_t n = sigma.size();
    ColorId e0(0);
    ColorId e1 = sigma.star_of(e0);
    for (const auto& j : candidates) {
        for (bool flip : {false, true}) {
            ExtensionRecipe r(sigma, 1);
            for (Vertex v = 0; v < n; ++v) {
                if (j.contains(v))
                    r.set(v, n, cx.side(v, flip) ? e1 : e0);
                else
                    r.set(v, n, sigma.star_of(sigma.color(v, j.front())));
            }
            Extension ext = r.finish();
            if (is_primitive_faithful(sigma, ext)) return ext;
        }
    }
    throw Error(ErrorKind::InternalProofViolation, "neither bicoloration gives a primitive extension");
}

Extension small_c_candidate(const TwoStructure& sigma, bool flip) {
    require_reversible(sigma, "the small completeness construction");
    Context cx(sigma);
    check_small_c(cx);
    return small_c_build(cx, flip);
}

Extension extend_small_c(const TwoStructure& sigma) {
    require_reversible(sigma, "the small completeness construction");
    Context cx(sigma);
    check_small_c(cx);
    if (auto ext = try_both(cx, small_c_build)) return *ext;
    throw Error(ErrorKind::InternalProofViolation, "small completeness construction failed for both bicolorations");
}

Extension extend_log(const TwoStructure& sigma) {
    require_reversible(sigma, "the logarithmic construction");
    Context cx(sigma);
    const std::size_t eps = sigma.color_count();
    const std::size_t c = cx.profile.c_value;
    if (eps < 2 || eps > c)
        fail_pre("needs 2 <= eps <= c (c = " + std::to_string(c) + ", eps = " + std::to_string(eps) + ")");
    if (auto ext = try_both(cx, log_build)) return *ext;
    throw Error(ErrorKind::InternalProofViolation, "logarithmic construction failed for both bicolorations");
}

Extension extend_power_case(const TwoStructure& sigma, std::size_t k) {
    require_reversible(sigma, "the power case");
    Context cx(sigma);
    const std::size_t eps = sigma.color_count();
    const std::size_t c = cx.profile.c_value;
    if (eps < 2) fail_pre("needs at least two colors");
    auto exact = exact_log(eps, c);
    if (!exact || *exact != k)
        throw Error(ErrorKind::PowerMismatch, "c = " + std::to_string(c) + " is not " + std::to_string(eps) + "^" +
                                                  std::to_string(k));
    for (const auto& [e, iso] : cx.profile.isolated)
        if (iso.size() == c)
            fail_pre("color " + sigma.name(e) + " has " + std::to_string(c) + " isolated vertices, so " +
                     std::to_string(k) + " new vertices cannot suffice");

    if (c == 2) {
        if (auto ext = try_both(cx, pair_build)) return *ext;
        throw Error(ErrorKind::InternalProofViolation, "pair construction failed for both bicolorations");
    }

    // Drop one vertex from every maximum complete clan, extend the rest, and
    // give each dropped vertex the one vector its clan leaves unused.
    const std::size_t n = sigma.size();
    std::vector<const VertexSet*> big;
    std::vector<Vertex> dropped;
    for (const auto& x : cx.families.complete)
        if (x.size() == c) {
            big.push_back(&x);
            dropped.push_back(x.front());
        }
    VertexSet rest = sigma.vertices().minus(VertexSet(dropped));
    SubstructureResult sub = substructure(sigma, rest);
    if (sub.structure.color_count() != eps)
        throw Error(ErrorKind::InternalProofViolation, "removing vertices lost a color");

    Extension inner = [&] {
        try {
            auto p = completeness_profile(sub.structure);
            if (eps <= p.c_value) return extend_log(sub.structure);
            return extend_small_c(sub.structure);
        } catch (const Error& err) {
            throw Error(ErrorKind::InternalProofViolation, std::string("recursive step failed: ") + err.what());
        }
    }();
    if (inner.added() != k) throw Error(ErrorKind::InternalProofViolation, "recursive step used a different vertex count");

    const std::size_t m = rest.size();
    std::vector<Vertex> local(n, n);
    for (std::size_t i = 0; i < m; ++i) local[sub.vertex_map[i]] = i;
    auto back = [&](ColorId c2) { return sub.color_map[c2.index]; };
    ExtensionRecipe r(sigma, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) r.set(n + i, n + j, back(inner.tau.color(m + i, m + j)));
    for (Vertex v : rest)
        for (std::size_t j = 0; j < k; ++j) r.set(v, n + j, back(inner.tau.color(local[v], m + j)));
    const Palette pal = all_colors(sigma);
    for (std::size_t b = 0; b < big.size(); ++b) {
        std::vector<Vec> used;
        for (Vertex v : *big[b]) {
            if (v == dropped[b]) continue;
            Vec x;
            for (std::size_t j = 0; j < k; ++j) x.push_back(r.get(v, n + j));
            used.push_back(std::move(x));
        }
        std::vector<Vec> unused;
        std::vector<std::size_t> d(k, 0);
        do {
            Vec x = pal.map(d);
            if (std::find(used.begin(), used.end(), x) == used.end()) unused.push_back(std::move(x));
        } while (pal.next(d));
        if (unused.size() != 1) throw Error(ErrorKind::InternalProofViolation, "clan vectors are not a near-bijection");
        set_vector(r, dropped[b], unused.front());
    }
    Extension ext = r.finish();
    certify(sigma, ext, "power case construction");
    return ext;
}

Extension extend_tournament(const TwoStructure& sigma) {
    if (!asymmetric(sigma) || sigma.color_count() != 2) fail_pre("structure is not a tournament");
    if (is_primitive(sigma)) fail_pre("tournament is already primitive");
    Context cx(sigma);
    const std::size_t n = sigma.size();

    if (is_linear_order(cx.tree)) {
        Extension first = alternating_extension(cx);
        if (n % 2 == 0) {
            certify(sigma, first, "alternating extension");
            return first;
        }
        try {
            if (is_primitive(first.tau))
                throw Error(ErrorKind::InternalProofViolation, "odd linear order gained a one-vertex extension");
            Extension second = extend_tournament(first.tau);
            Extension ext = compose(first, second);
            certify(sigma, ext, "two-step linear order extension");
            return ext;
        } catch (const Error&) {
            if (n > 11) throw;
            OracleResult found = oracle_min_extension(sigma, 2);
            if (!found.witness) throw;
            return *found.witness;
        }
    }

    if (auto ext = try_both(cx, tournament_build)) return *ext;
    for (auto fallback : {&extend_via_inclusive, &extend_asym_linear_top}) {
        try {
            return fallback(sigma);
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::PreconditionFailed && err.kind() != ErrorKind::InternalProofViolation) throw;
        }
    }
    throw Error(ErrorKind::InternalProofViolation, "no tournament construction produced a primitive extension");
}

Extension sumner_extension(const TwoStructure& sigma) {
    if (sigma.color_count() != 1) throw Error(ErrorKind::NotComplete, "structure has more than one color");
    if (sigma.size() < 2) fail_pre("needs at least two vertices");
    const std::size_t n = sigma.size();
    const std::size_t m = ceil_log(2, n + 1);
    ColorCatalog palette;
    ColorId e = palette.add_symmetric(sigma.name(ColorId(0)));
    std::string bar = sigma.name(ColorId(0)) + "_bar";
    while (palette.find(bar)) bar += "_";
    ColorId f = palette.add_symmetric(bar);
    Palette pal{{e, f}};

    auto vecs = complete_clan_vectors(pal, n, m, e, f, true);
    const std::size_t inner_pairs = m * (m - 1) / 2;
    // The clique of f among new vertices comes first; other wirings are a
    // fallback search.
    for (std::size_t mask = 0; mask < (std::size_t{1} << inner_pairs); ++mask) {
        ExtensionRecipe r(sigma, m, palette);
        for (Vertex v = 0; v < n; ++v) set_vector(r, v, vecs[v]);
        std::size_t bit = 0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j, ++bit) r.set(n + i, n + j, (mask >> bit & 1) ? e : f);
        Extension ext = r.finish();
        ext.faithful_by_construction = false;
        if (is_primitive(ext.tau)) return ext;
        if (n > 8) break;
    }
    throw Error(ErrorKind::InternalProofViolation, "no primitive graph extension found");
}

ClanKillingReport verify_clan_killing(const TwoStructure& sigma, const Extension& ext, const std::vector<VertexSet>& family) {
    ClanKillingReport rep;
    auto hyp = [&](const std::string& msg) {
        rep.hypotheses_hold = false;
        rep.violations.push_back("hypothesis: " + msg);
    };
    auto concl = [&](const std::string& msg) {
        rep.conclusion_holds = false;
        rep.violations.push_back("conclusion: " + msg);
    };
    const std::size_t n = sigma.size();
    const std::size_t added = ext.added();
    const TwoStructure& tau = ext.tau;
    if (!sigma.is_reversible() || sigma.color_count() < 2) hyp("structure is not reversible with two or more colors");
    if (added == 0) hyp("no new vertices");

    Context cx(sigma);
    detail::MatrixView tv{tau.size(), tau.matrix().data()};
    std::vector<char> covered(n, 0);
    for (const auto& c : cx.families.complete) {
        for (Vertex v : c) covered[v] = 1;
        if (c.size() >= 2 && c.size() <= kDefaultGuard) {
            const std::size_t limit = std::size_t{1} << c.size();
            for (std::size_t mask = 0; mask < limit; ++mask) {
                std::vector<std::size_t> members;
                for (std::size_t i = 0; i < c.size(); ++i)
                    if (mask >> i & 1) members.push_back(c[i]);
                if (members.size() >= 2 && detail::is_clan(tv, members)) {
                    hyp("subset " + VertexSet(members).to_string() + " of complete clan " + c.to_string() + " survives");
                    break;
                }
            }
        }
    }
    for (const auto& x : family) {
        for (Vertex v : x) covered[v] = 1;
        if (added > 0 && !primitive_on(tau, with_new(x, n, added)))
            hyp(x.to_string() + " plus the new vertices is not primitive");
    }
    std::optional<Vec> a[2];
    for (Vertex v = 0; v < n; ++v) {
        if (covered[v]) continue;
        Vec x;
        for (std::size_t j = 0; j < added; ++j) x.push_back(tau.color(v, n + j));
        auto& slot = a[cx.beta[v]];
        if (!slot)
            slot = x;
        else if (*slot != x)
            hyp("vertex " + std::to_string(v) + " does not follow the bicoloration");
    }
    if (a[0] && a[1] && *a[0] == *a[1]) hyp("both sides of the bicoloration share one vector");

    ClanFamily sigma_clans = enumerate_clans(sigma, 2);
    for (const auto& c : sigma_clans) {
        auto ids = c.ids();
        if (detail::is_clan(tv, ids)) concl("clan " + c.to_string() + " of the base survives");
    }
    if (added == 1) {
        const Vertex av = n;
        for (const auto& d : enumerate_clans(tau, 2)) {
            if (!d.contains(av)) {
                concl("clan " + d.to_string() + " misses the new vertex");
                continue;
            }
            VertexSet rest = d.minus(VertexSet{av});
            for (const auto& c : sigma_clans) {
                if (!c.intersects(rest)) concl("clan " + d.to_string() + " misses base clan " + c.to_string());
                if (!c.is_subset_of(rest) && primitive_on(tau, with_new(c, n, 1)))
                    concl("clan " + d.to_string() + " does not contain " + c.to_string());
            }
        }
    }
    return rep;
}

}  // namespace twostruct
