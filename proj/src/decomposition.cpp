#include "twostruct/decomposition.hpp"

#include <algorithm>
#include <numeric>

namespace twostruct {

const char* to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::Leaf: return "Leaf";
        case NodeKind::Complete: return "Complete";
        case NodeKind::Linear: return "Linear";
        case NodeKind::Primitive: return "Primitive";
    }
    return "?";
}

std::vector<VertexSet> ClanTree::child_sets() const {
    std::vector<VertexSet> out;
    for (const auto& c : children) out.push_back(c.vertices);
    return out;
}

std::size_t ClanTree::singleton_children() const {
    return static_cast<std::size_t>(
        std::count_if(children.begin(), children.end(), [](const ClanTree& c) { return c.vertices.size() == 1; }));
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Groups xs[i] by the representative of i.
std::vector<VertexSet> groups(const std::vector<Vertex>& xs, UnionFind& uf) {
    std::vector<std::vector<Vertex>> by_root(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) by_root[uf.find(i)].push_back(xs[i]);
    std::vector<VertexSet> out;
    for (auto& g : by_root)
        if (!g.empty()) out.emplace_back(std::move(g));
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
    return out;
}

class TreeBuilder {
public:
    TreeBuilder(const TwoStructure& sigma, const TwoStructure& mu) : sigma_(sigma), mu_(mu) {}

    ClanTree build(std::vector<Vertex> xs) const {
        ClanTree node;
        node.vertices = VertexSet(xs);
        if (xs.size() == 1) return node;

        std::vector<VertexSet> blocks;
        if (!split_complete(xs, node, blocks) && !split_linear(xs, node, blocks)) split_primitive(xs, node, blocks);
        for (const auto& b : blocks) node.children.push_back(build(b.ids()));
        return node;
    }

private:
    std::vector<char> present_colors(const std::vector<Vertex>& xs) const {
        std::vector<char> present(mu_.color_count(), 0);
        for (Vertex u : xs)
            for (Vertex v : xs)
                if (u != v) present[mu_.raw(u, v)] = 1;
        return present;
    }

    bool split_complete(const std::vector<Vertex>& xs, ClanTree& node, std::vector<VertexSet>& blocks) const {
        auto present = present_colors(xs);
        for (ColorId e : mu_.symmetric_colors()) {
            if (!present[e.index]) continue;
            UnionFind uf(xs.size());
            for (std::size_t i = 0; i < xs.size(); ++i)
                for (std::size_t j = i + 1; j < xs.size(); ++j)
                    if (mu_.color(xs[i], xs[j]) != e) uf.unite(i, j);
            auto comps = groups(xs, uf);
            if (comps.size() < 2) continue;
            blocks = std::move(comps);
            node.label = {NodeKind::Complete, sigma_.color(blocks[0].front(), blocks[1].front())};
            return true;
        }
        return false;
    }

    bool split_linear(const std::vector<Vertex>& xs, ClanTree& node, std::vector<VertexSet>& blocks) const {
        auto present = present_colors(xs);
        const std::size_t m = xs.size();
        for (ColorId e : mu_.asymmetric_colors()) {
            ColorId back = mu_.star_of(e);
            if (!present[e.index] || back < e) continue;
            // Arc i -> j unless xs[j] comes before xs[i] in color e.
            std::vector<std::vector<char>> reach(m, std::vector<char>(m, 0));
            for (std::size_t s = 0; s < m; ++s) {
                std::vector<std::size_t> stack{s};
                reach[s][s] = 1;
                while (!stack.empty()) {
                    std::size_t i = stack.back();
                    stack.pop_back();
                    for (std::size_t j = 0; j < m; ++j) {
                        if (reach[s][j] || mu_.color(xs[i], xs[j]) == back) continue;
                        reach[s][j] = 1;
                        stack.push_back(j);
                    }
                }
            }
            UnionFind uf(m);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = i + 1; j < m; ++j)
                    if (reach[i][j] && reach[j][i]) uf.unite(i, j);
            auto comps = groups(xs, uf);
            if (comps.size() < 2) continue;
            // Earlier components reach more vertices.
            auto index_of = [&](Vertex v) {
                return static_cast<std::size_t>(std::find(xs.begin(), xs.end(), v) - xs.begin());
            };
            auto reach_count = [&](const VertexSet& b) {
                std::size_t i = index_of(b.front());
                return std::count(reach[i].begin(), reach[i].end(), 1);
            };
            std::stable_sort(comps.begin(), comps.end(),
                             [&](const VertexSet& a, const VertexSet& b) { return reach_count(a) > reach_count(b); });
            orient(xs.front(), comps);
            blocks = std::move(comps);
            node.label = {NodeKind::Linear, sigma_.color(blocks[0].front(), blocks[1].front())};
            return true;
        }
        return false;
    }

    // The block holding the smallest vertex goes first when it sits at an
    // end; otherwise the direction whose color has the smaller id wins.
    void orient(Vertex smallest, std::vector<VertexSet>& comps) const {
        if (comps.front().contains(smallest)) return;
        if (comps.back().contains(smallest)) {
            std::reverse(comps.begin(), comps.end());
            return;
        }
        ColorId forward = sigma_.color(comps[0].front(), comps[1].front());
        ColorId backward = sigma_.color(comps[1].front(), comps[0].front());
        if (backward < forward) std::reverse(comps.begin(), comps.end());
    }

    void split_primitive(const std::vector<Vertex>& xs, ClanTree& node, std::vector<VertexSet>& blocks) const {
        detail::MatrixView view{mu_.size(), mu_.matrix().data()};
        const std::size_t m = xs.size();
        UnionFind uf(m);
        std::vector<std::size_t> pos(mu_.size(), 0);
        for (std::size_t i = 0; i < m; ++i) pos[xs[i]] = i;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                if (uf.find(i) == uf.find(j)) continue;
                std::size_t seed[2] = {xs[i], xs[j]};
                auto c = detail::closure(view, xs, seed);
                if (c.size() == m) continue;
                for (Vertex v : c) uf.unite(i, pos[v]);
            }
        }
        blocks = groups(xs, uf);
        if (blocks.size() < 3)
            throw Error(ErrorKind::InternalMismatch, "node " + node.vertices.to_string() + " fits no quotient kind");
        node.label = {NodeKind::Primitive, ColorId{}};
    }

    const TwoStructure& sigma_;
    const TwoStructure& mu_;
};

void collect(const ClanTree& node, std::vector<const ClanTree*>& out) {
    out.push_back(&node);
    for (const auto& c : node.children) collect(c, out);
}

}  // namespace

ClanTree clan_tree(const TwoStructure& sigma) {
    std::vector<Vertex> all = sigma.vertices().ids();
    if (sigma.is_reversible()) return TreeBuilder(sigma, sigma).build(all);
    TwoStructure mu = meet(sigma, star(sigma)).structure;
    return TreeBuilder(sigma, mu).build(all);
}

std::vector<const ClanTree*> tree_nodes(const ClanTree& root) {
    std::vector<const ClanTree*> out;
    collect(root, out);
    return out;
}

const ClanTree& smallest_node_containing(const ClanTree& root, const VertexSet& w) {
    if (!w.is_subset_of(root.vertices))
        throw Error(ErrorKind::OutOfRange, "set " + w.to_string() + " is not inside the tree");
    const ClanTree* node = &root;
    for (;;) {
        const ClanTree* next = nullptr;
        for (const auto& c : node->children)
            if (w.is_subset_of(c.vertices)) next = &c;
        if (!next) return *node;
        node = next;
    }
}

const ClanTree* parent_of(const ClanTree& root, const ClanTree& node) {
    if (&root == &node) return nullptr;
    const ClanTree* cur = &root;
    while (cur) {
        const ClanTree* next = nullptr;
        for (const auto& c : cur->children) {
            if (&c == &node) return cur;
            if (node.vertices.is_subset_of(c.vertices)) next = &c;
        }
        cur = next;
    }
    return nullptr;
}

PrimeEnvelope prime_envelope(const ClanTree& root, const VertexSet& w) {
    if (w.empty()) throw Error(ErrorKind::EmptySet, "prime envelope of the empty set");
    const ClanTree& tilde = smallest_node_containing(root, w);
    PrimeEnvelope out{tilde.vertices, std::nullopt};
    if (tilde.vertices != w) {
        out.hat = tilde.vertices;
    } else if (const ClanTree* p = parent_of(root, tilde)) {
        out.hat = p->vertices;
    }
    return out;
}

VertexSet linear_interval(const ClanTree& node, std::size_t first, std::size_t last) {
    if (node.label.kind != NodeKind::Linear) throw Error(ErrorKind::PreconditionFailed, "interval on a non-linear node");
    if (first > last) std::swap(first, last);
    if (last >= node.children.size()) throw Error(ErrorKind::OutOfRange, "child position out of range");
    VertexSet out;
    for (std::size_t i = first; i <= last; ++i) out = out.unite(node.children[i].vertices);
    return out;
}

std::vector<VertexSet> gallai_family(const TwoStructure& sigma) {
    if (sigma.size() <= 1) throw Error(ErrorKind::TooSmall, "the Gallai family needs at least two vertices");
    return clan_tree(sigma).child_sets();
}

VertexSet FamiliesReport::union_all() const {
    VertexSet out;
    for (const auto* fam : {&complete, &linear, &primitive})
        for (const auto& x : *fam) out = out.unite(x);
    return out;
}

namespace {

// Classes of the equivalence read from the definition: v ~ w when both
// have the same hat H and the least clan of the quotient at H holding
// their blocks consists of singleton blocks only.
std::vector<VertexSet> equivalence_classes(const TwoStructure& sigma, const ClanTree& tree) {
    const std::size_t n = sigma.size();
    UnionFind uf(n);
    for (const ClanTree* node : tree_nodes(tree)) {
        if (node->is_leaf() || node->singleton_children() < 2) continue;
        auto sub = substructure(sigma, node->vertices);
        std::vector<Vertex> local(n, 0);
        for (std::size_t i = 0; i < sub.vertex_map.size(); ++i) local[sub.vertex_map[i]] = i;
        Factorization f;
        for (const auto& c : node->children) {
            std::vector<Vertex> ids;
            for (Vertex v : c.vertices) ids.push_back(local[v]);
            f.emplace_back(std::move(ids));
        }
        auto q = quotient(sub.structure, f);
        std::vector<Vertex> singles;
        for (std::size_t b = 0; b < q.blocks.size(); ++b)
            if (q.blocks[b].size() == 1) singles.push_back(b);
        for (std::size_t i = 0; i < singles.size(); ++i) {
            for (std::size_t j = i + 1; j < singles.size(); ++j) {
                Vertex v = sub.vertex_map[q.blocks[singles[i]].front()];
                Vertex w = sub.vertex_map[q.blocks[singles[j]].front()];
                if (uf.find(v) == uf.find(w)) continue;
                VertexSet c = clan_closure(q.structure, VertexSet{singles[i], singles[j]});
                bool all_single = std::all_of(c.begin(), c.end(), [&](Vertex b) { return q.blocks[b].size() == 1; });
                if (all_single) uf.unite(v, w);
            }
        }
    }
    std::vector<Vertex> all = sigma.vertices().ids();
    auto out = groups(all, uf);
    sort_family(out);
    return out;
}

}  // namespace

FamiliesReport maximal_families(const TwoStructure& sigma, const ClanTree& tree) {
    FamiliesReport r;
    for (const ClanTree* node : tree_nodes(tree)) {
        switch (node->label.kind) {
            case NodeKind::Leaf: break;
            case NodeKind::Complete: {
                VertexSet singles;
                for (const auto& c : node->children)
                    if (c.vertices.size() == 1) singles = singles.unite(c.vertices);
                if (singles.size() >= 2) r.complete.push_back(singles);
                break;
            }
            case NodeKind::Linear: {
                VertexSet run;
                auto flush = [&] {
                    if (run.size() >= 2) r.linear.push_back(run);
                    run = VertexSet{};
                };
                for (const auto& c : node->children) {
                    if (c.vertices.size() == 1)
                        run = run.unite(c.vertices);
                    else
                        flush();
                }
                flush();
                break;
            }
            case NodeKind::Primitive:
                if (node->singleton_children() == node->children.size()) r.primitive.push_back(node->vertices);
                break;
        }
    }
    sort_family(r.complete);
    sort_family(r.linear);
    sort_family(r.primitive);

    r.classes = equivalence_classes(sigma, tree);
    std::vector<VertexSet> big;
    for (const auto& c : r.classes) {
        if (c.size() >= 2)
            big.push_back(c);
        else
            r.upsilon = r.upsilon.unite(c);
    }
    std::vector<VertexSet> from_tree = r.complete;
    from_tree.insert(from_tree.end(), r.linear.begin(), r.linear.end());
    from_tree.insert(from_tree.end(), r.primitive.begin(), r.primitive.end());
    sort_family(from_tree);
    if (from_tree != big)
        throw Error(ErrorKind::InternalMismatch, "equivalence classes disagree with the families read from the tree");

    std::vector<Vertex> down;
    for (Vertex v : r.upsilon) {
        auto env = prime_envelope(tree, VertexSet{v});
        if (env.hat && *env.hat == VertexSet{v}) down.push_back(v);
    }
    r.upsilon_down = VertexSet(std::move(down));
    return r;
}

CompletenessProfile completeness_profile(const TwoStructure& sigma) {
    if (!sigma.is_reversible()) throw Error(ErrorKind::NotReversible, "completeness profile needs a reversible structure");
    return completeness_profile(sigma, maximal_families(sigma, clan_tree(sigma)));
}

CompletenessProfile completeness_profile(const TwoStructure& sigma, const FamiliesReport& families) {
    if (!sigma.is_reversible()) throw Error(ErrorKind::NotReversible, "completeness profile needs a reversible structure");
    CompletenessProfile p;
    for (const auto& c : families.complete) p.c_value = std::max(p.c_value, c.size());
    const std::size_t n = sigma.size();
    for (ColorId e : sigma.symmetric_colors()) {
        std::vector<Vertex> iso;
        for (Vertex v = 0; v < n; ++v) {
            bool all = true;
            for (Vertex w = 0; w < n && all; ++w)
                if (w != v && sigma.color(v, w) != e) all = false;
            if (all) iso.push_back(v);
        }
        p.isolated[e] = VertexSet(std::move(iso));
    }
    return p;
}

bool is_inclusive(const TwoStructure& sigma, const ClanTree& tree, const FamiliesReport& families, const VertexSet& j) {
    if (j.empty() || !is_clan(sigma, j)) return false;
    if (!families.union_all().is_subset_of(j)) return false;
    for (const ClanTree* node : tree_nodes(tree))
        if (node->vertices.size() >= 2 && !node->vertices.intersects(j)) return false;
    return true;
}

std::vector<VertexSet> inclusive_clans_from_tree(const TwoStructure& sigma, const ClanTree& tree,
                                                 const FamiliesReport& families) {
    std::vector<VertexSet> candidates;
    for (const ClanTree* node : tree_nodes(tree)) {
        candidates.push_back(node->vertices);
        if (node->label.kind == NodeKind::Complete) {
            VertexSet big;
            for (const auto& c : node->children)
                if (c.vertices.size() >= 2) big = big.unite(c.vertices);
            if (!big.empty()) candidates.push_back(big);
        } else if (node->label.kind == NodeKind::Linear) {
            for (std::size_t i = 0; i < node->children.size(); ++i)
                for (std::size_t k = i; k < node->children.size(); ++k)
                    candidates.push_back(linear_interval(*node, i, k));
        }
    }
    std::vector<VertexSet> out;
    for (auto& c : candidates)
        if (is_inclusive(sigma, tree, families, c)) out.push_back(std::move(c));
    sort_family(out);
    return out;
}

std::vector<VertexSet> inclusive_clans(const TwoStructure& sigma, std::size_t guard) {
    ClanTree tree = clan_tree(sigma);
    FamiliesReport families = maximal_families(sigma, tree);
    if (sigma.size() > guard) return inclusive_clans_from_tree(sigma, tree, families);
    std::vector<VertexSet> out;
    for (auto& c : enumerate_clans(sigma, 1, guard))
        if (is_inclusive(sigma, tree, families, c)) out.push_back(std::move(c));
    return out;
}

}  // namespace twostruct
