#include "twostruct/traverse.hpp"

#include <algorithm>

namespace twostruct {

Traverse Traverse::from_order(std::vector<Vertex> order) {
    Traverse t;
    t.position.assign(order.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i] >= order.size()) throw Error(ErrorKind::OutOfRange, "order is not a permutation");
        t.position[order[i]] = i;
    }
    t.order = std::move(order);
    return t;
}

bool Traverse::is_interval(const VertexSet& w) const {
    if (w.empty()) return true;
    std::size_t lo = order.size();
    std::size_t hi = 0;
    for (Vertex v : w) {
        lo = std::min(lo, position[v]);
        hi = std::max(hi, position[v]);
    }
    return hi - lo + 1 == w.size();
}

namespace {

void append(const ClanTree& node, std::vector<Vertex>& out) {
    if (node.is_leaf()) {
        out.push_back(node.vertices.front());
        return;
    }
    for (const auto& c : node.children) append(c, out);
}

}  // namespace

Traverse build_traverse(const TwoStructure& sigma, const ClanTree& tree) {
    if (tree.vertices.size() != sigma.size()) throw Error(ErrorKind::VertexSetMismatch, "tree built for another structure");
    std::vector<Vertex> order;
    append(tree, order);
    Traverse t = Traverse::from_order(std::move(order));
    std::string why = traverse_violation(tree, t);
    if (!why.empty()) throw Error(ErrorKind::InternalProofViolation, why);
    return t;
}

std::string traverse_violation(const ClanTree& tree, const Traverse& t) {
    for (const ClanTree* node : tree_nodes(tree)) {
        if (!t.is_interval(node->vertices)) return "prime clan " + node->vertices.to_string() + " is not an interval";
        if (node->label.kind != NodeKind::Linear) continue;
        for (std::size_t i = 0; i + 1 < node->children.size(); ++i) {
            Vertex a = node->children[i].vertices.front();
            Vertex b = node->children[i + 1].vertices.front();
            if (t.position[a] > t.position[b])
                return "children of linear node " + node->vertices.to_string() + " are out of order";
        }
    }
    return {};
}

Bicoloration dense_bicoloration(const Traverse& t) {
    Bicoloration beta(t.order.size(), 0);
    for (std::size_t i = 0; i < t.order.size(); ++i) beta[t.order[i]] = static_cast<std::uint8_t>(i % 2);
    return beta;
}

bool is_dense(const Traverse& t, const Bicoloration& beta) {
    // Every interval of size two or more holds both colors exactly when
    // neighbours always differ.
    for (std::size_t i = 0; i + 1 < t.order.size(); ++i)
        if (beta[t.order[i]] == beta[t.order[i + 1]]) return false;
    return true;
}

Bicoloration flipped(const Bicoloration& beta) {
    Bicoloration out(beta.size());
    for (std::size_t i = 0; i < beta.size(); ++i) out[i] = static_cast<std::uint8_t>(1 - beta[i]);
    return out;
}

}  // namespace twostruct
