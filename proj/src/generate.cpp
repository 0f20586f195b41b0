#include "twostruct/generate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace twostruct {

namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

// Canonical form: the smallest adjacency bit string over all relabelings.
std::vector<char> canonical(std::size_t n, const std::vector<char>& adj) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<char> best;
    do {
        std::vector<char> cur(n * n);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) cur[perm[u] * n + perm[v]] = adj[u * n + v];
        if (best.empty() || cur < best) best = std::move(cur);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

template <typename Make>
std::vector<TwoStructure> enumerate(std::size_t n, bool directed, Make make) {
    Pairs slots;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::set<std::vector<char>> seen;
    std::vector<TwoStructure> out;
    const std::uint64_t limit = std::uint64_t{1} << slots.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        std::vector<char> adj(n * n, 0);
        Pairs chosen;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            auto [u, v] = slots[i];
            bool bit = mask >> i & 1;
            if (directed) {
                if (bit) std::swap(u, v);
                adj[u * n + v] = 1;
                chosen.emplace_back(u, v);
            } else if (bit) {
                adj[u * n + v] = adj[v * n + u] = 1;
                chosen.emplace_back(u, v);
            }
        }
        if (seen.insert(canonical(n, adj)).second) out.push_back(make(n, chosen));
    }
    return out;
}

}  // namespace

std::vector<TwoStructure> all_graphs(std::size_t n) { return enumerate(n, false, from_graph); }

std::vector<TwoStructure> all_tournaments(std::size_t n) { return enumerate(n, true, from_tournament); }

TwoStructure random_structure(const RandomSpec& spec, std::mt19937_64& rng) {
    const std::size_t n = spec.n;
    const std::size_t k = std::max<std::size_t>(1, spec.max_colors);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < 2 * k; ++i) names.push_back("c" + std::to_string(i));
    std::vector<std::uint16_t> raw(n * n, kNoColor);
    if (spec.reversible) {
        // sym symmetric colors, then asym_pairs star pairs, at most k in
        // total. The split is drawn once per structure.
        std::uniform_int_distribution<std::size_t> split_dist(0, k);
        std::size_t sym = split_dist(rng);
        std::size_t asym_pairs = (k - sym) / 2;
        if (sym == 0 && asym_pairs == 0) sym = 1;
        std::uniform_int_distribution<std::size_t> pick(0, sym + 2 * asym_pairs - 1);
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                std::size_t c = pick(rng);
                std::uint16_t uv;
                std::uint16_t vu;
                if (c < sym) {
                    uv = vu = static_cast<std::uint16_t>(c);
                } else {
                    std::size_t p = (c - sym) / 2;
                    std::uint16_t a = static_cast<std::uint16_t>(sym + 2 * p);
                    bool flip = (c - sym) % 2;
                    uv = flip ? a + 1 : a;
                    vu = flip ? a : a + 1;
                }
                raw[u * n + v] = uv;
                raw[v * n + u] = vu;
            }
        }
    } else {
        std::uniform_int_distribution<std::uint16_t> pick(0, static_cast<std::uint16_t>(k - 1));
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v)
                if (u != v) raw[u * n + v] = pick(rng);
    }
    return TwoStructure::derive(n, names, std::move(raw)).structure;
}

TwoStructure random_tournament(std::size_t n, std::mt19937_64& rng) {
    Pairs arcs;
    std::bernoulli_distribution coin(0.5);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) arcs.emplace_back(coin(rng) ? std::make_pair(u, v) : std::make_pair(v, u));
    return from_tournament(n, arcs);
}

TwoStructure linear_order(std::size_t n) {
    Pairs arcs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) arcs.emplace_back(u, v);
    return from_tournament(n, arcs);
}

}  // namespace twostruct
