#pragma once

#include <string>
#include <utility>
#include <vector>

#include "twostruct/core.hpp"
#include "twostruct/generate.hpp"

namespace fixtures {

using namespace twostruct;
using Pairs = std::vector<std::pair<Vertex, Vertex>>;

inline TwoStructure graph(std::size_t n, const Pairs& edges) { return from_graph(n, edges); }

inline TwoStructure p3() { return graph(3, {{0, 1}, {1, 2}}); }
inline TwoStructure p4() { return graph(4, {{0, 1}, {1, 2}, {2, 3}}); }
inline TwoStructure two_k2() { return graph(4, {{0, 1}, {2, 3}}); }
inline TwoStructure p3_two_isolated() { return graph(5, {{0, 1}, {1, 2}}); }
inline TwoStructure c3t() { return from_tournament(3, {{0, 1}, {1, 2}, {2, 0}}); }

inline Pairs clique(Vertex first, std::size_t size) {
    Pairs out;
    for (Vertex u = first; u < first + size; ++u)
        for (Vertex v = u + 1; v < first + size; ++v) out.emplace_back(u, v);
    return out;
}

// Disjoint cliques of the given sizes.
inline TwoStructure cliques(const std::vector<std::size_t>& sizes) {
    Pairs edges;
    std::size_t n = 0;
    for (std::size_t s : sizes) {
        auto c = clique(n, s);
        edges.insert(edges.end(), c.begin(), c.end());
        n += s;
    }
    return graph(n, edges);
}

// Chain 0 -> 1 -> 2 in an asymmetric color plus vertex 3 joined to all by a
// symmetric color: three colors, c = 1, imprimitive.
inline TwoStructure f1() {
    const std::size_t n = 4;
    std::vector<std::uint16_t> raw(n * n, kNoColor);
    for (Vertex u = 0; u < 3; ++u)
        for (Vertex v = 0; v < 3; ++v)
            if (u != v) raw[u * n + v] = u < v ? 0 : 1;
    for (Vertex u = 0; u < 3; ++u) raw[u * n + 3] = raw[3 * n + u] = 2;
    return TwoStructure::derive(n, {"a", "a_star", "b"}, raw).structure;
}

// Non-reversible: (0,1) and (1,0) share a color, (0,2) and (2,0) differ
// without forming a star pair.
inline TwoStructure nonreversible3() {
    const std::size_t n = 3;
    std::vector<std::uint16_t> raw(n * n, kNoColor);
    raw[0 * n + 1] = raw[1 * n + 0] = 0;
    raw[0 * n + 2] = 1;
    raw[2 * n + 0] = 0;
    raw[1 * n + 2] = 1;
    raw[2 * n + 1] = 1;
    return TwoStructure::derive(n, {"p", "q"}, raw).structure;
}

// sigma(L_n) on {0..n} with new vertex n+1 attached by the alternating
// rule. last = 0 gives (n, n+1) a third symmetric color, last = 1 gives it
// the color of (0,1).
inline TwoStructure lin_alternating(std::size_t n, int last) {
    const std::size_t total = n + 2;
    std::vector<std::uint16_t> raw(total * total, kNoColor);
    for (Vertex p = 0; p <= n; ++p)
        for (Vertex q = 0; q <= n; ++q)
            if (p != q) raw[p * total + q] = p < q ? 0 : 1;
    const Vertex a = n + 1;
    for (Vertex i = 0; i + 1 <= n; ++i) {
        if (i % 2 == 0) {
            raw[a * total + i] = 0;
            raw[i * total + a] = 1;
        } else {
            raw[i * total + a] = 0;
            raw[a * total + i] = 1;
        }
    }
    std::uint16_t c = last == 0 ? 2 : 0;
    raw[n * total + a] = raw[a * total + n] = c;
    return TwoStructure::derive(total, {"e", "e_star", "g"}, raw).structure;
}

struct Named {
    std::string name;
    TwoStructure s;
};

inline std::vector<Named> all() {
    return {
        {"P3", p3()},
        {"P4", p4()},
        {"2K2", two_k2()},
        {"P3+2K1", p3_two_isolated()},
        {"C3T", c3t()},
        {"L3", linear_order(3)},
        {"L4", linear_order(4)},
        {"L5", linear_order(5)},
        {"K3+K1", cliques({3, 1})},
        {"K4+K4", cliques({4, 4})},
        {"K4+K3", cliques({4, 3})},
        {"F1", f1()},
        {"nonrev3", nonreversible3()},
    };
}

}  // namespace fixtures
