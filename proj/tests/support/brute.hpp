#pragma once

// Definition-level checks used as oracles by the tests. Nothing here calls
// the library's clan, decomposition or extension algorithms; only the
// matrix accessors of TwoStructure are used.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "twostruct/core.hpp"

namespace brute {

using twostruct::TwoStructure;
using twostruct::Vertex;
using Mask = std::uint32_t;

// Plain color matrix; kNone on the diagonal.
struct Mat {
    static constexpr int kNone = -1;
    std::size_t n = 0;
    std::vector<int> c;
    int at(std::size_t u, std::size_t v) const { return c[u * n + v]; }
    int& at(std::size_t u, std::size_t v) { return c[u * n + v]; }
};

inline Mat of(const TwoStructure& s) {
    Mat m{s.size(), std::vector<int>(s.size() * s.size(), Mat::kNone)};
    for (Vertex u = 0; u < s.size(); ++u)
        for (Vertex v = 0; v < s.size(); ++v)
            if (u != v) m.at(u, v) = s.raw(u, v);
    return m;
}

inline std::vector<Vertex> members(Mask m) {
    std::vector<Vertex> out;
    for (Vertex v = 0; m >> v; ++v)
        if (m >> v & 1) out.push_back(v);
    return out;
}

inline Mask mask_of(const std::vector<Vertex>& vs) {
    Mask m = 0;
    for (Vertex v : vs) m |= Mask{1} << v;
    return m;
}

inline int popcount(Mask m) { return __builtin_popcount(m); }

inline bool is_clan(const Mat& m, Mask c) {
    auto in = members(c);
    if (in.size() <= 1) return true;
    for (Vertex x = 0; x < m.n; ++x) {
        if (c >> x & 1) continue;
        for (Vertex y : in)
            if (m.at(x, y) != m.at(x, in[0]) || m.at(y, x) != m.at(in[0], x)) return false;
    }
    return true;
}

inline std::vector<Mask> clans(const Mat& m) {
    std::vector<Mask> out;
    for (Mask c = 0; c < (Mask{1} << m.n); ++c)
        if (is_clan(m, c)) out.push_back(c);
    return out;
}

inline bool is_primitive(const Mat& m) {
    if (m.n < 3) return false;
    const Mask all = (Mask{1} << m.n) - 1;
    for (Mask c = 1; c < all; ++c)
        if (popcount(c) >= 2 && is_clan(m, c)) return false;
    return true;
}

inline bool overlap(Mask a, Mask b) { return (a & b) && (a & ~b) && (b & ~a); }

// Clans overlapping no other clan.
inline std::vector<Mask> prime_clans(const Mat& m) {
    auto all = clans(m);
    std::vector<Mask> out;
    for (Mask a : all)
        if (std::none_of(all.begin(), all.end(), [&](Mask b) { return overlap(a, b); })) out.push_back(a);
    return out;
}

// Maximal proper prime clans of the clan w, as seen inside m.
inline std::vector<Mask> maximal_prime_below(const std::vector<Mask>& primes, Mask w) {
    std::vector<Mask> out;
    for (Mask p : primes) {
        if (p == 0 || p == w || (p & ~w)) continue;
        bool maximal = std::none_of(primes.begin(), primes.end(), [&](Mask q) {
            return q != p && q != w && !(q & ~w) && (p & q) == p;
        });
        if (maximal) out.push_back(p);
    }
    return out;
}

inline bool is_complete_color(const Mat& m, Mask c, int color) {
    auto in = members(c);
    for (Vertex u : in)
        for (Vertex v : in)
            if (u != v && m.at(u, v) != color) return false;
    return true;
}

// Quotient shape of blocks: 'C' complete, 'L' linear, 'P' primitive, '?' otherwise.
inline char quotient_kind(const Mat& m, const std::vector<Mask>& blocks) {
    const std::size_t k = blocks.size();
    Mat q{k, std::vector<int>(k * k, Mat::kNone)};
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i != j) q.at(i, j) = m.at(members(blocks[i])[0], members(blocks[j])[0]);
    bool complete = true;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i != j && q.at(i, j) != q.at(0, 1)) complete = false;
    if (complete) return 'C';
    // Linear: two colors a != b with every pair (a, b) or (b, a), transitive.
    int a = q.at(0, 1);
    int b = q.at(1, 0);
    bool linear = a != b;
    for (std::size_t i = 0; i < k && linear; ++i)
        for (std::size_t j = 0; j < k && linear; ++j) {
            if (i == j) continue;
            bool fwd = q.at(i, j) == a && q.at(j, i) == b;
            bool bwd = q.at(i, j) == b && q.at(j, i) == a;
            if (!fwd && !bwd) linear = false;
        }
    for (std::size_t i = 0; i < k && linear; ++i)
        for (std::size_t j = 0; j < k && linear; ++j)
            for (std::size_t l = 0; l < k && linear; ++l)
                if (i != j && j != l && i != l && q.at(i, j) == a && q.at(j, l) == a && q.at(i, l) != a) linear = false;
    if (linear) return 'L';
    return is_primitive(q) ? 'P' : '?';
}

// Faithfulness by definition: tau restricted to the first m vertices has
// sigma's partition, every tau class meets the original pairs, and every
// new ordered pair (x, y) carries a color combination already realised by
// some (u, v), (v, u) of sigma.
struct Faithful {
    bool restriction = true;
    bool e1 = true;
    bool e2 = true;
    bool ok() const { return restriction && e1 && e2; }
};

inline Faithful faithful(const Mat& sigma, const Mat& tau) {
    Faithful f;
    const std::size_t n = sigma.n;
    std::vector<int> to_sigma(tau.n * tau.n + 1, Mat::kNone);
    std::vector<int> to_tau(sigma.n * sigma.n + 1, Mat::kNone);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            int s = sigma.at(u, v);
            int t = tau.at(u, v);
            if (to_sigma[t] == Mat::kNone) to_sigma[t] = s;
            if (to_tau[s] == Mat::kNone) to_tau[s] = t;
            if (to_sigma[t] != s || to_tau[s] != t) f.restriction = false;
        }
    if (!f.restriction) return f;
    std::set<std::pair<int, int>> combos;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v) combos.emplace(sigma.at(u, v), sigma.at(v, u));
    for (Vertex x = 0; x < tau.n; ++x)
        for (Vertex y = 0; y < tau.n; ++y) {
            if (x == y || (x < n && y < n)) continue;
            int a = to_sigma[tau.at(x, y)];
            int b = to_sigma[tau.at(y, x)];
            if (a == Mat::kNone || b == Mat::kNone) {
                f.e1 = false;
                continue;
            }
            if (!combos.count({a, b})) f.e2 = false;
        }
    return f;
}

// Smallest k <= k_max with a primitive faithful k-extension, any coloring
// of the new ordered pairs over sigma's colors. Exponential; tiny inputs only.
inline std::optional<std::size_t> min_extension(const Mat& sigma, std::size_t colors, std::size_t k_max) {
    if (is_primitive(sigma)) return 0;
    for (std::size_t k = 1; k <= k_max; ++k) {
        const std::size_t total = sigma.n + k;
        Mat tau{total, std::vector<int>(total * total, Mat::kNone)};
        for (Vertex u = 0; u < sigma.n; ++u)
            for (Vertex v = 0; v < sigma.n; ++v) tau.at(u, v) = sigma.at(u, v);
        std::vector<std::pair<Vertex, Vertex>> slots;
        for (Vertex x = 0; x < total; ++x)
            for (Vertex y = 0; y < total; ++y)
                if (x != y && (x >= sigma.n || y >= sigma.n)) slots.emplace_back(x, y);
        std::function<bool(std::size_t)> go = [&](std::size_t i) {
            if (i == slots.size()) return faithful(sigma, tau).ok() && is_primitive(tau);
            for (std::size_t c = 0; c < colors; ++c) {
                tau.at(slots[i].first, slots[i].second) = static_cast<int>(c);
                if (go(i + 1)) return true;
            }
            return false;
        };
        if (go(0)) return k;
    }
    return std::nullopt;
}

}  // namespace brute
