#include "twostruct/clans.hpp"

#include <algorithm>

#include "twostruct/decomposition.hpp"

namespace twostruct {

namespace detail {

namespace {

// Grows `in_set` to the least clan containing it. `queue` holds members
// not yet compared against the reference member.
std::size_t grow(MatrixView m, std::span<const std::size_t> outside_candidates, std::vector<char>& in_set,
                 std::vector<std::size_t>& queue, std::size_t ref, std::size_t count) {
    while (!queue.empty()) {
        std::size_t s = queue.back();
        queue.pop_back();
        for (std::size_t x : outside_candidates) {
            if (in_set[x]) continue;
            if (m.at(s, x) != m.at(ref, x) || m.at(x, s) != m.at(x, ref)) {
                in_set[x] = 1;
                ++count;
                queue.push_back(x);
            }
        }
    }
    return count;
}

}  // namespace

std::vector<std::size_t> closure(MatrixView m, std::span<const std::size_t> universe,
                                 std::span<const std::size_t> seed) {
    std::vector<std::size_t> all;
    if (universe.empty()) {
        all.resize(m.n);
        for (std::size_t i = 0; i < m.n; ++i) all[i] = i;
        universe = all;
    }
    std::vector<char> in_set(m.n, 0);
    std::vector<std::size_t> queue;
    if (seed.empty()) return {};
    std::size_t ref = seed[0];
    in_set[ref] = 1;
    for (std::size_t s : seed) {
        if (!in_set[s]) {
            in_set[s] = 1;
            queue.push_back(s);
        }
    }
    grow(m, universe, in_set, queue, ref, 0);
    std::vector<std::size_t> out;
    for (std::size_t v : universe)
        if (in_set[v]) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

bool primitive(MatrixView m) {
    const std::size_t n = m.n;
    if (n < 3) return false;
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    std::vector<char> in_set(n);
    std::vector<std::size_t> queue;
    queue.reserve(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            std::fill(in_set.begin(), in_set.end(), 0);
            in_set[u] = in_set[v] = 1;
            queue.assign(1, v);
            if (grow(m, all, in_set, queue, u, 2) != n) return false;
        }
    }
    return true;
}

bool is_clan(MatrixView m, std::span<const std::size_t> members) {
    if (members.size() <= 1) return true;
    std::vector<char> in(m.n, 0);
    for (std::size_t c : members) in[c] = 1;
    std::size_t ref = members[0];
    for (std::size_t x = 0; x < m.n; ++x) {
        if (in[x]) continue;
        std::uint16_t out_c = m.at(ref, x);
        std::uint16_t in_c = m.at(x, ref);
        for (std::size_t c : members)
            if (m.at(c, x) != out_c || m.at(x, c) != in_c) return false;
    }
    return true;
}

}  // namespace detail

namespace {

detail::MatrixView view(const TwoStructure& s) { return {s.size(), s.matrix().data()}; }

void check_subset(const TwoStructure& sigma, const VertexSet& w) {
    if (!w.empty() && w.back() >= sigma.size())
        throw Error(ErrorKind::OutOfRange, "vertex set " + w.to_string() + " exceeds the vertex range");
}

}  // namespace

bool is_clan(const TwoStructure& sigma, const VertexSet& c) {
    check_subset(sigma, c);
    return detail::is_clan(view(sigma), c.ids());
}

VertexSet clan_closure(const TwoStructure& sigma, const VertexSet& w) {
    if (w.empty()) throw Error(ErrorKind::EmptySet, "closure of the empty set");
    check_subset(sigma, w);
    return VertexSet(detail::closure(view(sigma), {}, w.ids()));
}

ClanFamily enumerate_clans(const TwoStructure& sigma, std::size_t min_size, std::size_t guard) {
    const std::size_t n = sigma.size();
    if (n > guard || n >= 8 * sizeof(unsigned long long) - 1)
        throw Error(ErrorKind::TooLarge,
                    "clan enumeration over " + std::to_string(n) + " vertices exceeds guard " + std::to_string(guard));
    ClanFamily out;
    std::vector<std::size_t> members;
    const unsigned long long limit = 1ULL << n;
    for (unsigned long long mask = 0; mask < limit; ++mask) {
        members.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1ULL) members.push_back(i);
        if (members.size() < min_size) continue;
        if (detail::is_clan(view(sigma), members)) out.emplace_back(members);
    }
    sort_family(out);
    return out;
}

bool is_primitive(const TwoStructure& sigma) { return detail::primitive(view(sigma)); }

ClanFamily prime_clans(const TwoStructure& sigma) {
    ClanFamily out{VertexSet{}};
    ClanTree tree = clan_tree(sigma);
    for (const ClanTree* node : tree_nodes(tree)) out.push_back(node->vertices);
    sort_family(out);
    return out;
}

ClanFamily prime_clans_by_enumeration(const TwoStructure& sigma, std::size_t guard) {
    ClanFamily all = enumerate_clans(sigma, 0, guard);
    ClanFamily out;
    for (const auto& c : all) {
        bool overlaps = std::any_of(all.begin(), all.end(), [&](const VertexSet& d) {
            return c.intersects(d) && !c.is_subset_of(d) && !d.is_subset_of(c);
        });
        if (!overlaps) out.push_back(c);
    }
    return out;
}

QuotientResult quotient(const TwoStructure& sigma, const Factorization& f) {
    const std::size_t n = sigma.size();
    std::vector<char> seen(n, 0);
    std::size_t covered = 0;
    for (const auto& block : f) {
        if (block.empty()) throw Error(ErrorKind::NotAFactorization, "empty block");
        if (block.back() >= n) throw Error(ErrorKind::NotAFactorization, "block " + block.to_string() + " out of range");
        for (Vertex v : block) {
            if (seen[v]) throw Error(ErrorKind::NotAFactorization, "vertex " + std::to_string(v) + " in two blocks");
            seen[v] = 1;
            ++covered;
        }
        if (!is_clan(sigma, block)) throw Error(ErrorKind::NotAFactorization, "block " + block.to_string() + " is not a clan");
    }
    if (covered != n) throw Error(ErrorKind::NotAFactorization, "blocks do not cover the vertex set");

    std::vector<VertexSet> blocks = f;
    std::sort(blocks.begin(), blocks.end(), [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
    std::vector<Vertex> reps;
    for (const auto& b : blocks) reps.push_back(b.front());
    auto sub = substructure(sigma, VertexSet(reps));
    return {std::move(sub.structure), std::move(blocks), std::move(sub.color_map)};
}

PrimeEnvelope prime_envelope(const TwoStructure& sigma, const VertexSet& w) {
    if (w.empty()) throw Error(ErrorKind::EmptySet, "prime envelope of the empty set");
    check_subset(sigma, w);
    ClanTree tree = clan_tree(sigma);
    return prime_envelope(tree, w);
}

}  // namespace twostruct
