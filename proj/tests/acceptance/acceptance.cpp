// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "support/brute.hpp"
#include "support/fixtures.hpp"
#include "support/properties.hpp"
#include "twostruct/generate.hpp"

using namespace twostruct;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> failures;

    void fail(std::string why) {
        pass = false;
        if (failures.size() < 5) failures.push_back(std::move(why));
    }
    void absorb(const std::string& where, const std::vector<std::string>& v) {
        for (const auto& s : v) fail(where + ": " + s);
    }
};

std::string opt(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "none"; }

// Transitive tournaments have pairwise distinct out-degrees.
bool is_chain(const TwoStructure& s) {
    if (s.color_count() != 2 || !s.symmetric_colors().empty()) return false;
    std::vector<int> out(s.size(), 0);
    for (Vertex u = 0; u < s.size(); ++u)
        for (Vertex v = 0; v < s.size(); ++v)
            if (u != v && s.raw(u, v) == s.raw(0, 1) && s.raw(v, u) == s.raw(1, 0)) ++out[u];
    std::sort(out.begin(), out.end());
    for (std::size_t i = 0; i < out.size(); ++i)
        if (out[i] != static_cast<int>(i)) return false;
    return true;
}

Outcome oracle_equivalence() {
    Outcome o;
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<std::pair<std::string, TwoStructure>> cases;
        for (auto& g : all_graphs(n)) cases.emplace_back("graph", g);
        for (auto& t : all_tournaments(n)) cases.emplace_back("tournament", t);
        for (const auto& [kind, s] : cases) {
            BoundResult b = primitive_bound(s);
            OracleResult r = oracle_min_extension(s, 3);
            ++checked;
            std::ostringstream where;
            where << kind << " n=" << n << " #" << checked;
            if (b.value != r.k) o.fail(where.str() + " bound " + opt(b.value) + " oracle " + opt(r.k));
            if (b.witness) o.absorb(where.str(), properties::witness(s, *b.witness, "bound witness"));
            if (r.witness) o.absorb(where.str(), properties::witness(s, *r.witness, "oracle witness"));
        }
    }
    o.detail = std::to_string(checked) + " graphs and tournaments";
    return o;
}

// Faithful primitive one-vertex extensions counted straight from the
// definition, over every coloring of the new ordered pairs.
std::size_t count_by_definition(const TwoStructure& s) {
    const std::size_t n = s.size();
    const std::size_t eps = s.color_count();
    brute::Mat sigma = brute::of(s);
    brute::Mat tau{n + 1, std::vector<int>((n + 1) * (n + 1), brute::Mat::kNone)};
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) tau.at(u, v) = sigma.at(u, v);
    std::size_t count = 0;
    std::size_t total = 1;
    for (std::size_t i = 0; i < 2 * n; ++i) total *= eps;
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (Vertex u = 0; u < n; ++u) {
            tau.at(u, n) = static_cast<int>(c % eps);
            c /= eps;
            tau.at(n, u) = static_cast<int>(c % eps);
            c /= eps;
        }
        if (brute::faithful(sigma, tau).ok() && brute::is_primitive(tau)) ++count;
    }
    return count;
}

Outcome one_extension_formula_check() {
    Outcome o;
    std::size_t checked = 0;
    for (std::size_t n = 3; n <= 5; ++n) {
        std::vector<TwoStructure> cases = all_graphs(n);
        for (auto& t : all_tournaments(n)) cases.push_back(t);
        for (const auto& s : cases) {
            if (s.color_count() != 2 || !is_primitive(s)) continue;
            ++checked;
            long long want = one_extension_formula(2, n);
            std::size_t lib = count_primitive_1extensions(s);
            std::size_t listed = one_extensions_of_primitive(s).count;
            std::size_t direct = count_by_definition(s);
            if (static_cast<long long>(lib) != want || listed != lib || direct != lib)
                o.fail("n=" + std::to_string(n) + " formula " + std::to_string(want) + " count " + std::to_string(lib) +
                       " listed " + std::to_string(listed) + " direct " + std::to_string(direct));
        }
    }
    auto p4 = fixtures::p4();
    if (count_primitive_1extensions(p4) != 6) o.fail("P4 count is not 6");
    if (count_primitive_1extensions(fixtures::c3t()) != 0) o.fail("C3T count is not 0");
    o.detail = std::to_string(checked) + " primitive structures, P4 -> 6, C3T -> 0";
    return o;
}

Outcome tournaments() {
    Outcome o;
    for (std::size_t n : {3, 5, 7, 9}) {
        auto s = linear_order(n);
        auto b = primitive_bound(s);
        if (b.value != 2u) o.fail("L" + std::to_string(n) + " bound " + opt(b.value));
        if (b.witness) o.absorb("L" + std::to_string(n), properties::witness(s, *b.witness, "witness"));
        if (n <= 5) {
            auto r = oracle_min_extension(s, 3);
            if (r.k != 2u) o.fail("L" + std::to_string(n) + " oracle " + opt(r.k));
        }
    }
    std::size_t exhaustive = 0;
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& t : all_tournaments(n)) {
            if (is_chain(t) && n % 2 == 1 && n >= 3) continue;
            ++exhaustive;
            auto b = primitive_bound(t);
            auto r = oracle_min_extension(t, 3);
            if (n >= 2 && (!b.value || *b.value > 1)) o.fail("tournament n=" + std::to_string(n) + " bound " + opt(b.value));
            if (b.value != r.k) o.fail("tournament n=" + std::to_string(n) + " oracle " + opt(r.k));
        }
    std::mt19937_64 rng(2024);
    std::size_t random = 0;
    for (std::size_t n : {6, 7})
        for (std::size_t i = 0; i < 100; ++i) {
            auto t = random_tournament(n, rng);
            auto b = primitive_bound(t);
            ++random;
            std::size_t want_max = is_chain(t) && n % 2 == 1 ? 2 : 1;
            if (!b.value || *b.value > want_max) o.fail("random tournament n=" + std::to_string(n) + " bound " + opt(b.value));
            if (is_chain(t) && n % 2 == 1 && b.value != 2u) o.fail("random odd chain not 2");
            if (b.witness) o.absorb("random tournament", properties::witness(t, *b.witness, "witness"));
        }
    o.detail = "L3/L5/L7/L9 -> 2, " + std::to_string(exhaustive) + " exhaustive and " + std::to_string(random) +
               " random tournaments -> at most 1";
    return o;
}

Outcome boundary_pair() {
    Outcome o;
    auto check = [&](const std::string& name, const TwoStructure& s, std::size_t want, bool saturated) {
        auto b = primitive_bound(s);
        auto r = oracle_min_extension(s, 3);
        if (b.value != want) o.fail(name + " bound " + opt(b.value));
        if (r.k != want) o.fail(name + " oracle " + opt(r.k));
        // Isolated vertices by definition: same color to all others both ways.
        auto m = brute::of(s);
        std::map<int, int> isolated;
        for (Vertex v = 0; v < s.size(); ++v) {
            int c = m.at(v, v == 0 ? 1 : 0);
            bool ok = true;
            for (Vertex u = 0; u < s.size(); ++u)
                if (u != v && (m.at(v, u) != c || m.at(u, v) != c)) ok = false;
            if (ok) ++isolated[c];
        }
        auto profile = completeness_profile(s);
        bool hits = false;
        for (auto [c, k] : isolated) hits |= static_cast<std::size_t>(k) == profile.c_value;
        if (profile.c_value != 2) o.fail(name + " completeness " + std::to_string(profile.c_value));
        if (hits != saturated) o.fail(name + " isolated-count condition mismatch");
    };
    check("2K2", fixtures::two_k2(), 1, false);
    check("P3+2K1", fixtures::p3_two_isolated(), 2, true);
    o.detail = "2K2 -> 1, P3 plus two isolated -> 2, oracle confirmed";
    return o;
}

Outcome witness_validity() {
    Outcome o;
    std::size_t witnesses = 0;
    auto take = [&](const TwoStructure& s, const std::string& what, const std::function<Extension()>& make) {
        try {
            Extension e = make();
            ++witnesses;
            o.absorb(what, properties::witness(s, e, what));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::PreconditionFailed && e.kind() != ErrorKind::NotReversible &&
                e.kind() != ErrorKind::TooFewColors && e.kind() != ErrorKind::PowerMismatch &&
                e.kind() != ErrorKind::NotEComplete && e.kind() != ErrorKind::NotPrimitive &&
                e.kind() != ErrorKind::NotComplete)
                o.fail(what + ": " + e.what());
        }
    };
    std::vector<TwoStructure> cases;
    for (const auto& f : fixtures::all()) cases.push_back(f.s);
    cases.push_back(fixtures::cliques({4, 4}));
    cases.push_back(fixtures::cliques({5, 2}));
    std::mt19937_64 rng(77);
    for (std::size_t i = 0; i < 300; ++i) cases.push_back(random_structure({2 + i % 6, 1 + i % 4, i % 5 != 0}, rng));
    for (const auto& s : cases) {
        auto b = primitive_bound(s);
        if (b.witness) {
            ++witnesses;
            o.absorb("bound", properties::witness(s, *b.witness, "bound"));
            if (b.witness->added() != b.value) o.fail("bound witness size differs from the value");
        }
        if (b.sumner_witness && !brute::is_primitive(brute::of(b.sumner_witness->tau)))
            o.fail("graph-bound witness is not primitive");
        take(s, "linear-top", [&] { return extend_asym_linear_top(s); });
        take(s, "inclusive", [&] { return extend_via_inclusive(s); });
        take(s, "small-c", [&] { return extend_small_c(s); });
        take(s, "log", [&] { return extend_log(s); });
        take(s, "tournament", [&] { return extend_tournament(s); });
        if (s.is_reversible() && s.color_count() >= 2) {
            auto profile = completeness_profile(s);
            if (auto k = exact_log(s.color_count(), profile.c_value))
                take(s, "power", [&] { return extend_power_case(s, *k); });
            auto f = maximal_families(s, clan_tree(s));
            // Only the clan plus the new vertices is promised primitive.
            for (const auto& c : f.complete) {
                Extension e = primitivize_complete_clan(s, c, s.color(c[0], c[1]));
                ++witnesses;
                auto part = c.unite(VertexSet::range(s.size(), e.tau.size()));
                if (!brute::is_primitive(brute::of(substructure(e.tau, part).structure)))
                    o.fail("complete-clan: clan plus new vertices is not primitive");
                if (!brute::faithful(brute::of(s), brute::of(e.tau)).ok()) o.fail("complete-clan: not faithful");
            }
            if (is_primitive(s) && s.size() <= 6)
                for (const auto& e : one_extensions_of_primitive(s).extensions) {
                    ++witnesses;
                    o.absorb("one-extension", properties::witness(s, e, "one-extension"));
                }
        }
    }
    o.detail = std::to_string(witnesses) + " witnesses over " + std::to_string(cases.size()) + " structures";
    return o;
}

Outcome structural_suite() {
    Outcome o;
    std::vector<std::pair<std::string, TwoStructure>> cases;
    for (const auto& f : fixtures::all()) cases.emplace_back(f.name, f.s);
    std::mt19937_64 rng(31337);
    for (std::size_t i = 0; i < 200; ++i) {
        RandomSpec spec{2 + static_cast<std::size_t>(i % 5), 1 + static_cast<std::size_t>(i % 4), i % 3 != 0};
        auto s = random_structure(spec, rng);
        if (s.color_count() > 4 || s.size() > 6) o.fail("random structure outside the size limits");
        cases.emplace_back("random #" + std::to_string(i), s);
    }
    for (const auto& [name, s] : cases) {
        o.absorb(name, properties::all_structural(s));
        o.absorb(name, properties::nonreversible(s));
    }
    o.detail = std::to_string(cases.size()) + " structures";
    return o;
}

Outcome alternating_chain() {
    Outcome o;
    for (std::size_t n : {3, 4, 5, 6}) {
        auto base = linear_order(n + 1);
        for (int last : {0, 1}) {
            auto tau = fixtures::lin_alternating(n, last);
            std::string where = "n=" + std::to_string(n) + (last == 0 ? " third color" : " (0,1) color");
            if (!brute::is_primitive(brute::of(tau))) o.fail(where + ": not primitive");
            if (!is_primitive(tau)) o.fail(where + ": library says not primitive");
            auto report = is_faithful(base, as_extension(base, tau));
            auto def = brute::faithful(brute::of(base), brute::of(tau));
            if (last == 0 && (report.bijective || !report.star_compatible || def.e1))
                o.fail(where + ": expected only the bijectivity condition to fail");
            if (last == 1 && (!report.bijective || report.star_compatible || def.e2))
                o.fail(where + ": expected only the star condition to fail");
        }
    }
    o.detail = "n = 3..6, both variants";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> all = {
        {1, "oracle equivalence", oracle_equivalence},
        {2, "one-extension formula", one_extension_formula_check},
        {3, "tournament characterization", tournaments},
        {4, "power boundary pair", boundary_pair},
        {5, "witness validity", witness_validity},
        {6, "structural properties", structural_suite},
        {7, "odd chain fixture faithfulness", alternating_chain},
    };
    int failed = 0;
    for (const auto& c : all) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %d %s: %s (%s; %.1fs)\n", c.id, c.name, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
        for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
        if (!o.pass) ++failed;
    }
    return failed ? 1 : 0;
}
