#include "twostruct/bound.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <thread>

#include "twostruct/clans.hpp"
#include "twostruct/decomposition.hpp"

namespace twostruct {

std::uint64_t default_budget() {
    if (const char* env = std::getenv("TWOSTRUCT_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return kDefaultBudget;
}

namespace {

// Saturating power used for budget checks.
std::uint64_t power(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
        out *= base;
    }
    return out;
}

struct Slot {
    Vertex u;
    Vertex v;  // the new vertex
};

// One level of the search: every faithful k-extension, as a choice per new
// unordered pair among the ordered color pairs met in sigma.
class Level {
public:
    Level(const TwoStructure& sigma, std::size_t k) : sigma_(sigma), n_(sigma.size()), k_(k), total_(n_ + k) {
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v = 0; v < n_; ++v)
                if (u != v) combos_.emplace_back(sigma.raw(u, v), sigma.raw(v, u));
        std::sort(combos_.begin(), combos_.end());
        combos_.erase(std::unique(combos_.begin(), combos_.end()), combos_.end());
        for (std::size_t j = 0; j < k; ++j)
            for (Vertex u = 0; u < n_ + j; ++u) slots_.push_back({u, n_ + j});
        base_.assign(total_ * total_, kNoColor);
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v = 0; v < n_; ++v)
                if (u != v) base_[u * total_ + v] = sigma.raw(u, v);
    }

    std::size_t slots() const { return slots_.size(); }
    std::size_t choices() const { return combos_.size(); }

    // Scans candidates whose first `prefix_len` digits spell `prefix`.
    // Returns the first primitive digit vector in lex order.
    std::optional<std::vector<std::size_t>> scan(std::uint64_t prefix, std::size_t prefix_len,
                                                 std::atomic<std::uint64_t>& evaluated,
                                                 const std::atomic<std::uint64_t>& best_prefix) const {
        const std::size_t q = combos_.size();
        const std::size_t s = slots_.size();
        std::vector<std::size_t> d(s, 0);
        std::uint64_t p = prefix;
        for (std::size_t i = prefix_len; i-- > 0;) {
            d[i] = p % q;
            p /= q;
        }
        std::vector<std::uint16_t> m = base_;
        for (std::size_t i = 0; i < s; ++i) apply(m, i, d[i]);
        std::uint64_t local = 0;
        while (true) {
            ++local;
            if ((local & 0xFFF) == 0 && best_prefix.load() < prefix) break;
            if (detail::primitive(detail::MatrixView{total_, m.data()})) {
                evaluated += local;
                return d;
            }
            std::size_t i = s;
            bool more = false;
            while (i > prefix_len) {
                --i;
                if (d[i] + 1 < q) {
                    ++d[i];
                    apply(m, i, d[i]);
                    more = true;
                    break;
                }
                d[i] = 0;
                apply(m, i, 0);
            }
            if (!more) break;
        }
        evaluated += local;
        return std::nullopt;
    }

    Extension witness(const std::vector<std::size_t>& d) const {
        std::vector<std::uint16_t> m = base_;
        for (std::size_t i = 0; i < d.size(); ++i) apply(m, i, d[i]);
        std::vector<ColorId> colors(m.size(), ColorId(0));
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != kNoColor) colors[i] = ColorId(m[i]);
        Extension ext = identity_extension(sigma_);
        ext.tau = TwoStructure::build(total_, sigma_.catalog(), colors);
        return ext;
    }

private:
    void apply(std::vector<std::uint16_t>& m, std::size_t slot, std::size_t choice) const {
        const Slot& sl = slots_[slot];
        m[sl.u * total_ + sl.v] = combos_[choice].first;
        m[sl.v * total_ + sl.u] = combos_[choice].second;
    }

    const TwoStructure& sigma_;
    std::size_t n_;
    std::size_t k_;
    std::size_t total_;
    std::vector<std::pair<std::uint16_t, std::uint16_t>> combos_;
    std::vector<Slot> slots_;
    std::vector<std::uint16_t> base_;
};

std::optional<Extension> search_level(const TwoStructure& sigma, std::size_t k, unsigned threads,
                                      std::uint64_t& evaluated_total) {
    Level level(sigma, k);
    const std::size_t q = level.choices();
    const std::size_t s = level.slots();
    if (q == 0) return std::nullopt;
    std::size_t prefix_len = 0;
    std::uint64_t prefixes = 1;
    while (prefix_len < s && prefixes < 4ull * threads && prefixes * q <= (1u << 16)) {
        prefixes *= q;
        ++prefix_len;
    }
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
    std::atomic<std::uint64_t> evaluated{0};
    std::mutex mu;
    std::optional<std::vector<std::size_t>> found;
    auto worker = [&] {
        while (true) {
            std::uint64_t p = next.fetch_add(1);
            if (p >= prefixes || p > best.load()) return;
            auto hit = level.scan(p, prefix_len, evaluated, best);
            if (!hit) continue;
            std::lock_guard<std::mutex> lock(mu);
            if (p < best.load()) {
                best = p;
                found = std::move(hit);
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    evaluated_total += evaluated.load();
    if (!found) return std::nullopt;
    return level.witness(*found);
}

}  // namespace

OracleResult oracle_min_extension(const TwoStructure& sigma, std::size_t k_max, const OracleOptions& options) {
    OracleResult out;
    out.k_max = k_max;
    const std::size_t n = sigma.size();
    const std::uint64_t eps = sigma.color_count();
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t k = 0; k <= k_max; ++k) {
        if (k == 0) {
            ++out.evaluated;
            if (is_primitive(sigma)) {
                out.k = 0;
                out.witness = identity_extension(sigma);
                return out;
            }
            continue;
        }
        std::uint64_t exponent = k * n + k * (k - 1) / 2;
        if (!sigma.is_reversible()) exponent *= 2;
        std::uint64_t candidates = power(eps, exponent);
        if (candidates > options.budget)
            throw Error(ErrorKind::BudgetExceeded, std::to_string(k) + " new vertices need " + std::to_string(eps) + "^" +
                                                       std::to_string(exponent) + " candidates, over the budget of " +
                                                       std::to_string(options.budget));
        if (auto w = search_level(sigma, k, threads, out.evaluated)) {
            out.k = k;
            out.witness = std::move(w);
            return out;
        }
    }
    return out;
}

OracleResult oracle_min_extension(const TwoStructure& sigma, std::size_t k_max, std::uint64_t budget) {
    OracleOptions o;
    o.budget = budget;
    return oracle_min_extension(sigma, k_max, o);
}

std::size_t count_primitive_1extensions(const TwoStructure& sigma, std::uint64_t budget) {
    if (!sigma.is_reversible()) throw Error(ErrorKind::NotReversible, "counting needs a reversible structure");
    const std::size_t n = sigma.size();
    const std::size_t eps = sigma.color_count();
    if (power(eps, n) > budget) throw Error(ErrorKind::BudgetExceeded, "too many one-vertex colorings");
    const std::size_t total = n + 1;
    std::vector<std::uint16_t> m(total * total, kNoColor);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v) m[u * total + v] = sigma.raw(u, v);
    std::vector<std::size_t> d(n, 0);
    std::size_t count = 0;
    auto apply = [&](Vertex u) {
        ColorId c(d[u]);
        m[u * total + n] = c.index;
        m[n * total + u] = sigma.star_of(c).index;
    };
    for (Vertex u = 0; u < n; ++u) apply(u);
    if (eps == 0) return 0;
    while (true) {
        if (detail::primitive(detail::MatrixView{total, m.data()})) ++count;
        std::size_t i = n;
        bool more = false;
        while (i > 0) {
            --i;
            if (d[i] + 1 < eps) {
                ++d[i];
                apply(i);
                more = true;
                break;
            }
            d[i] = 0;
            apply(i);
        }
        if (!more) break;
    }
    return count;
}

// ---------------------------------------------------------------------------

namespace {

BoundResult reversible_bound(const TwoStructure& sigma) {
    BoundResult r;
    const std::size_t eps = sigma.color_count();
    if (is_primitive(sigma)) {
        r.value = 0;
        r.case_tag = "Primitive0";
        r.witness = identity_extension(sigma);
        return r;
    }
    if (eps == 0) {
        r.case_tag = "UndefinedFaithful";
        return r;
    }
    if (eps == 1) {
        r.case_tag = "UndefinedFaithful";
        r.sumner = ceil_log(2, sigma.size() + 1);
        r.sumner_witness = sumner_extension(sigma);
        return r;
    }
    ClanTree tree = clan_tree(sigma);
    auto profile = completeness_profile(sigma, maximal_families(sigma, tree));
    const std::size_t c = profile.c_value;
    r.lower = ceil_log(eps, c);
    const std::size_t sym = sigma.symmetric_colors().size();

    if (eps == 2 && sym == 0) {
        r.witness = extend_tournament(sigma);
        r.value = r.witness->added();
        r.case_tag = "T4bound";
        return r;
    }
    if (c == 1) {
        r.witness = extend_small_c(sigma);
        r.value = 1;
        r.case_tag = "T2bound-2";
        return r;
    }
    if (c < eps) {
        r.witness = extend_small_c(sigma);
        r.value = 1;
        r.case_tag = "T2bound-1";
        return r;
    }
    auto k = exact_log(eps, c);
    if (!k) {
        r.witness = extend_log(sigma);
        r.value = r.witness->added();
        r.case_tag = "C1bound-nonpower";
        return r;
    }
    bool blocked = std::any_of(profile.isolated.begin(), profile.isolated.end(),
                               [&](const auto& kv) { return kv.second.size() == c; });
    if (blocked) {
        r.witness = extend_log(sigma);
        r.value = *k + 1;
        r.case_tag = "T3Abound-k+1";
    } else {
        r.witness = extend_power_case(sigma, *k);
        r.value = *k;
        r.case_tag = "T3Abound-k";
    }
    if (r.witness->added() != *r.value)
        throw Error(ErrorKind::InternalProofViolation, "witness size disagrees with the bound");
    return r;
}

}  // namespace

BoundResult primitive_bound(const TwoStructure& sigma) {
    if (sigma.is_reversible()) return reversible_bound(sigma);
    TwoStructure mu = meet(sigma, star(sigma)).structure;
    BoundResult inner = reversible_bound(mu);
    BoundResult r = inner;
    r.case_tag = "NonrevReduction+" + inner.case_tag;
    if (inner.witness) r.witness = lift_nonreversible(sigma, *inner.witness);
    r.sumner_witness.reset();
    r.sumner.reset();
    return r;
}

}  // namespace twostruct
