// Command-line front end: decompose, families, bound, extend, oracle,
// verify and generate.
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "twostruct/bound.hpp"
#include "twostruct/clans.hpp"
#include "twostruct/decomposition.hpp"
#include "twostruct/extensions.hpp"
#include "twostruct/generate.hpp"
#include "twostruct/io.hpp"

using namespace twostruct;

namespace {

constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Input {
    std::string path;
    std::string format;

    Document load() const {
        std::optional<DocumentFormat> f;
        if (!format.empty()) {
            f = format_from_name(format);
            if (!f) throw CLI::ValidationError("--format", "unknown format '" + format + "'");
        }
        return read_document(path, f);
    }
};

VertexSet parse_set(const std::string& text) {
    std::vector<Vertex> ids;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',' || ch == ' ' || ch == '{' || ch == '}') {
            if (!cur.empty()) ids.push_back(std::stoul(cur));
            cur.clear();
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            cur += ch;
        } else {
            throw CLI::ValidationError("vertex set", "bad vertex list '" + text + "'");
        }
    }
    return VertexSet(std::move(ids));
}

Extension run_extend(const TwoStructure& s, const std::string& method, const std::string& clan,
                     const std::string& color, std::size_t k) {
    if (method == "auto") {
        BoundResult b = primitive_bound(s);
        if (b.witness) return *b.witness;
        if (b.sumner_witness) return *b.sumner_witness;
        throw Error(ErrorKind::PreconditionFailed, "no faithful primitive extension exists");
    }
    if (method == "small-c") return extend_small_c(s);
    if (method == "log") return extend_log(s);
    if (method == "power") return extend_power_case(s, k);
    if (method == "tournament") return extend_tournament(s);
    if (method == "inclusive") return extend_via_inclusive(s);
    if (method == "linear-top") return extend_asym_linear_top(s);
    if (method == "sumner") return sumner_extension(s);
    if (method == "complete-clan") {
        auto c = s.catalog().find(color);
        if (!c) throw Error(ErrorKind::UnknownColor, "no color named '" + color + "'");
        return primitivize_complete_clan(s, parse_set(clan), *c);
    }
    throw CLI::ValidationError("--method", "unknown method '" + method + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clan decomposition and primitive extensions of finite 2-structures"};
    app.require_subcommand(1);

    Input in;
    bool json_out = false;
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("file", in.path, "input structure (.2s, .graph, .trn, .json)")->required();
        sub->add_option("--format", in.format, "force the input format: 2s, graph, trn, json");
    };

    auto* decompose = app.add_subcommand("decompose", "print the clan tree");
    add_input(decompose);
    decompose->add_flag("--json", json_out, "JSON instead of indented text");

    auto* families = app.add_subcommand("families", "maximal families, completeness and isolated vertices");
    add_input(families);

    auto* bound = app.add_subcommand("bound", "primitive bound with witness");
    add_input(bound);

    auto* extend = app.add_subcommand("extend", "write a primitive extension in .2s form");
    add_input(extend);
    std::string method = "auto";
    std::string clan;
    std::string color;
    std::size_t power_k = 1;
    extend->add_option("--method", method,
                       "auto, small-c, log, power, tournament, inclusive, linear-top, sumner, complete-clan");
    extend->add_option("--clan", clan, "vertex list for complete-clan, e.g. 0,1");
    extend->add_option("--color", color, "color name for complete-clan");
    extend->add_option("--k", power_k, "exponent for the power method");

    auto* oracle = app.add_subcommand("oracle", "brute-force minimum extension");
    add_input(oracle);
    std::size_t kmax = 3;
    std::uint64_t budget = default_budget();
    unsigned threads = 0;
    oracle->add_option("--kmax", kmax, "largest number of new vertices to try");
    oracle->add_option("--budget", budget, "candidate limit per level");
    oracle->add_option("--threads", threads, "worker threads (0: all cores)");

    auto* verify = app.add_subcommand("verify", "check an extension against its base");
    add_input(verify);
    std::string ext_path;
    std::vector<std::string> family;
    verify->add_option("extension", ext_path, "extension file with an 'original' line")->required();
    verify->add_option("--family", family, "vertex lists handed to the clan-killing check");

    auto* generate = app.add_subcommand("generate", "random structure in .2s form");
    std::uint64_t seed = 1;
    std::size_t gen_n = 5;
    std::size_t gen_colors = 3;
    bool nonrev = false;
    bool tournament = false;
    generate->add_option("--seed", seed, "random seed");
    generate->add_option("--n", gen_n, "vertex count")->check(CLI::PositiveNumber);
    generate->add_option("--colors", gen_colors, "upper bound on the color count")->check(CLI::PositiveNumber);
    generate->add_flag("--nonreversible", nonrev, "draw each ordered pair independently");
    generate->add_flag("--tournament", tournament, "random tournament");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (generate->parsed()) {
            std::mt19937_64 rng(seed);
            TwoStructure s = tournament ? random_tournament(gen_n, rng)
                                        : random_structure(RandomSpec{gen_n, gen_colors, !nonrev}, rng);
            std::cout << write_2s(s);
            return 0;
        }
        Document doc = in.load();
        const TwoStructure& s = doc.structure;
        if (decompose->parsed()) {
            ClanTree tree = clan_tree(s);
            if (json_out)
                std::cout << tree_to_json(s, tree).dump(2) << "\n";
            else
                std::cout << tree_to_text(s, tree);
        } else if (families->parsed()) {
            ClanTree tree = clan_tree(s);
            std::cout << families_to_json(s, tree, maximal_families(s, tree)).dump(2) << "\n";
        } else if (bound->parsed()) {
            std::cout << bound_to_json(primitive_bound(s)).dump(2) << "\n";
        } else if (extend->parsed()) {
            std::cout << write_2s(run_extend(s, method, clan, color, power_k));
        } else if (oracle->parsed()) {
            OracleOptions o;
            o.budget = budget;
            o.threads = threads;
            std::cout << oracle_to_json(oracle_min_extension(s, kmax, o)).dump(2) << "\n";
        } else if (verify->parsed()) {
            Document tau = read_document(ext_path);
            Extension ext = as_extension(s, tau.structure);
            if (tau.original && *tau.original != s.size())
                throw Error(ErrorKind::NotAnExtension, "extension declares a different original prefix");
            nlohmann::json j;
            bool primitive = is_primitive(ext.tau);
            auto faithful = is_faithful(s, ext);
            j["primitive"] = primitive;
            j["faithful"] = faithful.faithful();
            j["bijective"] = faithful.bijective;
            j["star_compatible"] = faithful.star_compatible;
            j["violations"] = faithful.violations;
            j["added"] = ext.added();
            if (ext.tau.size() <= kDefaultGuard && s.is_reversible() && s.color_count() >= 2 && ext.added() > 0) {
                std::vector<VertexSet> fam;
                for (const auto& f : family) fam.push_back(parse_set(f));
                auto rep = verify_clan_killing(s, ext, fam);
                j["clan_killing"] = {{"hypotheses_hold", rep.hypotheses_hold},
                                     {"conclusion_holds", rep.conclusion_holds},
                                     {"violations", rep.violations}};
            }
            std::cout << j.dump(2) << "\n";
            return primitive && faithful.faithful() ? 0 : kViolation;
        }
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
