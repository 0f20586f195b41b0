#include "twostruct/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace twostruct {

namespace {

struct Token {
    std::string text;
    std::size_t line;
    std::size_t column;
};

// Non-blank, non-comment lines split into whitespace separated tokens.
std::vector<std::vector<Token>> tokenize_lines(const std::string& text) {
    std::vector<std::vector<Token>> out;
    std::size_t line = 1;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        std::string_view row(text.data() + pos, end - pos);
        std::vector<Token> toks;
        std::size_t i = 0;
        while (i < row.size()) {
            while (i < row.size() && std::isspace(static_cast<unsigned char>(row[i]))) ++i;
            if (i >= row.size()) break;
            std::size_t j = i;
            while (j < row.size() && !std::isspace(static_cast<unsigned char>(row[j]))) ++j;
            toks.push_back({std::string(row.substr(i, j - i)), line, i + 1});
            i = j;
        }
        if (!toks.empty() && toks.front().text.front() != '#') out.push_back(std::move(toks));
        ++line;
        pos = end + 1;
    }
    return out;
}

std::size_t parse_count(const Token& t, const char* what) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || p != t.text.data() + t.text.size())
        throw ParseError(t.line, t.column, std::string("expected ") + what + ", found '" + t.text + "'");
    return v;
}

class LineCursor {
public:
    explicit LineCursor(const std::string& text) : lines_(tokenize_lines(text)) {}

    bool done() const { return at_ >= lines_.size(); }
    const std::vector<Token>& peek() const { return lines_[at_]; }
    const std::vector<Token>& next(const char* what) {
        if (done()) throw ParseError(last_line(), 1, std::string("unexpected end of input, expected ") + what);
        return lines_[at_++];
    }
    std::size_t last_line() const { return lines_.empty() ? 1 : lines_.back().front().line + 1; }

private:
    std::vector<std::vector<Token>> lines_;
    std::size_t at_ = 0;
};

void expect_size(const std::vector<Token>& line, std::size_t n, const char* what) {
    if (line.size() != n) {
        const Token& t = line.size() > n ? line[n] : line.back();
        throw ParseError(t.line, t.column, std::string("malformed ") + what + " line");
    }
}

const Token& keyword(const std::vector<Token>& line, const char* word) {
    if (line.front().text != word)
        throw ParseError(line.front().line, line.front().column,
                         std::string("expected '") + word + "', found '" + line.front().text + "'");
    return line.front();
}

const char* kind_token(ColorKind k) {
    switch (k) {
        case ColorKind::Symmetric: return "sym";
        case ColorKind::Asymmetric: return "asym";
        case ColorKind::Unpaired: return "unpaired";
    }
    return "?";
}

}  // namespace

Document parse_2s(const std::string& text) {
    LineCursor cur(text);
    {
        const auto& line = cur.next("header");
        expect_size(line, 2, "header");
        keyword(line, "2s");
        if (line[1].text != "1") throw ParseError(line[1].line, line[1].column, "unsupported version '" + line[1].text + "'");
    }
    std::size_t n;
    {
        const auto& line = cur.next("vertex count");
        expect_size(line, 2, "vertex count");
        keyword(line, "n");
        n = parse_count(line[1], "a vertex count");
        if (n == 0) throw ParseError(line[1].line, line[1].column, "vertex count must be positive");
    }
    std::size_t k;
    {
        const auto& line = cur.next("color count");
        expect_size(line, 2, "color count");
        keyword(line, "colors");
        k = parse_count(line[1], "a color count");
    }

    struct Decl {
        std::string name;
        ColorKind kind;
        std::string partner;
        Token where;
    };
    std::vector<Decl> decls;
    std::vector<std::string> order;
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < k; ++i) {
        const auto& line = cur.next("color declaration");
        const Token& name = line[0];
        if (!is_valid_color_name(name.text)) throw ParseError(name.line, name.column, "bad color name '" + name.text + "'");
        if (line.size() < 2) throw ParseError(name.line, name.column, "color declaration needs a kind");
        const Token& kind = line[1];
        Decl d{name.text, ColorKind::Symmetric, name.text, name};
        if (kind.text == "sym") {
            expect_size(line, 2, "color declaration");
        } else if (kind.text == "asym") {
            expect_size(line, 3, "color declaration");
            if (!is_valid_color_name(line[2].text))
                throw ParseError(line[2].line, line[2].column, "bad color name '" + line[2].text + "'");
            d.kind = ColorKind::Asymmetric;
            d.partner = line[2].text;
        } else if (kind.text == "unpaired") {
            expect_size(line, 2, "color declaration");
            d.kind = ColorKind::Unpaired;
        } else {
            throw ParseError(kind.line, kind.column, "unknown color kind '" + kind.text + "'");
        }
        if (index.count(d.name)) throw ParseError(name.line, name.column, "color '" + d.name + "' declared twice");
        index[d.name] = order.size();
        order.push_back(d.name);
        decls.push_back(std::move(d));
    }
    // A partner named only on its pair's line is declared implicitly.
    for (const auto& d : decls) {
        if (d.kind == ColorKind::Asymmetric && !index.count(d.partner)) {
            index[d.partner] = order.size();
            order.push_back(d.partner);
        }
    }
    ColorCatalog catalog;
    for (const auto& name : order) {
        auto it = std::find_if(decls.begin(), decls.end(), [&](const Decl& d) { return d.name == name; });
        if (it != decls.end()) {
            ColorId partner(index[it->partner]);
            catalog.add({name, it->kind, it->kind == ColorKind::Asymmetric ? partner : ColorId(index[name])});
        } else {
            auto from = std::find_if(decls.begin(), decls.end(), [&](const Decl& d) { return d.partner == name; });
            catalog.add({name, ColorKind::Asymmetric, ColorId(index[from->name])});
        }
    }

    std::optional<std::size_t> original;
    if (!cur.done() && cur.peek().front().text == "original") {
        const auto& line = cur.next("original");
        expect_size(line, 2, "original");
        original = parse_count(line[1], "an original vertex count");
        if (*original > n) throw ParseError(line[1].line, line[1].column, "original prefix exceeds the vertex count");
    }

    std::vector<ColorId> matrix(n * n, ColorId(0));
    for (std::size_t u = 0; u < n; ++u) {
        const auto& line = cur.next("matrix row");
        if (line.size() != n)
            throw ParseError(line.front().line, line.front().column,
                             "row " + std::to_string(u) + " has " + std::to_string(line.size()) + " entries, expected " +
                                 std::to_string(n));
        for (std::size_t v = 0; v < n; ++v) {
            const Token& t = line[v];
            if (u == v) {
                if (t.text != ".") throw ParseError(t.line, t.column, "diagonal entries must be '.'");
                continue;
            }
            auto it = index.find(t.text);
            if (it == index.end()) throw ParseError(t.line, t.column, "undeclared color '" + t.text + "'");
            matrix[u * n + v] = ColorId(it->second);
        }
    }
    if (!cur.done()) {
        const Token& t = cur.peek().front();
        throw ParseError(t.line, t.column, "unexpected content after the matrix");
    }
    return Document{TwoStructure::build(n, std::move(catalog), matrix), original};
}

std::string write_2s(const TwoStructure& s, std::optional<std::size_t> original) {
    std::ostringstream out;
    out << "2s 1\n";
    out << "n " << s.size() << "\n";
    out << "colors " << s.color_count() << "\n";
    for (const auto& r : s.catalog().records()) {
        out << r.name << ' ' << kind_token(r.kind);
        if (r.kind == ColorKind::Asymmetric) out << ' ' << s.catalog()[r.partner].name;
        out << "\n";
    }
    if (original) out << "original " << *original << "\n";
    for (Vertex u = 0; u < s.size(); ++u) {
        for (Vertex v = 0; v < s.size(); ++v) {
            if (v) out << ' ';
            out << (u == v ? std::string(".") : s.name(s.color(u, v)));
        }
        out << "\n";
    }
    return out.str();
}

std::string write_2s(const Extension& ext) { return write_2s(ext.tau, ext.original); }

namespace {

struct PairList {
    std::size_t n;
    std::vector<std::pair<Vertex, Vertex>> pairs;
};

PairList parse_pairs(const std::string& text, const char* seps, const char* what) {
    std::vector<Token> toks;
    for (auto& line : tokenize_lines(text))
        for (auto& t : line) toks.push_back(std::move(t));
    if (toks.empty()) throw ParseError(1, 1, std::string("empty ") + what + " file");
    // The count may be glued to the ';' or separated from it.
    Token head = toks.front();
    std::size_t next = 1;
    if (!head.text.empty() && head.text.back() == ';') {
        head.text.pop_back();
    } else {
        if (toks.size() < 2 || toks[1].text != ";")
            throw ParseError(head.line, head.column + head.text.size(), "expected ';' after the vertex count");
        next = 2;
    }
    PairList out{parse_count(head, "a vertex count"), {}};
    if (out.n == 0) throw ParseError(head.line, head.column, "vertex count must be positive");
    std::set<std::pair<Vertex, Vertex>> seen;
    for (std::size_t i = next; i < toks.size(); ++i) {
        const Token& t = toks[i];
        std::size_t cut = t.text.find_first_of(seps);
        if (cut == std::string::npos || cut == 0 || cut + 1 >= t.text.size())
            throw ParseError(t.line, t.column, std::string("expected a pair like 0") + seps[0] + "1, found '" + t.text + "'");
        Token a{t.text.substr(0, cut), t.line, t.column};
        Token b{t.text.substr(cut + 1), t.line, t.column + cut + 1};
        Vertex u = parse_count(a, "a vertex");
        Vertex v = parse_count(b, "a vertex");
        if (u >= out.n || v >= out.n) throw ParseError(t.line, t.column, "vertex out of range in '" + t.text + "'");
        if (u == v) throw ParseError(t.line, t.column, "loop '" + t.text + "'");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) throw ParseError(t.line, t.column, "pair '" + t.text + "' listed twice");
        out.pairs.emplace_back(u, v);
    }
    return out;
}

}  // namespace

TwoStructure parse_graph(const std::string& text) {
    auto p = parse_pairs(text, "-", "graph");
    return from_graph(p.n, p.pairs);
}

TwoStructure parse_tournament(const std::string& text) {
    auto p = parse_pairs(text, ">", "tournament");
    return from_tournament(p.n, p.pairs);
}

std::string write_graph(const TwoStructure& s) {
    for (const auto& r : s.catalog().records())
        if ((r.name != "edge" && r.name != "nonedge") || r.kind == ColorKind::Asymmetric)
            throw Error(ErrorKind::PreconditionFailed, "structure is not a graph with colors edge/nonedge");
    auto edge = s.catalog().find("edge");
    std::ostringstream out;
    out << s.size() << ";";
    for (Vertex u = 0; u < s.size(); ++u)
        for (Vertex v = u + 1; v < s.size(); ++v)
            if (edge && s.color(u, v) == *edge) out << ' ' << u << '-' << v;
    out << "\n";
    return out.str();
}

std::string write_tournament(const TwoStructure& s) {
    auto fwd = s.catalog().find("fwd");
    if (s.color_count() != 2 || !fwd || !s.catalog().find("bwd") || !s.is_reversible() || !s.symmetric_colors().empty())
        throw Error(ErrorKind::PreconditionFailed, "structure is not a tournament with colors fwd/bwd");
    std::ostringstream out;
    out << s.size() << ";";
    for (Vertex u = 0; u < s.size(); ++u)
        for (Vertex v = u + 1; v < s.size(); ++v) {
            if (s.color(u, v) == *fwd)
                out << ' ' << u << '>' << v;
            else
                out << ' ' << v << '>' << u;
        }
    out << "\n";
    return out.str();
}

nlohmann::json set_to_json(const VertexSet& w) { return nlohmann::json(w.ids()); }

nlohmann::json structure_to_json(const TwoStructure& s, std::optional<std::size_t> original) {
    nlohmann::json j;
    j["n"] = s.size();
    j["colors"] = nlohmann::json::array();
    for (const auto& r : s.catalog().records()) {
        nlohmann::json c{{"name", r.name}, {"kind", kind_token(r.kind)}};
        if (r.kind == ColorKind::Asymmetric) c["partner"] = s.catalog()[r.partner].name;
        j["colors"].push_back(c);
    }
    if (original) j["original"] = *original;
    j["matrix"] = nlohmann::json::array();
    for (Vertex u = 0; u < s.size(); ++u) {
        nlohmann::json row = nlohmann::json::array();
        for (Vertex v = 0; v < s.size(); ++v) row.push_back(u == v ? nlohmann::json(nullptr) : nlohmann::json(s.name(s.color(u, v))));
        j["matrix"].push_back(row);
    }
    return j;
}

Document structure_from_json(const nlohmann::json& j) {
    try {
        const std::size_t n = j.at("n").get<std::size_t>();
        ColorCatalog catalog;
        std::map<std::string, std::size_t> index;
        const auto& colors = j.at("colors");
        for (std::size_t i = 0; i < colors.size(); ++i) index[colors[i].at("name").get<std::string>()] = i;
        for (const auto& c : colors) {
            std::string name = c.at("name").get<std::string>();
            std::string kind = c.at("kind").get<std::string>();
            if (kind == "sym") {
                catalog.add({name, ColorKind::Symmetric, ColorId(index[name])});
            } else if (kind == "asym") {
                std::string partner = c.at("partner").get<std::string>();
                if (!index.count(partner)) throw ParseError(1, 1, "partner '" + partner + "' is not declared");
                catalog.add({name, ColorKind::Asymmetric, ColorId(index[partner])});
            } else if (kind == "unpaired") {
                catalog.add({name, ColorKind::Unpaired, ColorId(index[name])});
            } else {
                throw ParseError(1, 1, "unknown color kind '" + kind + "'");
            }
        }
        const auto& rows = j.at("matrix");
        if (rows.size() != n) throw ParseError(1, 1, "matrix has the wrong number of rows");
        std::vector<ColorId> matrix(n * n, ColorId(0));
        for (std::size_t u = 0; u < n; ++u) {
            if (rows[u].size() != n) throw ParseError(1, 1, "matrix row " + std::to_string(u) + " has the wrong length");
            for (std::size_t v = 0; v < n; ++v) {
                if (u == v) continue;
                std::string name = rows[u][v].get<std::string>();
                if (!index.count(name)) throw ParseError(1, 1, "undeclared color '" + name + "'");
                matrix[u * n + v] = ColorId(index[name]);
            }
        }
        Document doc{TwoStructure::build(n, std::move(catalog), matrix), std::nullopt};
        if (j.contains("original")) doc.original = j.at("original").get<std::size_t>();
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, 1, std::string("malformed structure JSON: ") + e.what());
    }
}

nlohmann::json tree_to_json(const TwoStructure& s, const ClanTree& tree) {
    nlohmann::json label{{"kind", to_string(tree.label.kind)}};
    if (tree.label.kind == NodeKind::Complete || tree.label.kind == NodeKind::Linear)
        label["color"] = s.name(tree.label.color);
    nlohmann::json j{{"vertices", set_to_json(tree.vertices)}, {"label", label}, {"children", nlohmann::json::array()}};
    for (const auto& c : tree.children) j["children"].push_back(tree_to_json(s, c));
    return j;
}

namespace {

void tree_text(const TwoStructure& s, const ClanTree& node, std::size_t depth, std::ostringstream& out) {
    out << std::string(2 * depth, ' ') << to_string(node.label.kind);
    if (node.label.kind == NodeKind::Complete || node.label.kind == NodeKind::Linear)
        out << '(' << s.name(node.label.color) << ')';
    out << ' ' << node.vertices.to_string() << "\n";
    for (const auto& c : node.children) tree_text(s, c, depth + 1, out);
}

nlohmann::json family_json(const std::vector<VertexSet>& f) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : f) out.push_back(set_to_json(x));
    return out;
}

}  // namespace

std::string tree_to_text(const TwoStructure& s, const ClanTree& tree) {
    std::ostringstream out;
    tree_text(s, tree, 0, out);
    return out.str();
}

nlohmann::json families_to_json(const TwoStructure& s, const ClanTree& tree, const FamiliesReport& f) {
    nlohmann::json j;
    j["complete"] = family_json(f.complete);
    j["linear"] = family_json(f.linear);
    j["primitive"] = family_json(f.primitive);
    j["classes"] = family_json(f.classes);
    j["upsilon"] = set_to_json(f.upsilon);
    j["upsilon_down"] = set_to_json(f.upsilon_down);
    j["inclusive"] = family_json(s.size() > kDefaultGuard ? inclusive_clans_from_tree(s, tree, f) : inclusive_clans(s));
    if (s.is_reversible()) {
        auto p = completeness_profile(s, f);
        j["c"] = p.c_value;
        nlohmann::json iso = nlohmann::json::object();
        for (const auto& [e, w] : p.isolated) iso[s.name(e)] = set_to_json(w);
        j["isolated"] = iso;
    } else {
        j["c"] = nullptr;
        j["isolated"] = nullptr;
    }
    return j;
}

nlohmann::json bound_to_json(const BoundResult& r) {
    nlohmann::json j;
    j["p"] = r.value ? nlohmann::json(*r.value) : nlohmann::json(nullptr);
    j["case"] = r.case_tag;
    j["lower"] = r.lower;
    j["witness"] = r.witness ? nlohmann::json(write_2s(*r.witness)) : nlohmann::json(nullptr);
    if (r.sumner) j["sumner"] = *r.sumner;
    if (r.sumner_witness) j["sumner_witness"] = write_2s(*r.sumner_witness);
    return j;
}

nlohmann::json oracle_to_json(const OracleResult& r) {
    nlohmann::json j;
    j["k"] = r.k ? nlohmann::json(*r.k) : nlohmann::json(nullptr);
    j["k_max"] = r.k_max;
    j["witness"] = r.witness ? nlohmann::json(write_2s(*r.witness)) : nlohmann::json(nullptr);
    j["evaluated"] = r.evaluated;
    return j;
}

std::optional<DocumentFormat> format_from_name(const std::string& name) {
    if (name == "2s") return DocumentFormat::TwoStructureText;
    if (name == "graph") return DocumentFormat::GraphEdgeList;
    if (name == "trn" || name == "tournament") return DocumentFormat::TournamentArcList;
    if (name == "json") return DocumentFormat::Json;
    return std::nullopt;
}

DocumentFormat guess_format(const std::string& path, const std::string& text) {
    auto dot = path.rfind('.');
    if (dot != std::string::npos)
        if (auto f = format_from_name(path.substr(dot + 1))) return *f;
    for (const auto& line : tokenize_lines(text)) {
        const std::string& first = line.front().text;
        if (first == "2s") return DocumentFormat::TwoStructureText;
        if (first.front() == '{') return DocumentFormat::Json;
        for (const auto& t : line)
            if (t.text.find('>') != std::string::npos) return DocumentFormat::TournamentArcList;
        return DocumentFormat::GraphEdgeList;
    }
    return DocumentFormat::TwoStructureText;
}

Document parse_document(const std::string& text, DocumentFormat format) {
    switch (format) {
        case DocumentFormat::TwoStructureText: return parse_2s(text);
        case DocumentFormat::GraphEdgeList: return Document{parse_graph(text), std::nullopt};
        case DocumentFormat::TournamentArcList: return Document{parse_tournament(text), std::nullopt};
        case DocumentFormat::Json: {
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(text);
            } catch (const nlohmann::json::parse_error& e) {
                throw ParseError(1, e.byte, e.what());
            }
            return structure_from_json(j);
        }
    }
    throw ParseError(1, 1, "unknown format");
}

Document read_document(const std::string& path, std::optional<DocumentFormat> format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    return parse_document(text, format ? *format : guess_format(path, text));
}

std::string write_document(const Document& doc, DocumentFormat format) {
    switch (format) {
        case DocumentFormat::TwoStructureText: return write_2s(doc.structure, doc.original);
        case DocumentFormat::GraphEdgeList: return write_graph(doc.structure);
        case DocumentFormat::TournamentArcList: return write_tournament(doc.structure);
        case DocumentFormat::Json: return structure_to_json(doc.structure, doc.original).dump(2) + "\n";
    }
    return {};
}

}  // namespace twostruct
