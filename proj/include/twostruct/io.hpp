#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

#include "twostruct/bound.hpp"
#include "twostruct/core.hpp"
#include "twostruct/decomposition.hpp"
#include "twostruct/extensions.hpp"

namespace twostruct {

enum class DocumentFormat { TwoStructureText, GraphEdgeList, TournamentArcList, Json };

struct Document {
    TwoStructure structure;
    std::optional<std::size_t> original;  // set for extensions
};

// By file extension (.2s, .graph, .trn, .json); otherwise by content.
DocumentFormat guess_format(const std::string& path, const std::string& text);
std::optional<DocumentFormat> format_from_name(const std::string& name);

Document parse_document(const std::string& text, DocumentFormat format);
Document read_document(const std::string& path, std::optional<DocumentFormat> format = std::nullopt);

// Text format:
//   2s 1
//   n <N>
//   colors <k>
//   <name> sym | <name> asym <partner> | <name> unpaired   (k lines)
//   original <m>                                           (optional)
//   N rows of N tokens, '.' on the diagonal
// Lines starting with '#' are comments.
Document parse_2s(const std::string& text);
std::string write_2s(const TwoStructure& s, std::optional<std::size_t> original = std::nullopt);
std::string write_2s(const Extension& ext);

// "<n>; u-v u-v ..." with colors edge / nonedge.
TwoStructure parse_graph(const std::string& text);
std::string write_graph(const TwoStructure& s);
// "<n>; u>v u>v ..." listing every arc once, colors fwd / bwd.
TwoStructure parse_tournament(const std::string& text);
std::string write_tournament(const TwoStructure& s);

nlohmann::json structure_to_json(const TwoStructure& s, std::optional<std::size_t> original = std::nullopt);
Document structure_from_json(const nlohmann::json& j);

nlohmann::json tree_to_json(const TwoStructure& s, const ClanTree& tree);
std::string tree_to_text(const TwoStructure& s, const ClanTree& tree);
nlohmann::json families_to_json(const TwoStructure& s, const ClanTree& tree, const FamiliesReport& families);
nlohmann::json bound_to_json(const BoundResult& r);
nlohmann::json oracle_to_json(const OracleResult& r);
nlohmann::json set_to_json(const VertexSet& w);

std::string write_document(const Document& doc, DocumentFormat format);

}  // namespace twostruct
