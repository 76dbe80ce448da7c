#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qosr/multicast/trees.hpp"
#include "qosr/netgen/netgen.hpp"
#include "qosr/unicast/paths.hpp"

namespace qosr::cli {

// "cost=6 depth=2 path=r-u-v", plus " mods=c,c,c" when any hop used a
// modality.
std::string format_path(const Network& n, const PathSolution& p);

struct ParsedPath {
  MultiCost cost;
  std::size_t depth = 0;
  std::vector<std::string> nodes;
  std::vector<std::string> modalities;
};

// Inverse of format_path; throws std::invalid_argument on malformed lines.
ParsedPath parse_path_line(std::string_view line);

// Indented connector list, one line per connector:
//   "n0 -> n1 [10,1]", children indented by two spaces, 0-connectors as
//   "n9 -> . [2,3]".
std::vector<std::string> format_tree_connectors(const Network& n, const TreeSolution& t);

// "cost=2,16 depth=4 tree=(n0 (n1 ...))".
std::string format_tree(const TreeSolution& t);

struct ParsedTree {
  MultiCost cost;
  std::size_t depth = 0;
  std::string encoding;
};

ParsedTree parse_tree_line(std::string_view line);

// Costs in JSON: integers as numbers, "inf" and fractions as strings.
nlohmann::json cost_json(const MultiCost& c);
MultiCost cost_from_json(const nlohmann::json& j);

nlohmann::json path_json(const Network& n, const PathSolution& p);
nlohmann::json tree_json(const Network& n, const TreeSolution& t);
nlohmann::json stats_json(const GraphStats& s);

// Aligned two-line table with the columns of the statistics report.
std::string stats_table(const GraphStats& s);

}  // namespace qosr::cli
