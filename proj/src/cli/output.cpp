#include "qosr/cli/output.hpp"

#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qosr::cli {
namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// Splits "k1=v1 k2=v2 ..." where the last field may contain spaces.
std::vector<std::pair<std::string, std::string>> fields(std::string_view line, std::string_view last) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    if (i >= line.size()) break;
    auto eq = line.find('=', i);
    if (eq == std::string_view::npos) throw std::invalid_argument("malformed field in '" + std::string(line) + "'");
    std::string key(line.substr(i, eq - i));
    std::size_t end = key == last ? line.size() : line.find(' ', eq);
    if (end == std::string_view::npos) end = line.size();
    out.emplace_back(key, std::string(line.substr(eq + 1, end - eq - 1)));
    i = end;
  }
  return out;
}

std::size_t parse_size(const std::string& s) {
  std::size_t pos = 0;
  unsigned long v = std::stoul(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad count '" + s + "'");
  return v;
}

}  // namespace

std::string format_path(const Network& n, const PathSolution& p) {
  std::string out = "cost=" + p.cost.to_string() + " depth=" + std::to_string(p.depth()) + " path=";
  for (std::size_t i = 0; i < p.nodes.size(); ++i) out += (i ? "-" : "") + n.name(p.nodes[i]);
  bool any = false;
  for (const auto& m : p.modalities_used) any = any || !m.empty();
  if (any) {
    out += " mods=";
    for (std::size_t i = 0; i < p.modalities_used.size(); ++i) {
      out += (i ? "," : "") + (p.modalities_used[i].empty() ? std::string("-") : p.modalities_used[i]);
    }
  }
  return out;
}

ParsedPath parse_path_line(std::string_view line) {
  ParsedPath out;
  bool cost = false, depth = false, path = false;
  for (const auto& [k, v] : fields(line, "")) {
    if (k == "cost") {
      out.cost = MultiCost::parse(v);
      cost = true;
    } else if (k == "depth") {
      out.depth = parse_size(v);
      depth = true;
    } else if (k == "path") {
      out.nodes = split(v, '-');
      path = true;
    } else if (k == "mods") {
      for (auto& m : split(v, ',')) out.modalities.push_back(m == "-" ? "" : m);
    } else {
      throw std::invalid_argument("unknown field '" + k + "'");
    }
  }
  if (!cost || !depth || !path) throw std::invalid_argument("path line needs cost, depth and path");
  if (out.nodes.size() != out.depth + 1) throw std::invalid_argument("depth does not match path length");
  return out;
}

std::vector<std::string> format_tree_connectors(const Network& n, const TreeSolution& t) {
  std::vector<std::string> out;
  std::function<void(NodeIndex, std::size_t)> rec = [&](NodeIndex v, std::size_t indent) {
    auto it = t.chosen.find(v);
    if (it == t.chosen.end()) return;
    const Connector& c = it->second;
    std::string line(indent * 2, ' ');
    line += n.name(v) + " -> ";
    if (c.outputs.empty()) {
      line += ".";
    } else {
      for (std::size_t i = 0; i < c.outputs.size(); ++i) line += (i ? "," : "") + n.name(c.outputs[i]);
    }
    line += " [" + c.cost.to_string() + "]";
    if (!c.modalities.empty()) {
      line += " {";
      for (std::size_t i = 0; i < c.modalities.size(); ++i) line += (i ? "," : "") + c.modalities[i];
      line += "}";
    }
    out.push_back(std::move(line));
    for (NodeIndex child : c.outputs) rec(child, indent + 1);
  };
  rec(t.root, 0);
  return out;
}

std::string format_tree(const TreeSolution& t) {
  return "cost=" + t.cost.to_string() + " depth=" + std::to_string(t.depth()) + " tree=" + t.encoding;
}

ParsedTree parse_tree_line(std::string_view line) {
  ParsedTree out;
  bool cost = false, depth = false, tree = false;
  for (const auto& [k, v] : fields(line, "tree")) {
    if (k == "cost") {
      out.cost = MultiCost::parse(v);
      cost = true;
    } else if (k == "depth") {
      out.depth = parse_size(v);
      depth = true;
    } else if (k == "tree") {
      out.encoding = v;
      tree = true;
    } else {
      throw std::invalid_argument("unknown field '" + k + "'");
    }
  }
  if (!cost || !depth || !tree) throw std::invalid_argument("tree line needs cost, depth and tree");
  if (out.encoding.empty() || out.encoding.front() != '(' || out.encoding.back() != ')') {
    throw std::invalid_argument("malformed tree encoding");
  }
  return out;
}

nlohmann::json cost_json(const MultiCost& c) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Rational& v : c) {
    if (v.is_integer()) {
      arr.push_back(v.num());
    } else {
      arr.push_back(v.to_string());
    }
  }
  return arr;
}

MultiCost cost_from_json(const nlohmann::json& j) {
  std::vector<Rational> vals;
  for (const auto& v : j) vals.push_back(v.is_number_integer() ? Rational{v.get<std::int64_t>()}
                                                                : Rational::parse(v.get<std::string>()));
  return MultiCost(std::span<const Rational>(vals));
}

nlohmann::json path_json(const Network& n, const PathSolution& p) {
  nlohmann::json nodes = nlohmann::json::array();
  for (NodeIndex v : p.nodes) nodes.push_back(n.name(v));
  return {{"cost", cost_json(p.cost)}, {"depth", p.depth()}, {"path", nodes}, {"modalities", p.modalities_used}};
}

nlohmann::json tree_json(const Network& n, const TreeSolution& t) {
  nlohmann::json connectors = nlohmann::json::array();
  for (const auto& [node, c] : t.chosen) {
    nlohmann::json outs = nlohmann::json::array();
    for (NodeIndex o : c.outputs) outs.push_back(n.name(o));
    connectors.push_back(
        {{"input", n.name(node)}, {"outputs", outs}, {"cost", cost_json(c.cost)}, {"modalities", c.modalities}});
  }
  return {{"cost", cost_json(t.cost)}, {"depth", t.depth()}, {"tree", t.encoding}, {"connectors", connectors}};
}

nlohmann::json stats_json(const GraphStats& s) {
  return {{"nodes", s.nodes},
          {"edges", s.edges},
          {"clustering", s.clustering},
          {"avg_shortest_path", s.avg_shortest_path},
          {"min_degree", s.min_degree},
          {"max_degree", s.max_degree},
          {"avg_degree", s.avg_degree},
          {"diameter", s.diameter},
          {"connected", s.connected},
          {"component_size", s.component_size}};
}

std::string stats_table(const GraphStats& s) {
  char row[256];
  std::snprintf(row, sizeof row, "%-6s %-6s %-10s %-8s %-8s %-8s %-8s %-8s\n", "Nodes", "Edges", "Clustering",
                "AvgSP", "MinDeg", "MaxDeg", "AvgDeg", "Diameter");
  std::string out = row;
  std::snprintf(row, sizeof row, "%-6zu %-6zu %-10.2f %-8.2f %-8zu %-8zu %-8.2f %-8zu\n", s.nodes, s.edges,
                s.clustering, s.avg_shortest_path, s.min_degree, s.max_degree, s.avg_degree, s.diameter);
  out += row;
  if (!s.connected) out += "(disconnected: path figures cover the largest component, " +
                           std::to_string(s.component_size) + " nodes)\n";
  return out;
}

}  // namespace qosr::cli
