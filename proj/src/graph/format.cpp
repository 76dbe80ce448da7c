#include "qosr/graph/format.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace qosr {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string> split_on(std::string_view text, char sep) {
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

std::string join(const std::vector<std::string>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

}  // namespace

Network parse_network(std::string_view text) {
  std::optional<NetworkBuilder> builder;
  std::vector<DimKind> kinds;
  std::vector<std::string> names;
  bool magic = false;
  bool undirected = false;
  ComposeMode compose = ComposeMode::Max;
  std::string origin;
  std::size_t line_no = 0;

  auto ensure_builder = [&](std::size_t at) -> NetworkBuilder& {
    if (!builder) {
      if (kinds.empty()) throw ParseError(at, "record before 'dims' header");
      builder.emplace(SemiringSpec(kinds), names);
      builder->set_undirected(undirected);
      builder->set_compose(compose);
      builder->set_origin(origin);
    }
    return *builder;
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    std::string_view line = raw.substr(0, raw.find('#'));
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    try {
      std::string_view kw = tok[0];
      if (!magic) {
        if (kw != "qnet") throw ParseError(line_no, "expected 'qnet 1' header");
        if (tok.size() != 2 || tok[1] != "1") throw ParseError(line_no, "unsupported format version");
        magic = true;
        continue;
      }
      if (kw == "dims") {
        if (!kinds.empty()) throw ParseError(line_no, "duplicate 'dims' header");
        if (tok.size() != 2) throw ParseError(line_no, "'dims' takes one comma-separated list");
        for (const auto& item : split_on(tok[1], ',')) {
          auto colon = item.find(':');
          std::string kind_text = colon == std::string::npos ? item : item.substr(colon + 1);
          auto kind = parse_dim_kind(kind_text);
          if (!kind) throw ParseError(line_no, "unknown dimension kind '" + kind_text + "'");
          kinds.push_back(*kind);
          names.push_back(colon == std::string::npos ? "" : item.substr(0, colon));
        }
        if (kinds.size() > MultiCost::kMaxDims) throw ParseError(line_no, "too many dimensions");
        continue;
      }
      if (kw == "undirected" || kw == "compose" || kw == "origin") {
        if (builder) throw ParseError(line_no, "'" + std::string(kw) + "' must precede records");
        if (kw == "origin") {
          auto at = line.find("origin") + 6;
          auto rest = line.substr(at);
          auto b = rest.find_first_not_of(" \t");
          auto e = rest.find_last_not_of(" \t\r");
          origin = b == std::string_view::npos ? "" : std::string(rest.substr(b, e - b + 1));
        } else if (kw == "undirected") {
          if (tok.size() == 1 || tok[1] == "true") {
            undirected = true;
          } else if (tok[1] == "false") {
            undirected = false;
          } else {
            throw ParseError(line_no, "undirected expects true or false");
          }
        } else {
          if (tok.size() != 2 || (tok[1] != "max" && tok[1] != "sum")) {
            throw ParseError(line_no, "compose expects max or sum");
          }
          compose = tok[1] == "max" ? ComposeMode::Max : ComposeMode::Sum;
        }
        continue;
      }
      NetworkBuilder& b = ensure_builder(line_no);
      if (kw == "node") {
        if (tok.size() != 2) throw ParseError(line_no, "node takes one name");
        b.add_node(tok[1]);
      } else if (kw == "edge") {
        if (tok.size() < 4) throw ParseError(line_no, "edge needs source, destination and cost");
        std::vector<std::string> mods, reach;
        bool seen_mods = false, seen_reach = false;
        for (std::size_t i = 4; i < tok.size(); ++i) {
          std::string_view attr = tok[i];
          if (attr.starts_with("mods=") && !seen_mods) {
            mods = split_on(attr.substr(5), '|');
            seen_mods = true;
          } else if (attr.starts_with("reach=") && !seen_reach) {
            reach = split_on(attr.substr(6), '|');
            seen_reach = true;
          } else {
            throw ParseError(line_no, "unexpected edge attribute '" + std::string(attr) + "'");
          }
        }
        MultiCost cost;
        try {
          cost = MultiCost::parse(tok[3]);
        } catch (const std::exception& e) {
          throw ParseError(line_no, std::string("bad cost: ") + e.what());
        }
        b.add_edge(tok[1], tok[2], cost, std::move(mods), std::move(reach));
      } else if (kw == "receiver") {
        if (tok.size() != 2 && tok.size() != 3) throw ParseError(line_no, "receiver takes a name and an optional cost");
        std::optional<MultiCost> cost;
        if (tok.size() == 3) {
          try {
            cost = MultiCost::parse(tok[2]);
          } catch (const std::exception& e) {
            throw ParseError(line_no, std::string("bad cost: ") + e.what());
          }
        }
        b.add_receiver(tok[1], cost);
      } else if (kw == "region") {
        if (tok.size() != 3) throw ParseError(line_no, "region takes a node and a label");
        b.set_region(tok[1], tok[2]);
      } else {
        throw ParseError(line_no, "unknown record '" + std::string(kw) + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!magic) throw ParseError(0, "missing 'qnet 1' header");
  if (kinds.empty()) throw ParseError(0, "missing 'dims' header");
  return ensure_builder(line_no).build();
}

Network load_network(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_network(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.reason(), path);
  }
}

std::string serialize_network(const Network& n) {
  std::ostringstream out;
  const SemiringSpec& s = n.spec();
  out << "qnet 1\n";
  out << "dims ";
  for (std::size_t i = 0; i < s.dims(); ++i) {
    if (i) out << ',';
    if (!n.dim_names()[i].empty()) out << n.dim_names()[i] << ':';
    out << to_string(s.kind(i));
  }
  out << "\nundirected " << (n.undirected() ? "true" : "false") << "\n";
  out << "compose " << (n.compose_mode() == ComposeMode::Max ? "max" : "sum") << "\n";
  if (!n.origin().empty()) out << "origin " << n.origin() << "\n";
  for (const auto& name : n.names()) out << "node " << name << "\n";
  for (const auto& e : n.edges()) {
    if (n.undirected() && e.src > e.dst) continue;
    out << "edge " << n.name(e.src) << ' ' << n.name(e.dst) << ' ' << e.cost.to_string();
    if (!e.modalities.empty()) out << " mods=" << join(e.modalities, '|');
    if (!e.reach.empty()) out << " reach=" << join(e.reach, '|');
    out << "\n";
  }
  for (const auto& [node, cost] : n.receivers()) out << "receiver " << n.name(node) << ' ' << cost.to_string() << "\n";
  for (NodeIndex i = 0; i < n.node_count(); ++i) {
    if (n.region(i)) out << "region " << n.name(i) << ' ' << *n.region(i) << "\n";
  }
  return out.str();
}

}  // namespace qosr
