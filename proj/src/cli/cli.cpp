#include "qosr/cli/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qosr/cli/bench.hpp"
#include "qosr/cli/output.hpp"
#include "qosr/graph/format.hpp"
#include "qosr/multicast/trees.hpp"
#include "qosr/netgen/netgen.hpp"
#include "qosr/unicast/paths.hpp"

#ifndef QOSR_FIXTURE_DIR
#define QOSR_FIXTURE_DIR "data/fixtures"
#endif

namespace qosr::cli {
namespace {

using nlohmann::json;

// Bad flag values discovered after CLI11 parsing; exit 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    if (cur.empty()) throw UsageError("empty item in '" + text + "'");
    out.push_back(cur);
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

Rational rational_arg(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + ": not a number: '" + text + "'");
  }
}

std::vector<Rational> rationals(const std::string& text, const char* flag) {
  std::vector<Rational> out;
  for (const auto& s : split(text, ',')) out.push_back(rational_arg(s, flag));
  return out;
}

std::pair<std::string, std::string> range_arg(const std::string& text, const char* flag) {
  auto at = text.find("..");
  if (at == std::string::npos) throw UsageError(std::string(flag) + ": expected lo..hi, got '" + text + "'");
  return {text.substr(0, at), text.substr(at + 2)};
}

std::size_t dim_arg(const Network& n, const std::string& token) {
  if (auto i = n.dim_index(token)) return *i;
  try {
    std::size_t pos = 0;
    auto i = std::stoul(token, &pos);
    if (pos == token.size() && i < n.spec().dims()) return i;
  } catch (const std::exception&) {
  }
  throw UsageError("unknown dimension '" + token + "'");
}

Bound bound_arg(const Network& n, const std::string& text) {
  for (auto [op, sym] : {std::pair{Bound::Op::Le, "<="}, std::pair{Bound::Op::Ge, ">="}}) {
    auto at = text.find(sym);
    if (at == std::string::npos) continue;
    return Bound{dim_arg(n, text.substr(0, at)), op, rational_arg(text.substr(at + 2), "--bound")};
  }
  throw UsageError("--bound: expected dim<=v or dim>=v, got '" + text + "'");
}

// Flags shared by the query subcommands.
struct QueryFlags {
  std::string net;
  std::string from;
  std::string to;
  std::string weights;
  std::string eps;
  std::string mods;
  bool uniform = false;
  std::vector<std::string> bounds;
  std::optional<std::size_t> depth;
  std::string window;
  bool reach = false;
  bool no_prune = false;
  std::size_t witnesses = 4;
  bool json = false;
};

void add_query_flags(CLI::App* app, QueryFlags& f, bool tree) {
  app->add_option("--net", f.net, "network file")->required();
  app->add_option("--from", f.from, "source node")->required();
  app->add_option("--to", f.to, tree ? "receivers, comma separated" : "destination node")->required();
  app->add_option("--weights", f.weights, "k1,k2,..: rank by weighted sum");
  app->add_option("--eps", f.eps, "e1,e2,..: slack per weight");
  app->add_option("--mods", f.mods, "allowed modalities, comma separated");
  app->add_option("--depth", f.depth, "hop limit");
  app->add_option("--window", f.window, "initial scalar window lo..hi");
  app->add_flag("--no-prune", f.no_prune, "exhaustive search");
  app->add_option("--witnesses", f.witnesses, "witnesses kept per cost")->check(CLI::PositiveNumber);
  app->add_flag("--json", f.json, "JSON output");
  if (tree) {
    app->add_flag("--reach", f.reach, "honour link reach restrictions");
  } else {
    app->add_flag("--uniform", f.uniform, "one modality for every hop");
    app->add_option("--bound", f.bounds, "dim<=v or dim>=v (repeatable)");
  }
}

std::optional<WeightProfile> weight_profile(const QueryFlags& f, std::size_t dims) {
  if (f.weights.empty()) {
    if (!f.eps.empty()) throw UsageError("--eps needs --weights");
    return std::nullopt;
  }
  WeightProfile w;
  w.weights = rationals(f.weights, "--weights");
  w.slack = f.eps.empty() ? std::vector<Rational>(w.weights.size(), Rational{0}) : rationals(f.eps, "--eps");
  if (w.weights.size() != dims || w.slack.size() != dims)
    throw UsageError("--weights/--eps need " + std::to_string(dims) + " values");
  try {
    w.validate(dims);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  return w;
}

std::optional<Window> window_arg(const QueryFlags& f) {
  if (f.window.empty()) return std::nullopt;
  auto [lo, hi] = range_arg(f.window, "--window");
  return Window{rational_arg(lo, "--window"), rational_arg(hi, "--window")};
}

// Semiring a query runs under: the ordered product when weights are given
// for a multi-dimensional network.
SemiringSpec query_semiring(const Network& n, const std::optional<WeightProfile>& w) {
  if (w && n.spec().dims() > 1) return ordered_weighted(n.spec(), *w);
  return n.spec();
}


json search_stats_json(const SearchStats& st) {
  return {{"explored", st.explored}, {"pruned", st.pruned}, {"restarts", st.restarts}};
}

int cmd_route(const QueryFlags& f, std::ostream& out, std::ostream& err) {
  Network n = load_network(f.net);
  PathQuery q;
  q.src = n.index(f.from);
  q.dst = n.index(f.to);
  for (const auto& b : f.bounds) q.bounds.push_back(bound_arg(n, b));
  if (!f.mods.empty()) q.allowed_modalities = split(f.mods, ',');
  if (f.uniform && q.allowed_modalities.empty()) throw UsageError("--uniform needs --mods");
  q.uniform_modality = f.uniform;
  q.max_depth = f.depth;
  q.window = window_arg(f);
  q.prune = !f.no_prune;
  q.witness_cap = f.witnesses;
  q.weights = weight_profile(f, n.spec().dims());
  SemiringSpec s = query_semiring(n, q.weights);
  SearchStats st;

  std::vector<PathSolution> sols;
  std::string kind;
  if (!q.bounds.empty()) {
    kind = "constrained";
    sols = constrained_paths(n, q, s, &st);
  } else if (s.totally_ordered()) {
    kind = "best";
    auto best = q.allowed_modalities.empty() ? best_path(n, q, s, &st) : modal_best_path(n, q, s, &st);
    if (best) sols = best->witnesses;
  } else {
    kind = "pareto";
    err << "note: partially ordered costs; printing the non-dominated set\n";
    for (const auto& e : pareto_paths(n, q, s, &st).entries)
      sols.insert(sols.end(), e.witnesses.begin(), e.witnesses.end());
  }
  if (f.json) {
    json j = {{"kind", kind}, {"semiring", s.describe()}, {"stats", search_stats_json(st)}};
    j["solutions"] = json::array();
    for (const auto& p : sols) j["solutions"].push_back(path_json(n, p));
    out << j.dump(2) << "\n";
  } else {
    for (const auto& p : sols) out << format_path(n, p) << "\n";
  }
  if (sols.empty()) {
    err << "no path from " << f.from << " to " << f.to << "\n";
    return kNoSolution;
  }
  return kOk;
}

int cmd_pareto(const QueryFlags& f, std::ostream& out, std::ostream& err) {
  Network n = load_network(f.net);
  PathQuery q;
  q.src = n.index(f.from);
  q.dst = n.index(f.to);
  if (!f.mods.empty()) q.allowed_modalities = split(f.mods, ',');
  if (f.uniform && q.allowed_modalities.empty()) throw UsageError("--uniform needs --mods");
  q.uniform_modality = f.uniform;
  q.max_depth = f.depth;
  q.window = window_arg(f);
  q.prune = !f.no_prune;
  q.witness_cap = f.witnesses;
  q.weights = weight_profile(f, n.spec().dims());
  const SemiringSpec& s = n.spec();
  SearchStats st;
  PathFrontier fr = pareto_paths(n, q, s, &st);
  MultiCost best = collapse(s, fr);
  if (f.json) {
    json j = {{"semiring", s.describe()}, {"choose", cost_json(best)}, {"stats", search_stats_json(st)}};
    j["frontier"] = json::array();
    for (const auto& e : fr.entries) {
      json ws = json::array();
      for (const auto& w : e.witnesses) ws.push_back(path_json(n, w));
      j["frontier"].push_back({{"cost", cost_json(e.cost)}, {"witnesses", ws}});
    }
    out << j.dump(2) << "\n";
  } else {
    for (const auto& e : fr.entries)
      for (const auto& w : e.witnesses) out << format_path(n, w) << "\n";
    out << "# choose=" << best.to_string() << "\n";
  }
  if (fr.empty()) {
    err << "no path from " << f.from << " to " << f.to << "\n";
    return kNoSolution;
  }
  return kOk;
}

void print_tree(const Network& n, const TreeSolution& t, std::ostream& out) {
  for (const auto& line : format_tree_connectors(n, t)) out << line << "\n";
  out << format_tree(t) << "\n";
}

int cmd_mroute(const QueryFlags& f, std::ostream& out, std::ostream& err) {
  Network n = load_network(f.net);
  Hypergraph h(n);
  TreeQuery q;
  q.source = n.index(f.from);
  for (const auto& r : split(f.to, ',')) q.receivers.push_back(n.index(r));
  if (!f.mods.empty()) q.allowed_modalities = split(f.mods, ',');
  q.reach_filter = f.reach;
  q.max_depth = f.depth;
  q.window = window_arg(f);
  q.prune = !f.no_prune;
  q.witness_cap = f.witnesses;
  q.weights = weight_profile(f, n.spec().dims());
  SemiringSpec s = query_semiring(n, q.weights);
  SearchStats st;
  TreeNotes notes;
  std::vector<TreeSolution> sols;
  std::string kind;
  if (s.totally_ordered()) {
    kind = "best";
    if (auto best = best_tree(h, q, s, &st, &notes)) sols.push_back(best->tree);
  } else {
    kind = "pareto";
    for (const auto& e : pareto_trees(h, q, s, &st, &notes).entries) sols.push_back(e.witnesses.front());
  }
  for (const auto& w : notes.warnings) err << "warning: " << w << "\n";
  if (f.json) {
    json j = {{"kind", kind}, {"semiring", s.describe()}, {"stats", search_stats_json(st)}};
    j["solutions"] = json::array();
    for (const auto& t : sols) j["solutions"].push_back(tree_json(n, t));
    out << j.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < sols.size(); ++i) {
      if (i) out << "\n";
      print_tree(n, sols[i], out);
    }
  }
  if (sols.empty()) {
    err << "no tree from " << f.from << " to " << f.to << "\n";
    return kNoSolution;
  }
  return kOk;
}

struct CutFlags {
  std::string net, from, to;
  std::string costs;
  std::string weights, eps;
  std::size_t grid = 5;
  std::optional<std::size_t> depth;
  bool json = false;
};

int cmd_cut(const CutFlags& c, std::ostream& out, std::ostream& err) {
  QueryFlags wf;
  wf.weights = c.weights;
  wf.eps = c.eps;
  std::optional<Network> n;
  Frontier<std::string> fr;
  std::optional<SemiringSpec> s;
  if (!c.costs.empty()) {
    if (!c.net.empty()) throw UsageError("--costs and --net are exclusive");
    std::vector<MultiCost> cs;
    for (const auto& tok : split(c.costs, ';')) {
      try {
        cs.push_back(MultiCost::parse(tok));
      } catch (const std::exception& e) {
        throw UsageError("--costs: " + std::string(e.what()));
      }
    }
    s.emplace(std::vector<DimKind>(cs.front().size(), DimKind::Weighted));
    for (const auto& x : cs) {
      if (!s->in_carrier(x)) throw UsageError("--costs: mixed arity or negative value");
      frontier_insert(*s, fr, x, std::string{});
    }
  } else {
    if (c.net.empty() || c.from.empty() || c.to.empty()) throw UsageError("cut needs --costs or --net/--from/--to");
    n = load_network(c.net);
    s = n->spec();
    PathQuery q;
    q.src = n->index(c.from);
    q.dst = n->index(c.to);
    q.max_depth = c.depth;
    q.witness_cap = 1;
    for (const auto& e : pareto_paths(*n, q, *s).entries)
      frontier_insert(*s, fr, e.cost, format_path(*n, e.witnesses.front()));
  }
  auto w = weight_profile(wf, s->dims());
  if (!w) w = WeightProfile::uniform(s->dims());
  if (c.grid == 0) throw UsageError("--grid must be positive");
  auto kept = cut(*s, fr, *w, c.grid);
  if (c.json) {
    json j = {{"input", fr.size()}};
    j["kept"] = json::array();
    for (const auto& e : kept.entries) {
      json item = {{"cost", cost_json(e.cost)}};
      if (!e.witnesses.front().empty()) item["path"] = e.witnesses.front();
      j["kept"].push_back(item);
    }
    out << j.dump(2) << "\n";
  } else {
    for (const auto& e : kept.entries) {
      if (e.witnesses.front().empty()) out << "cost=" << e.cost.to_string() << "\n";
      else out << e.witnesses.front() << "\n";
    }
  }
  if (kept.empty()) {
    err << "nothing to cut\n";
    return kNoSolution;
  }
  return kOk;
}

struct GenFlags {
  std::size_t nodes = 0, edges = 0;
  std::uint64_t seed = 1;
  std::string dims = "cost:weighted,delay:weighted";
  std::string ranges;
  std::string out;
};

GenParams gen_params(const GenFlags& g) {
  GenParams p;
  p.nodes = g.nodes;
  p.edges = g.edges;
  p.seed = g.seed;
  p.dims.clear();
  for (const auto& d : split(g.dims, ',')) {
    auto colon = d.find(':');
    std::string name = colon == std::string::npos ? "" : d.substr(0, colon);
    std::string kind = colon == std::string::npos ? d : d.substr(colon + 1);
    auto k = parse_dim_kind(kind);
    if (!k) throw UsageError("--dims: unknown kind '" + kind + "'");
    p.dims.push_back(*k);
    p.dim_names.push_back(name);
  }
  p.ranges.clear();
  if (g.ranges.empty()) {
    for (DimKind k : p.dims) p.ranges.push_back(k == DimKind::Probabilistic ? std::pair<std::int64_t, std::int64_t>{50, 100} : std::pair<std::int64_t, std::int64_t>{1, 10});
  } else {
    for (const auto& r : split(g.ranges, ',')) {
      auto [lo, hi] = range_arg(r, "--ranges");
      try {
        p.ranges.emplace_back(std::stoll(lo), std::stoll(hi));
      } catch (const std::exception&) {
        throw UsageError("--ranges: expected integers, got '" + r + "'");
      }
    }
  }
  return p;
}

int cmd_gen(const GenFlags& g, std::ostream& out) {
  Network n = generate(gen_params(g));
  std::string text = serialize_network(n);
  if (g.out.empty()) {
    out << text;
  } else {
    std::ofstream f(g.out);
    if (!f || !(f << text)) throw std::runtime_error("cannot write " + g.out);
  }
  return kOk;
}

struct BenchFlags {
  std::string net;
  std::size_t nodes = 0, edges = 0;
  std::uint64_t net_seed = 1;
  std::size_t queries = 50;
  std::uint64_t seed = 1;
  std::string mode = "bnb";
  std::string weights;
  std::optional<std::size_t> depth;
  std::uint64_t budget = 5'000'000;
  bool records = false;
  bool json = false;
};

int cmd_bench(const BenchFlags& b, std::ostream& out) {
  Network n = [&] {
    if (!b.net.empty()) return load_network(b.net);
    if (b.nodes == 0) throw UsageError("bench needs --net or --nodes/--edges");
    GenFlags g;
    g.nodes = b.nodes;
    g.edges = b.edges;
    g.seed = b.net_seed;
    return generate(gen_params(g));
  }();
  BenchOptions opt;
  opt.queries = b.queries;
  opt.seed = b.seed;
  opt.mode = b.mode == "exhaustive" ? BenchMode::Exhaustive : BenchMode::BranchAndBound;
  QueryFlags wf;
  wf.weights = b.weights;
  opt.weights = weight_profile(wf, n.spec().dims());
  opt.max_depth = b.depth;
  opt.state_budget = b.budget;
  BenchReport rep = run_bench(n, opt);
  if (b.json) {
    out << rep.to_json(b.records).dump(2) << "\n";
  } else {
    out << rep.table();
    if (b.records) {
      for (const auto& r : rep.records) {
        char t[32];
        std::snprintf(t, sizeof t, "%.3fs", r.seconds);
        out << r.src << " -> " << r.dst << " time=" << t << " cost=" << (r.cost ? r.cost->to_string() : "-")
            << " depth=" << r.depth << " explored=" << r.explored << " pruned=" << r.pruned << "\n";
      }
    }
  }
  return kOk;
}

int cmd_stats(const std::string& net, bool as_json, std::ostream& out) {
  GraphStats st = stats(load_network(net));
  if (as_json) out << stats_json(st).dump(2) << "\n";
  else out << stats_table(st);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"QoS routing over c-semirings", "qosr"};
  app.require_subcommand(1, 1);

  QueryFlags route_f, pareto_f, mroute_f;
  auto* route = app.add_subcommand("route", "best, constrained or non-dominated paths");
  add_query_flags(route, route_f, false);
  auto* pareto = app.add_subcommand("pareto", "non-dominated path costs");
  add_query_flags(pareto, pareto_f, false);
  auto* mroute = app.add_subcommand("mroute", "multicast tree to several receivers");
  add_query_flags(mroute, mroute_f, true);

  CutFlags cut_f;
  auto* cutc = app.add_subcommand("cut", "filter a frontier by weighted sums");
  cutc->add_option("--costs", cut_f.costs, "c1,c2;c1,c2;..");
  cutc->add_option("--net", cut_f.net, "network file");
  cutc->add_option("--from", cut_f.from, "source node");
  cutc->add_option("--to", cut_f.to, "destination node");
  cutc->add_option("--depth", cut_f.depth, "hop limit");
  cutc->add_option("--weights", cut_f.weights, "k1,k2,..");
  cutc->add_option("--eps", cut_f.eps, "e1,e2,..");
  cutc->add_option("--grid", cut_f.grid, "sample points per dimension");
  cutc->add_flag("--json", cut_f.json, "JSON output");

  GenFlags gen_f;
  auto* gen = app.add_subcommand("gen", "generate a scale-free network");
  gen->add_option("--nodes", gen_f.nodes, "node count")->required();
  gen->add_option("--edges", gen_f.edges, "undirected edge count")->required();
  gen->add_option("--seed", gen_f.seed, "random seed");
  gen->add_option("--dims", gen_f.dims, "[name:]kind,..");
  gen->add_option("--ranges", gen_f.ranges, "lo..hi per dimension");
  gen->add_option("-o,--out", gen_f.out, "output file (stdout when absent)");

  std::string stats_net;
  bool stats_json_flag = false;
  auto* statsc = app.add_subcommand("stats", "graph statistics");
  statsc->add_option("--net", stats_net, "network file")->required();
  statsc->add_flag("--json", stats_json_flag, "JSON output");

  BenchFlags bench_f;
  auto* bench = app.add_subcommand("bench", "timed random unicast queries");
  bench->add_option("--net", bench_f.net, "network file");
  bench->add_option("--nodes", bench_f.nodes, "generate a network with this many nodes");
  bench->add_option("--edges", bench_f.edges, "edges of the generated network");
  bench->add_option("--net-seed", bench_f.net_seed, "seed of the generated network");
  bench->add_option("--queries", bench_f.queries, "query count")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_f.seed, "endpoint seed");
  bench->add_option("--mode", bench_f.mode, "bnb or exhaustive")->check(CLI::IsMember({"bnb", "exhaustive"}));
  bench->add_option("--weights", bench_f.weights, "k1,k2,..");
  bench->add_option("--depth", bench_f.depth, "hop limit");
  bench->add_option("--budget", bench_f.budget, "state budget per exhaustive query");
  bench->add_flag("--records", bench_f.records, "print per-query records");
  bench->add_flag("--json", bench_f.json, "JSON output");

  std::string fixtures = QOSR_FIXTURE_DIR;
  bool self_json = false;
  auto* self = app.add_subcommand("selftest", "check the bundled worked examples");
  self->add_option("--fixtures", fixtures, "fixture directory");
  self->add_flag("--json", self_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*route) return cmd_route(route_f, out, err);
    if (*pareto) return cmd_pareto(pareto_f, out, err);
    if (*mroute) return cmd_mroute(mroute_f, out, err);
    if (*cutc) return cmd_cut(cut_f, out, err);
    if (*gen) return cmd_gen(gen_f, out);
    if (*statsc) return cmd_stats(stats_net, stats_json_flag, out);
    if (*bench) return cmd_bench(bench_f, out);
    if (*self) {
      std::ostringstream lines;
      bool ok = selftest(fixtures, lines);
      if (self_json) {
        json j = {{"ok", ok}, {"checks", json::array()}};
        std::istringstream in(lines.str());
        for (std::string l; std::getline(in, l);) {
          bool pass = l.rfind("PASS ", 0) == 0;
          j["checks"].push_back({{"pass", pass}, {"line", l.substr(5)}});
        }
        out << j.dump(2) << "\n";
      } else {
        out << lines.str();
      }
      return ok ? kOk : kNoSolution;
    }
  } catch (const std::exception& e) {
    // Bad input, oversize oracle runs and unreadable files all map to 2.
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"qosr"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qosr::cli
