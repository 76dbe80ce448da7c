#include <functional>
#include <sstream>

#include "qosr/cli/cli.hpp"
#include "qosr/graph/format.hpp"
#include "qosr/multicast/trees.hpp"
#include "qosr/unicast/paths.hpp"

namespace qosr::cli {
namespace {

struct Check {
  std::string fixture;  // file stem
  std::string what;
  // Returns "" on success, otherwise what was observed.
  std::function<std::string(const Network&)> run;
};

std::string expect(const std::string& got, const std::string& want) {
  return got == want ? "" : "got " + got + ", expected " + want;
}

std::string path_text(const Network& n, const PathSolution& p) {
  std::string out;
  for (std::size_t i = 0; i < p.nodes.size(); ++i) out += (i ? "-" : "") + n.name(p.nodes[i]);
  return out;
}

std::vector<Check> checks() {
  std::vector<Check> cs;
  cs.push_back({"shortest", "route r -> v costs 6 via r-t-s-v and r-u-v", [](const Network& n) {
                  PathQuery q;
                  q.src = n.index("r");
                  q.dst = n.index("v");
                  auto best = best_path(n, q, n.spec());
                  if (!best) return std::string("no path");
                  std::string ws;
                  for (const auto& w : best->witnesses) ws += (ws.empty() ? "" : " ") + path_text(n, w);
                  return expect(best->cost.to_string() + " " + ws, "6 r-t-s-v r-u-v");
                }});
  cs.push_back({"bicriteria", "pareto p -> v collapses to 7,7", [](const Network& n) {
                  PathQuery q;
                  q.src = n.index("p");
                  q.dst = n.index("v");
                  auto f = pareto_paths(n, q, n.spec());
                  return expect(collapse(n.spec(), f).to_string(), "7,7");
                }});
  cs.push_back({"bicriteria", "p -> v with delay <= 8 has 3 paths", [](const Network& n) {
                  PathQuery q;
                  q.src = n.index("p");
                  q.dst = n.index("v");
                  q.bounds.push_back(Bound{*n.dim_index("delay"), Bound::Op::Le, Rational{8}});
                  return expect(std::to_string(constrained_paths(n, q, n.spec()).size()), "3");
                }});
  cs.push_back({"modal", "uniform modality c, p -> v costs 8 via p-r-u-v", [](const Network& n) {
                  PathQuery q;
                  q.src = n.index("p");
                  q.dst = n.index("v");
                  q.allowed_modalities = {"c"};
                  q.uniform_modality = true;
                  auto best = modal_best_path(n, q, n.spec());
                  if (!best) return std::string("no path");
                  return expect(best->cost.to_string() + " " + path_text(n, best->path), "8 p-r-u-v");
                }});
  cs.push_back({"multicast", "tree n0 -> n6,n7,n8,n9 costs 2,16", [](const Network& n) {
                  Hypergraph h(n);
                  TreeQuery q;
                  q.source = n.index("n0");
                  for (const char* r : {"n6", "n7", "n8", "n9"}) q.receivers.push_back(n.index(r));
                  auto f = pareto_trees(h, q, n.spec());
                  std::string got;
                  for (const auto& c : f.costs()) got += (got.empty() ? "" : " ") + c.to_string();
                  return expect(got, "2,16");
                }});
  cs.push_back({"modal_tree", "tree n0 -> n3,n4 over {w} costs 10,7, over {w,l} costs 10,4", [](const Network& n) {
                  Hypergraph h(n);
                  TreeQuery q;
                  q.source = n.index("n0");
                  q.receivers = {n.index("n3"), n.index("n4")};
                  std::string got;
                  for (auto mods : {std::vector<std::string>{"w"}, std::vector<std::string>{"w", "l"}}) {
                    q.allowed_modalities = mods;
                    auto f = pareto_trees(h, q, n.spec());
                    got += (got.empty() ? "" : " ") + (f.empty() ? std::string("none") : f.entries.front().cost.to_string());
                  }
                  return expect(got, "10,7 10,4");
                }});
  return cs;
}

}  // namespace

bool selftest(const std::string& dir, std::ostream& out) {
  bool ok = true;
  for (const Check& c : checks()) {
    std::string path = dir + "/" + c.fixture + ".qnet";
    std::string verdict;
    try {
      Network n = load_network(path);
      verdict = c.run(n);
    } catch (const std::exception& e) {
      verdict = e.what();
    }
    if (verdict.empty()) {
      out << "PASS " << c.fixture << ": " << c.what << "\n";
    } else {
      ok = false;
      out << "FAIL " << c.fixture << ": " << c.what << ": " << verdict << "\n";
    }
  }
  return ok;
}

}  // namespace qosr::cli
