#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qosr::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNoSolution = 1;
inline constexpr int kUsage = 2;

// Entry point of the `qosr` tool: gen, stats, route, mroute, pareto, cut,
// bench, selftest.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Checks the bundled worked examples in `dir`, printing one PASS/FAIL line
// per fixture. Returns true when all pass.
bool selftest(const std::string& dir, std::ostream& out);

}  // namespace qosr::cli
