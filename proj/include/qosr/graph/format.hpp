#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qosr/graph/network.hpp"

namespace qosr {

// Error in a network file; line() is 1-based (0 when not tied to a line).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& reason, const std::string& file = "")
      : std::runtime_error(render(line, reason, file)), line_(line), reason_(reason) {}
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] const std::string& reason() const { return reason_; }

 private:
  static std::string render(std::size_t line, const std::string& reason, const std::string& file) {
    std::string where = file.empty() ? (line ? "line " + std::to_string(line) : "") : file;
    if (!file.empty() && line) where += ":" + std::to_string(line);
    return where.empty() ? reason : where + ": " + reason;
  }

  std::size_t line_;
  std::string reason_;
};

// Text format, one record per line, '#' starts a comment:
//
//   qnet 1
//   dims cost:weighted,delay:weighted     (names optional)
//   undirected false                      (optional)
//   compose max                           (optional; max or sum)
//   origin free text                      (optional)
//   node n0
//   edge n0 n1 10,1 mods=w|l reach=AS1
//   receiver n9 2,3                       (cost optional)
//   region n4 AS2
Network parse_network(std::string_view text);
Network load_network(const std::string& path);

// Canonical text: header, then nodes, edges, receivers and regions in
// lexicographic order. Undirected networks list each pair once.
std::string serialize_network(const Network& n);

}  // namespace qosr
