#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

// Small S-expression reader/printer shared by every file format in the
// project. Atoms are symbols or integers; everything else is a list.
namespace efftop::sx {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Pos {
  int line = 0;
  int col = 0;
};

struct Node {
  std::variant<std::string, std::int64_t, std::vector<NodePtr>> data;
  Pos pos;

  bool is_sym() const { return std::holds_alternative<std::string>(data); }
  bool is_int() const { return std::holds_alternative<std::int64_t>(data); }
  bool is_list() const { return std::holds_alternative<std::vector<NodePtr>>(data); }

  const std::string& sym() const { return std::get<std::string>(data); }
  std::int64_t num() const { return std::get<std::int64_t>(data); }
  const std::vector<NodePtr>& items() const { return std::get<std::vector<NodePtr>>(data); }

  // True for a list whose head is the given symbol.
  bool headed(const std::string& head) const;
  std::string where() const;
};

struct ParseError : std::runtime_error {
  Pos pos;
  ParseError(const std::string& msg, Pos p);
};

NodePtr sym(std::string s);
NodePtr num(std::int64_t n);
NodePtr list(std::vector<NodePtr> items);

// Parses exactly one expression (trailing whitespace/comments allowed).
NodePtr parse(const std::string& text);
// Parses a whole file of expressions.
std::vector<NodePtr> parse_all(const std::string& text);

std::string to_string(const NodePtr& node);

}  // namespace efftop::sx
