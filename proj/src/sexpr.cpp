#include "efftop/sexpr.hpp"

#include <cctype>
#include <sstream>

namespace efftop::sx {

bool Node::headed(const std::string& head) const {
  if (!is_list()) return false;
  const auto& xs = items();
  return !xs.empty() && xs[0]->is_sym() && xs[0]->sym() == head;
}

std::string Node::where() const {
  std::ostringstream os;
  os << pos.line << ":" << pos.col;
  return os.str();
}

ParseError::ParseError(const std::string& msg, Pos p)
    : std::runtime_error(msg + " at " + std::to_string(p.line) + ":" + std::to_string(p.col)),
      pos(p) {}

NodePtr sym(std::string s) {
  auto n = std::make_shared<Node>();
  n->data = std::move(s);
  return n;
}

NodePtr num(std::int64_t v) {
  auto n = std::make_shared<Node>();
  n->data = v;
  return n;
}

NodePtr list(std::vector<NodePtr> items) {
  auto n = std::make_shared<Node>();
  n->data = std::move(items);
  return n;
}

namespace {

class Reader {
 public:
  explicit Reader(const std::string& text) : text_(text) {}

  NodePtr read() {
    skip_space();
    if (eof()) throw ParseError("unexpected end of input", pos());
    char c = peek();
    if (c == '(') return read_list();
    if (c == ')') throw ParseError("unmatched ')'", pos());
    return read_atom();
  }

  void skip_space() {
    while (!eof()) {
      char c = peek();
      if (c == ';') {
        while (!eof() && peek() != '\n') get();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        get();
      } else {
        break;
      }
    }
  }

  bool eof() const { return i_ >= text_.size(); }
  Pos pos() const { return {line_, col_}; }

 private:
  NodePtr read_list() {
    Pos start = pos();
    get();  // '('
    std::vector<NodePtr> items;
    while (true) {
      skip_space();
      if (eof()) throw ParseError("unterminated list", start);
      if (peek() == ')') {
        get();
        break;
      }
      items.push_back(read());
    }
    auto n = list(std::move(items));
    const_cast<Node&>(*n).pos = start;
    return n;
  }

  NodePtr read_atom() {
    Pos start = pos();
    std::string tok;
    while (!eof()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ';') break;
      tok.push_back(get());
    }
    NodePtr n;
    if (is_number(tok)) {
      n = num(std::stoll(tok));
    } else {
      n = sym(tok);
    }
    const_cast<Node&>(*n).pos = start;
    return n;
  }

  static bool is_number(const std::string& tok) {
    if (tok.empty()) return false;
    std::size_t k = (tok[0] == '-' && tok.size() > 1) ? 1 : 0;
    if (k == tok.size()) return false;
    for (; k < tok.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(tok[k]))) return false;
    return true;
  }

  char peek() const { return text_[i_]; }
  char get() {
    char c = text_[i_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  const std::string& text_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

void print(const NodePtr& n, std::ostream& os) {
  if (n->is_sym()) {
    os << n->sym();
  } else if (n->is_int()) {
    os << n->num();
  } else {
    os << '(';
    const auto& xs = n->items();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) os << ' ';
      print(xs[i], os);
    }
    os << ')';
  }
}

}  // namespace

NodePtr parse(const std::string& text) {
  Reader r(text);
  NodePtr n = r.read();
  r.skip_space();
  if (!r.eof()) throw ParseError("trailing input after expression", r.pos());
  return n;
}

std::vector<NodePtr> parse_all(const std::string& text) {
  Reader r(text);
  std::vector<NodePtr> out;
  while (true) {
    r.skip_space();
    if (r.eof()) break;
    out.push_back(r.read());
  }
  return out;
}

std::string to_string(const NodePtr& node) {
  std::ostringstream os;
  print(node, os);
  return os.str();
}

}  // namespace efftop::sx
