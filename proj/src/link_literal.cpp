// Text literals for link diagrams:
//   PD[X[1,4,2,3], X[3,2,4,1]]      planar diagram, KnotTheory style
//   [[1,4,2,3], [3,2,4,1]]          the same without heads
//   {n:2, w:[1,1]}                  closure of a braid word
//   {"n":3, "w":[1,-2], "components":[1,2,1]}

#include "torsion/errors.hpp"
#include "torsion/pd_code.hpp"

#include <cctype>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace torsion {

namespace {

struct Node {
  enum class Kind { Int, List, Object };
  Kind kind = Kind::Int;
  std::size_t pos = 0;
  long long value = 0;
  std::string head;  // "PD", "X" for headed lists
  std::vector<Node> items;
  std::vector<std::pair<std::string, Node>> members;
};

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  Node parse() {
    Node root = value();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string key() {
    if (peek('"')) {
      ++pos_;
      const std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') ++pos_;
      if (pos_ == text_.size()) fail("unterminated string");
      std::string k(text_.substr(start, pos_ - start));
      ++pos_;
      return k;
    }
    return identifier();
  }

  Node integer() {
    skip_ws();
    Node n;
    n.pos = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t digits = pos_;
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const int d = text_[pos_] - '0';
      if (v > (std::numeric_limits<long long>::max() - d) / 10) fail("integer too large");
      v = v * 10 + d;
      ++pos_;
    }
    if (digits == pos_) fail("expected integer");
    n.value = negative ? -v : v;
    return n;
  }

  Node list(char open, char close, std::string head, std::size_t at) {
    expect(open);
    Node n;
    n.kind = Node::Kind::List;
    n.pos = at;
    n.head = std::move(head);
    if (peek(close)) {
      ++pos_;
      return n;
    }
    for (;;) {
      n.items.push_back(value());
      if (peek(',')) {
        ++pos_;
        continue;
      }
      expect(close);
      return n;
    }
  }

  Node object() {
    const std::size_t at = pos_;
    expect('{');
    Node n;
    n.kind = Node::Kind::Object;
    n.pos = at;
    if (peek('}')) {
      ++pos_;
      return n;
    }
    for (;;) {
      std::string k = key();
      expect(':');
      n.members.emplace_back(std::move(k), value());
      if (peek(',')) {
        ++pos_;
        continue;
      }
      expect('}');
      return n;
    }
  }

  Node value() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '[') return list('[', ']', "", pos_);
    if (c == '{') return object();
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) return integer();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      std::string head = identifier();
      return list('[', ']', std::move(head), at);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int as_int(const Node& n) {
  if (n.kind != Node::Kind::Int) throw SyntaxError(n.pos, "expected integer");
  if (n.value > std::numeric_limits<int>::max() || n.value < std::numeric_limits<int>::min()) {
    throw SyntaxError(n.pos, "integer out of range");
  }
  return static_cast<int>(n.value);
}

std::vector<int> as_int_list(const Node& n) {
  if (n.kind != Node::Kind::List || !n.head.empty()) throw SyntaxError(n.pos, "expected integer list");
  std::vector<int> out;
  for (const Node& item : n.items) out.push_back(as_int(item));
  return out;
}

PDCode pd_from_node(const Node& root) {
  if (!root.head.empty() && root.head != "PD") {
    throw SyntaxError(root.pos, "unknown literal head '" + root.head + "'");
  }
  std::vector<std::array<int, 4>> tuples;
  for (const Node& x : root.items) {
    if (x.kind != Node::Kind::List || (!x.head.empty() && x.head != "X")) {
      throw SyntaxError(x.pos, "expected crossing X[a,b,c,d]");
    }
    if (x.items.size() != 4) throw SyntaxError(x.pos, "a crossing needs exactly 4 arc labels");
    tuples.push_back({as_int(x.items[0]), as_int(x.items[1]), as_int(x.items[2]), as_int(x.items[3])});
  }
  return PDCode::from_tuples(tuples);
}

PDCode braid_from_node(const Node& root) {
  BraidWord braid;
  bool have_n = false, have_w = false;
  for (const auto& [k, v] : root.members) {
    if (k == "n") {
      braid.strands = as_int(v);
      have_n = true;
    } else if (k == "w") {
      braid.word = as_int_list(v);
      have_w = true;
    } else if (k == "components") {
      braid.components = as_int_list(v);
    } else {
      throw SyntaxError(v.pos, "unknown braid field '" + k + "'");
    }
  }
  if (!have_n || !have_w) throw SyntaxError(root.pos, "braid literal needs fields n and w");
  return PDCode::from_braid(braid);
}

}  // namespace

PDCode parse_link(std::string_view text) {
  const Node root = LiteralParser(text).parse();
  if (root.kind == Node::Kind::Object) return braid_from_node(root);
  if (root.kind == Node::Kind::List) return pd_from_node(root);
  throw SyntaxError(root.pos, "expected a PD code or braid literal");
}

}  // namespace torsion
