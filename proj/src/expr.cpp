#include "hfa/expr.hpp"

#include "hfa/error.hpp"

#include <algorithm>
#include <cctype>

namespace hfa {

struct Expr::Node {
  enum class Kind { set, family_union, family_intersection, complement, union_, intersection };
  Kind kind;
  std::string name;  // set / family name
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using Node = Expr::Node;
using NodePtr = std::shared_ptr<const Node>;

enum class Tok { name, lparen, rparen, union_, intersection, complement_postfix, complement_prefix,
                 big_union, big_intersection, end };

struct Token {
  Tok type;
  std::string text;
  std::size_t column;
};

constexpr std::string_view kUnion = "∪";
constexpr std::string_view kIntersection = "∩";
constexpr std::string_view kComplement = "ᶜ";
constexpr std::string_view kBigUnion = "⋃";
constexpr std::string_view kBigIntersection = "⋂";

[[noreturn]] void syntax_error(std::size_t column, const std::string& what) {
  throw InvalidArgument("expression error at column " + std::to_string(column + 1) + ": " + what);
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const auto starts = [&](std::string_view s) { return text.substr(i, s.size()) == s; };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t col = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Tok::name, std::string(text.substr(i, j - i)), col});
      i = j;
    } else if (c == '(') {
      out.push_back({Tok::lparen, "(", col}), ++i;
    } else if (c == ')') {
      out.push_back({Tok::rparen, ")", col}), ++i;
    } else if (c == '|') {
      out.push_back({Tok::union_, "|", col}), ++i;
    } else if (c == '&') {
      out.push_back({Tok::intersection, "&", col}), ++i;
    } else if (c == '\'') {
      out.push_back({Tok::complement_postfix, "'", col}), ++i;
    } else if (c == '~') {
      out.push_back({Tok::complement_prefix, "~", col}), ++i;
    } else if (starts("^c")) {
      out.push_back({Tok::complement_postfix, "^c", col}), i += 2;
    } else if (starts(kUnion)) {
      out.push_back({Tok::union_, std::string(kUnion), col}), i += kUnion.size();
    } else if (starts(kIntersection)) {
      out.push_back({Tok::intersection, std::string(kIntersection), col}), i += kIntersection.size();
    } else if (starts(kComplement)) {
      out.push_back({Tok::complement_postfix, std::string(kComplement), col}), i += kComplement.size();
    } else if (starts(kBigUnion)) {
      out.push_back({Tok::big_union, std::string(kBigUnion), col}), i += kBigUnion.size();
    } else if (starts(kBigIntersection)) {
      out.push_back({Tok::big_intersection, std::string(kBigIntersection), col}), i += kBigIntersection.size();
    } else {
      syntax_error(col, "unexpected character '" + std::string(1, c) + "'");
    }
  }
  out.push_back({Tok::end, "", text.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  NodePtr parse() {
    NodePtr root = union_level();
    if (peek().type != Tok::end) syntax_error(peek().column, "unexpected '" + peek().text + "'");
    return root;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  static NodePtr binary(Node::Kind kind, NodePtr l, NodePtr r) {
    return std::make_shared<const Node>(Node{kind, {}, std::move(l), std::move(r)});
  }

  NodePtr union_level() {
    NodePtr node = intersection_level();
    while (peek().type == Tok::union_) {
      take();
      node = binary(Node::Kind::union_, node, intersection_level());
    }
    return node;
  }

  NodePtr intersection_level() {
    NodePtr node = unary();
    while (peek().type == Tok::intersection) {
      take();
      node = binary(Node::Kind::intersection, node, unary());
    }
    return node;
  }

  NodePtr unary() {
    if (peek().type == Tok::complement_prefix) {
      take();
      return binary(Node::Kind::complement, unary(), nullptr);
    }
    NodePtr node = primary();
    while (peek().type == Tok::complement_postfix) {
      take();
      node = binary(Node::Kind::complement, node, nullptr);
    }
    return node;
  }

  std::string family_name() {
    const Token& t = take();
    if (t.type != Tok::name) syntax_error(t.column, "expected a family name");
    return t.text;
  }

  NodePtr primary() {
    const Token& t = take();
    switch (t.type) {
      case Tok::lparen: {
        NodePtr inner = union_level();
        if (take().type != Tok::rparen) syntax_error(tokens_[pos_ - 1].column, "expected ')'");
        return inner;
      }
      case Tok::big_union:
        return std::make_shared<const Node>(Node{Node::Kind::family_union, family_name(), nullptr, nullptr});
      case Tok::big_intersection:
        return std::make_shared<const Node>(Node{Node::Kind::family_intersection, family_name(), nullptr, nullptr});
      case Tok::name:
        if ((t.text == "union" || t.text == "inter") && peek().type == Tok::lparen) {
          take();
          std::string name = family_name();
          if (take().type != Tok::rparen) syntax_error(tokens_[pos_ - 1].column, "expected ')'");
          const auto kind = t.text == "union" ? Node::Kind::family_union : Node::Kind::family_intersection;
          return std::make_shared<const Node>(Node{kind, std::move(name), nullptr, nullptr});
        }
        return std::make_shared<const Node>(Node{Node::Kind::set, t.text, nullptr, nullptr});
      case Tok::end:
        syntax_error(t.column, "unexpected end of expression");
      default:
        break;
    }
    syntax_error(t.column, "unexpected '" + t.text + "'");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

Hfs eval_node(const Node& node, const Binding& binding) {
  switch (node.kind) {
    case Node::Kind::set:
      return binding.set(node.name);
    case Node::Kind::family_union:
      return family_fold(SetOp::union_, binding.family(node.name));
    case Node::Kind::family_intersection:
      return family_fold(SetOp::intersection, binding.family(node.name));
    case Node::Kind::complement:
      return complement(eval_node(*node.lhs, binding));
    case Node::Kind::union_:
      return combine(SetOp::union_, eval_node(*node.lhs, binding), eval_node(*node.rhs, binding));
    case Node::Kind::intersection:
      return combine(SetOp::intersection, eval_node(*node.lhs, binding), eval_node(*node.rhs, binding));
  }
  throw Error("corrupt expression node");
}

int precedence(const Node& node) {
  switch (node.kind) {
    case Node::Kind::union_: return 1;
    case Node::Kind::intersection: return 2;
    case Node::Kind::complement: return 3;
    default: return 4;
  }
}

std::string render(const Node& node, int min_prec) {
  std::string out;
  switch (node.kind) {
    case Node::Kind::set: out = node.name; break;
    case Node::Kind::family_union: out = std::string(kBigUnion) + node.name; break;
    case Node::Kind::family_intersection: out = std::string(kBigIntersection) + node.name; break;
    case Node::Kind::complement: out = render(*node.lhs, 4) + std::string(kComplement); break;
    case Node::Kind::union_:
    case Node::Kind::intersection: {
      // Mixed ∪/∩ operands are parenthesized even where precedence makes it
      // unnecessary; same-operator chains stay flat on the left.
      const auto operand = [&](const Node& child, bool right) {
        const bool binary = child.kind == Node::Kind::union_ || child.kind == Node::Kind::intersection;
        if (binary && (child.kind != node.kind || right)) return "(" + render(child, 0) + ")";
        return render(child, binary ? 0 : 3);
      };
      out = operand(*node.lhs, false) +
            std::string(node.kind == Node::Kind::union_ ? kUnion : kIntersection) + operand(*node.rhs, true);
      break;
    }
  }
  // Family folds render as a prefix operator; parenthesize them under ᶜ.
  const bool fold = node.kind == Node::Kind::family_union || node.kind == Node::Kind::family_intersection;
  if (precedence(node) < min_prec || (fold && min_prec == 4)) return "(" + out + ")";
  return out;
}

void collect(const Node& node, bool families, std::vector<std::string>& out) {
  const bool is_set = node.kind == Node::Kind::set;
  const bool is_fold = node.kind == Node::Kind::family_union || node.kind == Node::Kind::family_intersection;
  if ((families ? is_fold : is_set) && std::find(out.begin(), out.end(), node.name) == out.end())
    out.push_back(node.name);
  if (node.lhs) collect(*node.lhs, families, out);
  if (node.rhs) collect(*node.rhs, families, out);
}

}  // namespace

Expr Expr::parse(std::string_view text) { return Expr(Parser(text).parse()); }

Hfs Expr::eval(const Binding& binding) const { return eval_node(*root_, binding); }

std::string Expr::to_string() const { return render(*root_, 0); }

std::vector<std::string> Expr::set_names() const {
  std::vector<std::string> out;
  collect(*root_, false, out);
  return out;
}

std::vector<std::string> Expr::family_names() const {
  std::vector<std::string> out;
  collect(*root_, true, out);
  return out;
}

}  // namespace hfa
