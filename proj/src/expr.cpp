#include "mcdc/expr.hpp"

#include <cctype>
#include <utility>

namespace mcdc {

Expr Expr::condition(std::string label) {
  Expr e;
  e.kind = Kind::Condition;
  e.label = std::move(label);
  return e;
}

Expr Expr::negation(Expr child) {
  Expr e;
  e.kind = Kind::Negation;
  e.children.push_back(std::move(child));
  return e;
}

Expr Expr::conjunction(std::vector<Expr> children) {
  Expr e;
  e.kind = Kind::Conjunction;
  e.children = std::move(children);
  return e;
}

Expr Expr::disjunction(std::vector<Expr> children) {
  Expr e;
  e.kind = Kind::Disjunction;
  e.children = std::move(children);
  return e;
}

namespace {

struct Token {
  enum class Kind { Identifier, Not, And, Or, LParen, RParen, End };

  Kind kind;
  std::string text;
  std::size_t position;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& current() const { return current_; }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {Token::Kind::End, "", start};
      return;
    }
    char c = text_[pos_];
    if (c == '(') { current_ = {Token::Kind::LParen, "(", start}; ++pos_; return; }
    if (c == ')') { current_ = {Token::Kind::RParen, ")", start}; ++pos_; return; }
    if (c == '!') { current_ = {Token::Kind::Not, "!", start}; ++pos_; return; }
    if (c == '&' || c == '|') {
      if (pos_ + 1 >= text_.size() || text_[pos_ + 1] != c)
        throw SyntaxError(start, std::string("expected '") + c + c + "'");
      pos_ += 2;
      current_ = {c == '&' ? Token::Kind::And : Token::Kind::Or,
                  std::string(2, c), start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size()
             && (std::isalnum(static_cast<unsigned char>(text_[pos_]))
                 || text_[pos_] == '_'))
        ++pos_;
      current_ = {Token::Kind::Identifier, text_.substr(start, pos_ - start), start};
      return;
    }
    throw SyntaxError(start, std::string("unexpected character '") + c + "'");
  }

private:
  const std::string& text_;
  std::size_t pos_ = 0;
  Token current_;
};

// Appends rhs to an n-ary node, flattening same-operator children.
void append_operand(std::vector<Expr>& children, Expr::Kind op, Expr rhs) {
  if (rhs.kind == op) {
    for (auto& c : rhs.children) children.push_back(std::move(c));
  } else {
    children.push_back(std::move(rhs));
  }
}

class Parser {
public:
  explicit Parser(const std::string& text) : lexer_(text) {}

  Expr parse_expression() {
    Expr result = parse_or();
    if (lexer_.current().kind != Token::Kind::End)
      throw SyntaxError(lexer_.current().position,
                        "unexpected '" + lexer_.current().text + "'");
    return result;
  }

private:
  Expr parse_or() {
    Expr first = parse_and();
    if (lexer_.current().kind != Token::Kind::Or) return first;
    std::vector<Expr> children;
    append_operand(children, Expr::Kind::Disjunction, std::move(first));
    while (lexer_.current().kind == Token::Kind::Or) {
      lexer_.advance();
      append_operand(children, Expr::Kind::Disjunction, parse_and());
    }
    return Expr::disjunction(std::move(children));
  }

  Expr parse_and() {
    Expr first = parse_unary();
    if (lexer_.current().kind != Token::Kind::And) return first;
    std::vector<Expr> children;
    append_operand(children, Expr::Kind::Conjunction, std::move(first));
    while (lexer_.current().kind == Token::Kind::And) {
      lexer_.advance();
      append_operand(children, Expr::Kind::Conjunction, parse_unary());
    }
    return Expr::conjunction(std::move(children));
  }

  Expr parse_unary() {
    if (lexer_.current().kind == Token::Kind::Not) {
      lexer_.advance();
      return Expr::negation(parse_unary());
    }
    return parse_primary();
  }

  Expr parse_primary() {
    const Token& tok = lexer_.current();
    switch (tok.kind) {
    case Token::Kind::Identifier: {
      if (tok.text == "true" || tok.text == "false")
        throw SyntaxError(tok.position, "constant '" + tok.text
                          + "' is not a condition");
      Expr e = Expr::condition(tok.text);
      lexer_.advance();
      return e;
    }
    case Token::Kind::LParen: {
      lexer_.advance();
      Expr e = parse_or();
      if (lexer_.current().kind != Token::Kind::RParen)
        throw SyntaxError(lexer_.current().position, "expected ')'");
      lexer_.advance();
      return e;
    }
    case Token::Kind::End:
      throw SyntaxError(tok.position, "expected a condition, got end of input");
    default:
      throw SyntaxError(tok.position, "expected a condition, got '"
                        + tok.text + "'");
    }
  }

  Lexer lexer_;
};

bool all_whitespace(const std::string& text) {
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

using Node = IndexedExpr::Node;

Node make_op(Node::Kind kind, std::vector<Node> children) {
  // Flatten children carrying the same operator; keeps the n-ary form stable
  // under De Morgan rewrites.
  std::vector<Node> flat;
  for (auto& c : children) {
    if (c.kind == kind) {
      for (auto& g : c.children) flat.push_back(std::move(g));
    } else {
      flat.push_back(std::move(c));
    }
  }
  Node n;
  n.kind = kind;
  n.children = std::move(flat);
  return n;
}

Node push_negations(const Expr& e, bool negate, int& next_index) {
  switch (e.kind) {
  case Expr::Kind::Condition: {
    Node n;
    n.kind = Node::Kind::Condition;
    n.label = e.label;
    n.negated = negate;
    n.index = ++next_index;
    return n;
  }
  case Expr::Kind::Negation:
    return push_negations(e.children.front(), !negate, next_index);
  case Expr::Kind::Conjunction:
  case Expr::Kind::Disjunction: {
    bool conj = (e.kind == Expr::Kind::Conjunction) != negate;
    std::vector<Node> children;
    children.reserve(e.children.size());
    for (const auto& c : e.children)
      children.push_back(push_negations(c, negate, next_index));
    return make_op(conj ? Node::Kind::Conjunction : Node::Kind::Disjunction,
                   std::move(children));
  }
  }
  throw InvariantViolation("unreachable expression kind");
}

bool evaluate_node(const Node& n, const InputVector& v) {
  switch (n.kind) {
  case Node::Kind::Condition:
    return v[n.index - 1];
  case Node::Kind::Conjunction:
    for (const auto& c : n.children)
      if (!evaluate_node(c, v)) return false;
    return true;
  case Node::Kind::Disjunction:
    for (const auto& c : n.children)
      if (evaluate_node(c, v)) return true;
    return false;
  }
  throw InvariantViolation("unreachable node kind");
}

void render_node(const Node& n, Node::Kind parent, std::string& out) {
  if (n.kind == Node::Kind::Condition) {
    if (n.negated) out += '!';
    out += n.label;
    return;
  }
  bool parens = parent == Node::Kind::Conjunction
                && n.kind == Node::Kind::Disjunction;
  if (parens) out += '(';
  const char* sep = n.kind == Node::Kind::Conjunction ? " && " : " || ";
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    if (i > 0) out += sep;
    render_node(n.children[i], n.kind, out);
  }
  if (parens) out += ')';
}

} // namespace

Expr parse(const std::string& text) {
  if (text.empty() || all_whitespace(text)) throw EmptyInput();
  return Parser(text).parse_expression();
}

IndexedExpr normalize(const Expr& e) {
  IndexedExpr result;
  int next_index = 0;
  result.root = push_negations(e, false, next_index);
  result.condition_count = next_index;
  if (next_index > 64) throw TooManyConditions(next_index);
  return result;
}

bool evaluate(const IndexedExpr& e, const InputVector& v) {
  if (static_cast<int>(v.size()) != e.condition_count)
    throw LengthMismatch(e.condition_count, static_cast<int>(v.size()));
  return evaluate_node(e.root, v);
}

std::string to_string(const IndexedExpr& e) {
  std::string out;
  render_node(e.root, IndexedExpr::Node::Kind::Condition, out);
  return out;
}

} // namespace mcdc
