#include "leaktight/expression.hpp"

#include <algorithm>
#include <cctype>

#include "leaktight/error.hpp"

namespace leaktight {

DerivationTree DerivationTree::identity() { return DerivationTree(std::make_shared<Node>()); }

DerivationTree DerivationTree::letter(Letter a) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Letter;
  node->letter = a;
  return DerivationTree(std::move(node));
}

DerivationTree DerivationTree::concat(DerivationTree left, DerivationTree right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Concat;
  node->sharp_height = std::max(left.sharp_height(), right.sharp_height());
  node->size = left.size() + right.size() + 1;
  node->left = std::make_shared<const DerivationTree>(std::move(left));
  node->right = std::make_shared<const DerivationTree>(std::move(right));
  return DerivationTree(std::move(node));
}

DerivationTree DerivationTree::iterate(DerivationTree child) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Iterate;
  node->sharp_height = child.sharp_height() + 1;
  node->size = child.size() + 1;
  node->left = std::make_shared<const DerivationTree>(std::move(child));
  return DerivationTree(std::move(node));
}

const DerivationTree& DerivationTree::left() const {
  if (!node_->left) throw InvalidArgument("derivation node has no operand");
  return *node_->left;
}

const DerivationTree& DerivationTree::right() const {
  if (!node_->right) throw InvalidArgument("derivation node has no right operand");
  return *node_->right;
}

bool operator==(const DerivationTree& a, const DerivationTree& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case DerivationTree::Kind::Identity:
      return true;
    case DerivationTree::Kind::Letter:
      return a.letter_index() == b.letter_index();
    case DerivationTree::Kind::Iterate:
      return a.child() == b.child();
    case DerivationTree::Kind::Concat:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

namespace {

void render(const DerivationTree& t, const ProbAutomaton& aut, std::string& out) {
  switch (t.kind()) {
    case DerivationTree::Kind::Identity:
      out += "eps";
      return;
    case DerivationTree::Kind::Letter:
      out += aut.letter_name(t.letter_index());
      return;
    case DerivationTree::Kind::Concat:
      out += "concat(";
      render(t.left(), aut, out);
      out += ", ";
      render(t.right(), aut, out);
      out += ')';
      return;
    case DerivationTree::Kind::Iterate:
      out += "iter(";
      render(t.child(), aut, out);
      out += ')';
      return;
  }
}

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const ProbAutomaton& aut) : text_(text), aut_(aut) {}

  DerivationTree parse() {
    DerivationTree t = expr();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  DerivationTree expr() {
    std::string name = token();
    if (name.empty()) fail("expected an expression");
    if (name == "eps") return DerivationTree::identity();
    if (name == "concat") {
      expect('(');
      DerivationTree l = expr();
      expect(',');
      DerivationTree r = expr();
      expect(')');
      return DerivationTree::concat(std::move(l), std::move(r));
    }
    if (name == "iter") {
      expect('(');
      DerivationTree c = expr();
      expect(')');
      return DerivationTree::iterate(std::move(c));
    }
    auto a = aut_.find_letter(name);
    if (!a) fail("unknown letter '" + name + "'");
    return DerivationTree::letter(*a);
  }

  std::string token() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           text_[pos_] != ',' && !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw InvalidArgument("expression, offset " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view text_;
  const ProbAutomaton& aut_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_expression(const DerivationTree& tree, const ProbAutomaton& aut) {
  std::string out;
  render(tree, aut, out);
  return out;
}

DerivationTree parse_expression(std::string_view text, const ProbAutomaton& aut) {
  return ExpressionParser(text, aut).parse();
}

std::vector<ExtendedLimitWord> letter_generators(const ProbAutomaton& aut) {
  std::vector<ExtendedLimitWord> gens;
  gens.reserve(aut.num_letters());
  for (Letter a = 0; a < aut.num_letters(); ++a) {
    gens.emplace_back(LimitWord::support_of(aut.matrix(a)));
  }
  return gens;
}

ExtendedLimitWord evaluate(const DerivationTree& tree, const ProbAutomaton& aut) {
  switch (tree.kind()) {
    case DerivationTree::Kind::Identity:
      return ExtendedLimitWord::identity(aut.num_states());
    case DerivationTree::Kind::Letter:
      if (tree.letter_index() >= aut.num_letters()) throw InvalidArgument("letter out of range");
      return ExtendedLimitWord(LimitWord::support_of(aut.matrix(tree.letter_index())));
    case DerivationTree::Kind::Concat:
      return ext_concat(evaluate(tree.left(), aut), evaluate(tree.right(), aut));
    case DerivationTree::Kind::Iterate:
      return ext_iterate(evaluate(tree.child(), aut));
  }
  throw InvalidArgument("corrupt derivation tree");
}

}  // namespace leaktight
