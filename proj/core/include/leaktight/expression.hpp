#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "leaktight/automaton.hpp"
#include "leaktight/extended_limit_word.hpp"

namespace leaktight {

/// How a monoid element was obtained from the generators: the identity, a
/// letter, a concatenation, or an iteration. Trees share subtrees and are
/// immutable.
class DerivationTree {
 public:
  enum class Kind { Identity, Letter, Concat, Iterate };

  static DerivationTree identity();
  static DerivationTree letter(Letter a);
  static DerivationTree concat(DerivationTree left, DerivationTree right);
  static DerivationTree iterate(DerivationTree child);

  Kind kind() const noexcept { return node_->kind; }
  /// Only meaningful for Letter nodes.
  Letter letter_index() const noexcept { return node_->letter; }
  /// Left operand of Concat, or the operand of Iterate.
  const DerivationTree& left() const;
  const DerivationTree& right() const;
  const DerivationTree& child() const { return left(); }

  /// Nesting depth of Iterate nodes.
  std::size_t sharp_height() const noexcept { return node_->sharp_height; }
  /// Number of nodes.
  std::size_t size() const noexcept { return node_->size; }

  friend bool operator==(const DerivationTree& a, const DerivationTree& b);

 private:
  struct Node {
    Kind kind = Kind::Identity;
    Letter letter = 0;
    std::shared_ptr<const DerivationTree> left;
    std::shared_ptr<const DerivationTree> right;
    std::size_t sharp_height = 0;
    std::size_t size = 1;
  };
  explicit DerivationTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Renders the tree with the witness grammar:
///
///     expr := letter | eps | concat(expr, expr) | iter(expr)
std::string to_expression(const DerivationTree& tree, const ProbAutomaton& aut);

/// Parses the witness grammar. Whitespace is ignored between tokens.
/// Throws InvalidArgument on syntax errors and unknown letters.
DerivationTree parse_expression(std::string_view text, const ProbAutomaton& aut);

/// The extended limit-word denoted by the tree over `aut`'s letter supports.
/// Throws InvalidArgument if an iteration is applied to a non-idempotent value.
ExtendedLimitWord evaluate(const DerivationTree& tree, const ProbAutomaton& aut);

/// Letter generators (supp a, supp a) of an automaton.
std::vector<ExtendedLimitWord> letter_generators(const ProbAutomaton& aut);

}  // namespace leaktight
