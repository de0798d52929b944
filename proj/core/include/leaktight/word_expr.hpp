#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "leaktight/automaton.hpp"

namespace leaktight {

/// A word described by letters, sequences and repetitions, read letter by
/// letter without ever materializing it. Lengths saturate at UINT64_MAX.
class WordExpr {
 public:
  enum class Kind { Letter, Seq, Repeat };

  static WordExpr letter(Letter a);
  static WordExpr empty();
  static WordExpr seq(std::vector<WordExpr> parts);
  static WordExpr repeat(WordExpr body, std::uint64_t count);
  static WordExpr from_word(const Word& word);

  Kind kind() const noexcept { return node_->kind; }
  std::uint64_t length() const noexcept { return node_->length; }

  /// Calls f(letter) for every letter in order.
  template <class F>
  void for_each_letter(F&& f) const {
    const Node& n = *node_;
    switch (n.kind) {
      case Kind::Letter:
        f(n.letter);
        return;
      case Kind::Seq:
        for (const WordExpr& p : n.parts) p.for_each_letter(f);
        return;
      case Kind::Repeat:
        for (std::uint64_t i = 0; i < n.count; ++i) n.parts.front().for_each_letter(f);
        return;
    }
  }

  /// Throws LengthBudgetExceeded when longer than max_length.
  Word materialize(std::uint64_t max_length) const;

  /// E.g. "(b a^4)^16 b".
  std::string to_string(const ProbAutomaton& aut) const;

 private:
  struct Node {
    Kind kind = Kind::Seq;
    Letter letter = 0;
    std::uint64_t count = 0;
    std::vector<WordExpr> parts;
    std::uint64_t length = 0;
  };
  explicit WordExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept;

}  // namespace leaktight
