#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "leaktight/automaton.hpp"
#include "leaktight/expression.hpp"
#include "leaktight/extended_limit_word.hpp"

namespace leaktight {

enum class SaturationStrategy {
  /// Each round multiplies every element on the right by every atom (letter
  /// or iterate) not yet combined with it. Every element is a product of
  /// atoms, so this reaches the same closure in O(|closure| * |atoms|).
  RightAtoms,
  /// Each round forms all products with at least one operand from the
  /// previous round. O(|closure|^2); kept as a reference.
  Pairwise,
};

struct SaturationOptions {
  std::size_t max_elements = 1'000'000;
  SaturationStrategy strategy = SaturationStrategy::RightAtoms;
};

/// One step of a stored derivation, referring to earlier elements by index.
struct DerivationStep {
  DerivationTree::Kind kind = DerivationTree::Kind::Identity;
  Letter letter = 0;
  std::size_t left = 0;
  std::size_t right = 0;
};

/// The extended Markov monoid of an automaton: every extended limit-word
/// reachable from (1,1) and the letter pairs under concatenation and
/// iteration, each with the first derivation the breadth-first search found.
///
/// Element 0 is the identity. Order is deterministic: generators first, then
/// one block per breadth-first round, products before iterates.
class MonoidClosure {
 public:
  std::size_t num_states() const noexcept { return n_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const ExtendedLimitWord& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<ExtendedLimitWord>& elements() const noexcept { return elements_; }
  const DerivationStep& step(std::size_t i) const { return steps_.at(i); }

  std::size_t sharp_height(std::size_t i) const { return height_.at(i); }
  std::size_t derivation_size(std::size_t i) const { return tree_size_.at(i); }
  std::size_t max_sharp_height() const;
  /// Saturation round in which element i first appeared (0 for generators).
  std::size_t round(std::size_t i) const { return round_.at(i); }
  std::size_t rounds() const noexcept { return rounds_; }

  std::optional<std::size_t> find(const ExtendedLimitWord& e) const;
  DerivationTree derivation(std::size_t i) const;

  /// Distinct first components, each paired with the first element carrying it.
  struct Projection {
    std::vector<LimitWord> words;
    std::vector<std::size_t> source;
    std::unordered_map<LimitWord, std::size_t, LimitWordHash> index;
  };
  const Projection& markov_monoid() const noexcept { return markov_; }

 private:
  friend MonoidClosure saturate(std::span<const ExtendedLimitWord> generators, std::size_t n,
                                const SaturationOptions& opts);

  std::size_t n_ = 0;
  std::vector<ExtendedLimitWord> elements_;
  std::vector<DerivationStep> steps_;
  std::vector<std::size_t> height_;
  std::vector<std::size_t> tree_size_;
  std::vector<std::size_t> round_;
  std::size_t rounds_ = 0;
  std::unordered_map<ExtendedLimitWord, std::size_t, ExtendedLimitWordHash> index_;
  Projection markov_;
};

/// Saturates the generators of `aut` (identity plus letter supports).
/// Throws BudgetExceeded as soon as the closure outgrows `opts.max_elements`.
MonoidClosure saturate(const ProbAutomaton& aut, const SaturationOptions& opts = {});

/// Same, for explicit generators on `n` states. Generator i is recorded as
/// letter i in derivations.
MonoidClosure saturate(std::span<const ExtendedLimitWord> generators, std::size_t n,
                       const SaturationOptions& opts = {});

/// True when one more round of concatenations and iterations adds nothing.
bool verify_closed(const MonoidClosure& closure);

}  // namespace leaktight
