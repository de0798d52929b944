#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "leaktight/rational.hpp"

namespace leaktight {

using State = std::size_t;
using Letter = std::size_t;
using Word = std::vector<Letter>;

/// Exact probability vector over the states of an automaton.
///
/// Every weight lies in [0,1] and the weights sum to exactly 1; the
/// constructor rejects anything else.
class Distribution {
 public:
  Distribution() = default;
  explicit Distribution(std::vector<Rational> weights);

  static Distribution point(std::size_t num_states, State s);
  /// Uniform over `states`; throws when `states` is empty or out of range.
  static Distribution uniform(std::size_t num_states, std::span<const State> states);

  std::size_t size() const noexcept { return weights_.size(); }
  const Rational& operator[](State s) const { return weights_.at(s); }
  std::span<const Rational> weights() const noexcept { return weights_; }
  std::vector<State> support() const;

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  std::vector<Rational> weights_;
};

/// Dense |Q| x |Q| matrix of exact probabilities.
class TransitionMatrix {
 public:
  TransitionMatrix() = default;
  explicit TransitionMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  static TransitionMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  const Rational& at(State s, State t) const { return entries_[s * n_ + t]; }
  Rational& at(State s, State t) { return entries_[s * n_ + t]; }
  std::span<const Rational> row(State s) const {
    return std::span<const Rational>(entries_).subspan(s * n_, n_);
  }

  bool is_row_stochastic() const;

  friend TransitionMatrix operator*(const TransitionMatrix& lhs, const TransitionMatrix& rhs);
  friend bool operator==(const TransitionMatrix&, const TransitionMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> entries_;
};

/// A finite probabilistic automaton over finite words, with an initial
/// distribution and an optional priority function (for parity acceptance).
///
/// Instances are immutable once constructed; the constructor validates every
/// structural invariant (complete row-stochastic transition table, unique
/// names, priority total when present).
class ProbAutomaton {
 public:
  ProbAutomaton(std::string name, std::vector<std::string> states, std::vector<std::string> letters,
                Distribution initial, std::vector<TransitionMatrix> letter_matrices,
                std::vector<bool> final_states,
                std::optional<std::vector<unsigned>> priority = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  std::size_t num_states() const noexcept { return states_.size(); }
  std::size_t num_letters() const noexcept { return letters_.size(); }

  const std::string& state_name(State s) const { return states_.at(s); }
  const std::string& letter_name(Letter a) const { return letters_.at(a); }
  const std::vector<std::string>& state_names() const noexcept { return states_; }
  const std::vector<std::string>& letter_names() const noexcept { return letters_; }
  std::optional<State> find_state(std::string_view name) const;
  std::optional<Letter> find_letter(std::string_view name) const;

  const Distribution& initial() const noexcept { return initial_; }
  const TransitionMatrix& matrix(Letter a) const { return matrices_.at(a); }

  bool is_final(State s) const { return final_.at(s); }
  const std::vector<bool>& final_mask() const noexcept { return final_; }
  std::vector<State> final_states() const;

  bool has_priority() const noexcept { return priority_.has_value(); }
  const std::optional<std::vector<unsigned>>& priority() const noexcept { return priority_; }

  /// True when every (state, letter) row is a point mass.
  bool is_deterministic() const;

  ProbAutomaton with_name(std::string name) const;
  ProbAutomaton with_initial(Distribution initial) const;
  ProbAutomaton with_final_states(std::span<const State> finals) const;
  ProbAutomaton without_priority() const;

 private:
  std::string name_;
  std::vector<std::string> states_;
  std::vector<std::string> letters_;
  Distribution initial_;
  std::vector<TransitionMatrix> matrices_;
  std::vector<bool> final_;
  std::optional<std::vector<unsigned>> priority_;
};

/// Name-based construction helper, mostly for fixtures and tests.
class AutomatonBuilder {
 public:
  explicit AutomatonBuilder(std::string name = "automaton") : name_(std::move(name)) {}

  AutomatonBuilder& states(std::vector<std::string> names);
  AutomatonBuilder& alphabet(std::vector<std::string> letters);
  AutomatonBuilder& initial(const std::string& state);
  AutomatonBuilder& initial(std::vector<std::pair<std::string, Rational>> weights);
  AutomatonBuilder& final(std::vector<std::string> names);
  AutomatonBuilder& priority(std::vector<std::pair<std::string, unsigned>> priorities);
  AutomatonBuilder& transition(const std::string& from, const std::string& letter,
                               std::vector<std::pair<std::string, Rational>> targets);

  /// Throws InvalidArgument when a name is unknown or the table is incomplete.
  ProbAutomaton build() const;

 private:
  struct Row {
    std::string from;
    std::string letter;
    std::vector<std::pair<std::string, Rational>> targets;
  };

  std::string name_;
  std::vector<std::string> states_;
  std::vector<std::string> letters_;
  std::vector<std::pair<std::string, Rational>> initial_;
  std::vector<std::string> final_;
  std::optional<std::vector<std::pair<std::string, unsigned>>> priority_;
  std::vector<Row> rows_;
};

/// One step of the induced distribution transformer: sum_q d(q) * Delta(q, a).
Distribution step(const ProbAutomaton& aut, const Distribution& d, Letter a);

/// Distribution after reading `word` from `d`.
Distribution run(const ProbAutomaton& aut, const Distribution& d, std::span<const Letter> word);

/// Exact probability that `word` leads from the initial distribution into a final state.
Rational acceptance_probability(const ProbAutomaton& aut, std::span<const Letter> word);

/// M(s,t) = P(s --word--> t); the empty word gives the identity.
TransitionMatrix transition_matrix(const ProbAutomaton& aut, std::span<const Letter> word);

/// True iff M and M^2 have the same support, M being the word's matrix.
bool is_idempotent_word(const ProbAutomaton& aut, std::span<const Letter> word);

/// Splits a word given as text. Whitespace separates letters when present;
/// otherwise, if every letter name is one character long, each character is a
/// letter; otherwise the whole text is a single letter. Throws on unknown letters.
Word parse_word(const ProbAutomaton& aut, std::string_view text);

std::string word_to_string(const ProbAutomaton& aut, std::span<const Letter> word);

/// Names rejected as letters because the expression grammars reserve them.
bool is_reserved_letter_name(std::string_view name);

}  // namespace leaktight
