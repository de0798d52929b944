#pragma once

#include <span>
#include <string>
#include <vector>

#include "leaktight/automaton.hpp"

namespace leaktight {

/// Disjoint union with initial distribution 1/2 * init_a + 1/2 * init_b.
/// States are renamed "A.<name>" and "B.<name>"; finals are the union.
/// Throws InvalidArgument when the alphabets differ.
ProbAutomaton parallel_compose(const ProbAutomaton& a, const ProbAutomaton& b);

/// n-ary form: component i is entered with probability 1/n. Components are
/// prefixed "A.", "B.", ... ("P26.", "P27.", ... past the 26th).
ProbAutomaton parallel_compose(std::span<const ProbAutomaton> parts);

/// Synchronized product over Q_a x Q_b, states named "(p,q)". Transition
/// weights multiply; the initial distribution is the product distribution and
/// the final states are F_a x F_b.
ProbAutomaton synchronized_product(const ProbAutomaton& a, const ProbAutomaton& b);

/// Deterministic transducer reading states of a probabilistic automaton:
/// next(p, q) is the transducer state after reading automaton state q in p.
class DeterministicTransducer {
 public:
  /// `next[p][q]` for every transducer state p and automaton state q. Throws
  /// InvalidArgument unless the table is total and in range.
  DeterministicTransducer(std::vector<std::string> states, std::size_t input_size,
                          std::vector<std::vector<std::size_t>> next, std::size_t initial = 0);

  std::size_t num_states() const noexcept { return states_.size(); }
  std::size_t input_size() const noexcept { return input_size_; }
  const std::string& state_name(std::size_t p) const { return states_.at(p); }
  std::size_t next(std::size_t p, State q) const { return next_.at(p).at(q); }
  std::size_t initial() const noexcept { return initial_; }

 private:
  std::vector<std::string> states_;
  std::size_t input_size_;
  std::vector<std::vector<std::size_t>> next_;
  std::size_t initial_;
};

/// States (q, p) are laid out as q * |Q_M| + p and named "(q,p)". Reading
/// letter x from (q, p) moves the automaton by Delta_A(q, x) and the
/// transducer to next(p, q). Initial mass sits on (q, m.initial()); finals
/// are F_a x Q_M. Throws when the transducer input alphabet is not Q_a.
ProbAutomaton transducer_compose(const ProbAutomaton& a, const DeterministicTransducer& m);

/// Transducer over the priorities c(Q) of a parity automaton, remembering the
/// minimal priority read so far: next(e, q) = min(e, c(q)). Its states are
/// the distinct priorities in increasing order, named by their value, and it
/// starts at the largest one.
DeterministicTransducer min_priority_tracker(const ProbAutomaton& parity_automaton);

/// Priority value held by state `p` of min_priority_tracker(aut).
unsigned tracker_priority(const ProbAutomaton& parity_automaton, std::size_t p);

}  // namespace leaktight
