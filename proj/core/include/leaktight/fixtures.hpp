#pragma once

#include <span>
#include <string>
#include <vector>

#include "leaktight/automaton.hpp"

namespace leaktight {

/// Five states 0, L1, R1, L2, R2 over {a, b}. From 0, b splits evenly to L1
/// and R1; a keeps L1 with probability x (else back to 0) and R1 with
/// probability 1 - x; b then moves L1 to L2 and R1 to R2, both sinks. Final
/// state L2. Value 1 iff x > 1/2. Requires 0 < x < 1.
ProbAutomaton fig1(const Rational& x);

/// Three states 0, L1, L2 over {a, b}: b moves 0 to L1 and L1 to L2, a on L1
/// stays with probability 1/2 and falls back to 0 otherwise, L2 is a sink.
/// (a^n b) leaks from L1 to L2.
ProbAutomaton fig2();

/// s --a--> s or f with probability 1/2 each; f is a final sink. P(a^n) = 1 - 2^-n.
ProbAutomaton two_state_loop();

/// One state, final or not, looping on every letter.
ProbAutomaton accepting_sink(std::vector<std::string> alphabet = {"a", "b"});
ProbAutomaton rejecting_sink(std::vector<std::string> alphabet = {"a", "b"});

/// q0 .. q{length-1}: a moves one step forward (the last state stays), b
/// stays. Initial q0, final the last state.
ProbAutomaton deterministic_chain(std::size_t length);

/// n-fold parallel composition, each component entered with probability 1/n.
ProbAutomaton pspace_composition(std::span<const ProbAutomaton> parts);

/// Parity fixtures built on two_state_loop: priorities (s, f) = (2, 0),
/// (1, 3) and (1, 0).
ProbAutomaton parity_all_even();
ProbAutomaton parity_all_odd();
ProbAutomaton parity_two_state();

/// Two leaktight examples: one with value 1 that is not hierarchical, one
/// (hierarchical) without value 1.
ProbAutomaton leaktight_value1_example();
ProbAutomaton leaktight_no_value1_example();

struct NamedFixture {
  std::string name;
  ProbAutomaton automaton;
  std::string description;
};

/// Every fixture above, fig1 at x = 1/4, 1/2 and 3/4.
std::vector<NamedFixture> fixture_library();

}  // namespace leaktight
