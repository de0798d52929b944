#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leaktight/automaton.hpp"
#include "leaktight/monoid.hpp"
#include "leaktight/witness.hpp"

namespace leaktight {

enum class Outcome { Value1True, Value1FalseLeaktight, NotLeaktight };

/// "VALUE1_TRUE", "VALUE1_FALSE_LEAKTIGHT" or "NOT_LEAKTIGHT".
std::string to_string(Outcome outcome);
std::optional<Outcome> parse_outcome(std::string_view text);

struct ClosureStats {
  std::size_t elements = 0;
  std::size_t markov_elements = 0;
  std::size_t max_sharp_height = 0;
  std::size_t rounds = 0;
  double wall_seconds = 0.0;
};

ClosureStats stats_of(const MonoidClosure& closure, double wall_seconds = 0.0);

/// Value1True carries a value-1 witness, NotLeaktight a leak witness,
/// Value1FalseLeaktight no witness.
struct Verdict {
  Outcome outcome = Outcome::Value1FalseLeaktight;
  std::optional<WitnessReport> witness;
  ClosureStats stats;
};

/// Value 1 for finite words. The priority function, if any, is ignored.
Verdict decide(const ProbAutomaton& aut, const SaturationOptions& opts = {});
/// Same, reusing a closure of an automaton with the same letter supports.
Verdict decide(const ProbAutomaton& aut, const MonoidClosure& closure);

struct LeaktightResult {
  bool leaktight = true;
  std::optional<WitnessReport> leak;
  ClosureStats stats;
};

LeaktightResult is_leaktight(const ProbAutomaton& aut, const SaturationOptions& opts = {});

struct RankFunction {
  std::vector<std::size_t> rank;
};

/// rank(s) <= rank(t) along every positive transition, and for each state and
/// letter at most one successor shares the state's rank.
bool check_rank_function(const ProbAutomaton& aut, const RankFunction& rank);

/// A rank function if one exists. Ranks are constant on strongly connected
/// components of the transition graph, so the automaton is hierarchical iff no
/// state has two successors under one letter inside its own component; the
/// returned ranks are the longest-path levels of the component DAG.
std::optional<RankFunction> is_hierarchical(const ProbAutomaton& aut);

enum class ParityStatus { True, False, Uncertified };
std::string to_string(ParityStatus status);

struct SubsetRecord {
  std::vector<State> subset;
  Outcome reach = Outcome::Value1FalseLeaktight;    // A(R)
  Outcome tracked = Outcome::Value1FalseLeaktight;  // A x M from R_c
  ParityStatus status = ParityStatus::False;
};

/// Per-subset verdicts in the order examined (smallest subsets first, then
/// lexicographic) and the overall answer. A subset is True when both automata
/// have value 1, False when either is certified below 1, Uncertified
/// otherwise; enumeration stops at the first True subset.
struct ParityReductionResult {
  ParityStatus overall = ParityStatus::False;
  std::optional<std::vector<State>> witness_subset;
  std::vector<SubsetRecord> records;
};

inline constexpr std::size_t kMaxParityStates = 12;

/// The automaton A(R): A with final states R, priority dropped.
ProbAutomaton parity_reach_automaton(const ProbAutomaton& aut, std::span<const State> subset);

/// A x M with initial distribution uniform over {(q, c(q)) | q in R} and final
/// states {(q, e) | q in R, e even}.
ProbAutomaton parity_tracked_automaton(const ProbAutomaton& aut, std::span<const State> subset);

/// Throws InvalidArgument without a priority function or beyond
/// kMaxParityStates states.
ParityReductionResult parity_value1(const ProbAutomaton& aut, const SaturationOptions& opts = {});

}  // namespace leaktight
