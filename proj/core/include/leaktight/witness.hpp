#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leaktight/automaton.hpp"
#include "leaktight/expression.hpp"
#include "leaktight/monoid.hpp"

namespace leaktight {

enum class WitnessKind { Value1, Leak, NonSimplicity };

std::string to_string(WitnessKind kind);

/// A certificate found in a closure. `values` and `derivations` are parallel:
///   Value1        one element u;               states empty
///   Leak          one element (u, u+);         states {(r, q)}
///   NonSimplicity three elements u, v, w;      states {(r, t)}
/// For Value1 and NonSimplicity only the first components matter.
struct WitnessReport {
  WitnessKind kind = WitnessKind::Value1;
  std::vector<std::size_t> elements;
  std::vector<ExtendedLimitWord> values;
  std::vector<DerivationTree> derivations;
  std::vector<std::pair<State, State>> states;
};

/// u(s,t) = 1 implies t final, for every s in the initial support.
bool is_value1_witness(const LimitWord& u, const ProbAutomaton& aut);

/// r, q u-recurrent, u(r,q) = 0 and u+(r,q) = 1, with (u, u+) idempotent.
bool is_leak_witness(const ExtendedLimitWord& e, State r, State q);

/// u v# w idempotent with r recurrent for it, (u v)(r,t) = 1, t v-transient.
bool is_non_simplicity_witness(const LimitWord& u, const LimitWord& v, const LimitWord& w, State r,
                               State t);

/// Value-1 witness of least sharp height, then least derivation size.
std::optional<WitnessReport> find_value1_witness(const MonoidClosure& closure,
                                                 const ProbAutomaton& aut);

/// Leak witness with the smallest (r, q), then the smallest derivation.
std::optional<WitnessReport> find_leak_witness(const MonoidClosure& closure);

/// Every (element, r, q) leak witness, ordered by (r, q) then derivation size.
std::vector<WitnessReport> all_leak_witnesses(const MonoidClosure& closure);

/// Searches the Markov monoid for a triple (u, v, w). Decompositions u v# w
/// read off the derivations of leaking elements are tried first, then an
/// exhaustive search over all triples.
std::optional<WitnessReport> find_non_simplicity_witness(const MonoidClosure& closure);

/// Re-derives every value from its derivation over `aut` and checks the
/// defining conditions from scratch.
bool recheck(const WitnessReport& report, const ProbAutomaton& aut);

}  // namespace leaktight
