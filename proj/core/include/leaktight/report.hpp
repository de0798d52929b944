#pragma once

#include <string>
#include <string_view>

#include "leaktight/automaton.hpp"
#include "leaktight/decision.hpp"
#include "leaktight/witness.hpp"

namespace leaktight {

/// "VALUE1_TRUE witness=iter(a)", "NOT_LEAKTIGHT leak=(r=L1,q=L2) witness=...",
/// or "VALUE1_FALSE_LEAKTIGHT".
std::string verdict_line(const Verdict& verdict, const ProbAutomaton& aut);

/// "leak=(r=L1,q=L2)" style summary of a witness's states.
std::string witness_states(const WitnessReport& report, const ProbAutomaton& aut);

/// JSON document with the outcome, the witness (kind, states, derivation
/// expressions and their limit-words as 0/1 rows) and closure statistics.
/// Wall time is left out so that reports are reproducible byte for byte.
std::string verdict_json(const Verdict& verdict, const ProbAutomaton& aut);

/// Re-parses each derivation in a verdict_json document, evaluates it over
/// `aut`, compares against the recorded limit-words and re-checks the witness
/// conditions for the recorded outcome. Returns an empty string when
/// everything holds, otherwise a description of the first mismatch.
std::string verify_report(std::string_view json_text, const ProbAutomaton& aut);

std::string parity_json(const ParityReductionResult& result, const ProbAutomaton& aut);

}  // namespace leaktight
