#pragma once

#include <filesystem>
#include <string>

#include "leaktight/automaton.hpp"
#include "leaktight/extended_limit_word.hpp"
#include "leaktight/monoid.hpp"

namespace leaktight {

/// Graphviz digraph: one node per state, u-edges solid, edges of u+ that are
/// not in u dashed and labelled "+".
std::string to_dot(const ExtendedLimitWord& e, const ProbAutomaton& aut,
                   const std::string& graph_name = "w");
std::string to_dot(const LimitWord& u, const ProbAutomaton& aut,
                   const std::string& graph_name = "w");

/// Writes element_<i>.dot for every closure element and a manifest.txt with
/// one line per element: file, sharp height, derivation size, expression.
void export_closure_dot(const MonoidClosure& closure, const ProbAutomaton& aut,
                        const std::filesystem::path& dir);

}  // namespace leaktight
