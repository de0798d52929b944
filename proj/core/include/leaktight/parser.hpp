#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "leaktight/automaton.hpp"

namespace leaktight {

/// Reads the line-oriented automaton format:
///
///     automaton NAME
///     alphabet a b
///     states 0 L1 R1
///     initial 0                 (or: initial 0:1/2 R1:1/2)
///     final L1
///     priority 0:1 L1:2         (optional)
///     trans 0 b L1:1/2 R1:1/2
///
/// '#' starts a comment. Every (state, letter) pair needs exactly one trans
/// line whose weights sum to 1. Errors throw ParseError with line and column.
ProbAutomaton parse_automaton(std::string_view text);
ProbAutomaton parse_automaton(std::istream& in);

/// Reads a file; a missing file is reported as ParseError at line 0.
ProbAutomaton load_automaton(const std::filesystem::path& path);

/// Serializes in the format accepted by parse_automaton.
std::string write_automaton(const ProbAutomaton& aut);

}  // namespace leaktight
