#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "leaktight/automaton.hpp"
#include "leaktight/expression.hpp"
#include "leaktight/witness.hpp"
#include "leaktight/word_expr.hpp"

namespace leaktight {

struct WordFamily {
  std::function<WordExpr(std::uint64_t n)> generator;
  std::string description;
};

/// Word for a derivation at index n: letters stay, concatenations
/// concatenate, and an iteration repeats its operand's word n times.
WordExpr synthesize(const DerivationTree& tree, std::uint64_t n);
Word synthesize_word(const DerivationTree& tree, std::uint64_t n,
                     std::uint64_t max_length = std::uint64_t{1} << 26);

WordFamily family_from_derivation(const DerivationTree& tree, const ProbAutomaton& aut);

/// Parses a family such as "(b a^n)^(2^n) b". Items are letters or
/// parenthesised sequences, optionally raised to an exponent built from n,
/// integers, '^', '*' and parentheses. Letters are separated by whitespace;
/// a run of one-character letters may also be written without spaces.
WordFamily parse_family(std::string_view text, const ProbAutomaton& aut);

/// n -> (b a^n)^(2^n) b over the letters named a and b.
WordFamily fig1_family(const ProbAutomaton& aut);

enum class EvalMode { Exact, Float };
std::string to_string(EvalMode mode);

struct EvalOptions {
  /// Words up to this many letters start on the exact path.
  std::uint64_t exact_max_letters = 1'000'000;
  /// The exact path hands over to floating point once a denominator grows
  /// past this many bits.
  std::size_t exact_max_bits = std::size_t{1} << 14;
  /// Hard cap on word length.
  std::uint64_t max_letters = std::uint64_t{1} << 26;
  /// Allowed drift of the floating-point distribution's total mass.
  double mass_tolerance = 1e-9;
};

struct EvalResult {
  std::uint64_t length = 0;
  double acceptance = 0.0;
  /// Present when the whole word was evaluated exactly.
  std::optional<Rational> exact;
  EvalMode mode = EvalMode::Exact;
};

/// Acceptance probability of a streamed word. Throws LengthBudgetExceeded
/// past opts.max_letters.
EvalResult eval_word(const ProbAutomaton& aut, const WordExpr& word, const EvalOptions& opts = {});

struct ProbeSample {
  std::uint64_t n = 0;
  EvalResult result;
};

enum class ProbeVerdict { ConvergesTo1, Inconclusive };
std::string to_string(ProbeVerdict verdict);

struct ConvergenceProbe {
  std::string description;
  std::vector<ProbeSample> samples;
  ProbeVerdict verdict = ProbeVerdict::Inconclusive;
  /// Acceptance never decreased from one sample to the next.
  bool monotone = true;
};

ConvergenceProbe eval_family(const ProbAutomaton& aut, const WordFamily& family,
                             std::span<const std::uint64_t> ns, double tolerance = 1e-3,
                             const EvalOptions& opts = {});

/// Evaluates the witness's synthesized words for n = 1 .. n_max.
/// The witness must be a value-1 witness.
ConvergenceProbe probe_value1(const ProbAutomaton& aut, const WitnessReport& witness,
                              std::uint64_t n_max, double tolerance = 1e-3,
                              const EvalOptions& opts = {});

/// Smallest positive entry over all letter matrices.
Rational min_transition_probability(const ProbAutomaton& aut);

/// "n,word_length,acceptance,mode" with 12 significant digits.
std::string probe_csv(const ConvergenceProbe& probe);

}  // namespace leaktight
