#include "leaktight/oracle.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <tuple>

#include "leaktight/error.hpp"

namespace leaktight {

WordExpr synthesize(const DerivationTree& tree, std::uint64_t n) {
  switch (tree.kind()) {
    case DerivationTree::Kind::Identity:
      return WordExpr::empty();
    case DerivationTree::Kind::Letter:
      return WordExpr::letter(tree.letter_index());
    case DerivationTree::Kind::Concat:
      return WordExpr::seq({synthesize(tree.left(), n), synthesize(tree.right(), n)});
    case DerivationTree::Kind::Iterate:
      return WordExpr::repeat(synthesize(tree.child(), n), n);
  }
  throw InvalidArgument("corrupt derivation tree");
}

Word synthesize_word(const DerivationTree& tree, std::uint64_t n, std::uint64_t max_length) {
  return synthesize(tree, n).materialize(max_length);
}

WordFamily family_from_derivation(const DerivationTree& tree, const ProbAutomaton& aut) {
  return {[tree](std::uint64_t n) { return synthesize(tree, n); }, to_expression(tree, aut)};
}

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    r = saturating_mul(r, base);
    if (r == std::numeric_limits<std::uint64_t>::max() || r == 0 || base == 1) break;
  }
  return r;
}

struct Exponent {
  enum class Kind { N, Const, Pow, Mul } kind = Kind::Const;
  std::uint64_t value = 0;
  std::vector<Exponent> args;

  std::uint64_t eval(std::uint64_t n) const {
    switch (kind) {
      case Kind::N:
        return n;
      case Kind::Const:
        return value;
      case Kind::Pow:
        return saturating_pow(args[0].eval(n), args[1].eval(n));
      case Kind::Mul:
        return saturating_mul(args[0].eval(n), args[1].eval(n));
    }
    return 0;
  }
};

struct FamilyNode {
  bool is_letter = false;
  Letter letter = 0;
  std::vector<FamilyNode> parts;
  std::optional<Exponent> power;

  WordExpr build(std::uint64_t n) const {
    WordExpr base = WordExpr::empty();
    if (is_letter) {
      base = WordExpr::letter(letter);
    } else {
      std::vector<WordExpr> ws;
      for (const FamilyNode& p : parts) ws.push_back(p.build(n));
      base = ws.size() == 1 ? ws.front() : WordExpr::seq(std::move(ws));
    }
    return power ? WordExpr::repeat(std::move(base), power->eval(n)) : base;
  }
};

class FamilyParser {
 public:
  FamilyParser(std::string_view text, const ProbAutomaton& aut) : aut_(aut) { lex(text); }

  FamilyNode parse() {
    FamilyNode root = sequence();
    if (pos_ != tokens_.size()) fail("unexpected '" + tokens_[pos_] + "'");
    return root;
  }

 private:
  void lex(std::string_view text) {
    bool single_chars = true;
    for (const auto& name : aut_.letter_names()) single_chars = single_chars && name.size() == 1;
    std::size_t i = 0;
    while (i < text.size()) {
      char c = text[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (c == '(' || c == ')' || c == '^' || c == '*') {
        tokens_.emplace_back(1, c);
        ++i;
      } else {
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) &&
               std::string_view("()^*").find(text[j]) == std::string_view::npos) {
          ++j;
        }
        std::string word(text.substr(i, j - i));
        bool after_caret = !tokens_.empty() && tokens_.back() == "^";
        if (!after_caret && single_chars && word.size() > 1 && !aut_.find_letter(word)) {
          for (char ch : word) tokens_.emplace_back(1, ch);
        } else {
          tokens_.push_back(word);
        }
        i = j;
      }
    }
  }

  FamilyNode sequence() {
    FamilyNode seq;
    while (pos_ < tokens_.size() && tokens_[pos_] != ")") seq.parts.push_back(item());
    if (seq.parts.empty()) fail("empty word");
    return seq;
  }

  FamilyNode item() {
    FamilyNode node;
    if (peek("(")) {
      ++pos_;
      node = sequence();
      expect(")");
    } else {
      const std::string& name = tokens_[pos_];
      auto a = aut_.find_letter(name);
      if (!a) fail("unknown letter '" + name + "'");
      node.is_letter = true;
      node.letter = *a;
      ++pos_;
    }
    if (peek("^")) {
      ++pos_;
      Exponent e = product();
      if (node.power) {
        FamilyNode outer;
        outer.parts.push_back(std::move(node));
        node = std::move(outer);
      }
      node.power = std::move(e);
    }
    return node;
  }

  Exponent product() {
    Exponent e = power();
    while (peek("*")) {
      ++pos_;
      Exponent m;
      m.kind = Exponent::Kind::Mul;
      m.args = {std::move(e), power()};
      e = std::move(m);
    }
    return e;
  }

  Exponent power() {
    Exponent base = atom();
    if (peek("^")) {
      ++pos_;
      Exponent p;
      p.kind = Exponent::Kind::Pow;
      p.args = {std::move(base), power()};
      return p;
    }
    return base;
  }

  Exponent atom() {
    if (pos_ >= tokens_.size()) fail("missing exponent");
    if (peek("(")) {
      ++pos_;
      Exponent e = product();
      expect(")");
      return e;
    }
    const std::string& t = tokens_[pos_++];
    Exponent e;
    if (t == "n") {
      e.kind = Exponent::Kind::N;
      return e;
    }
    std::size_t used = 0;
    try {
      e.value = std::stoull(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.size() || t.empty() || !std::isdigit(static_cast<unsigned char>(t[0]))) {
      fail("bad exponent '" + t + "'");
    }
    return e;
  }

  bool peek(const char* tok) const { return pos_ < tokens_.size() && tokens_[pos_] == tok; }
  void expect(const char* tok) {
    if (!peek(tok)) fail(std::string("expected '") + tok + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw InvalidArgument("word family: " + msg);
  }

  const ProbAutomaton& aut_;
  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

struct SparseLetter {
  std::vector<std::tuple<State, State, Rational>> exact;
  std::vector<std::tuple<State, State, double>> approx;
};

std::vector<SparseLetter> sparse_letters(const ProbAutomaton& aut) {
  std::vector<SparseLetter> out(aut.num_letters());
  for (Letter a = 0; a < aut.num_letters(); ++a) {
    const TransitionMatrix& m = aut.matrix(a);
    for (State s = 0; s < aut.num_states(); ++s) {
      for (State t = 0; t < aut.num_states(); ++t) {
        if (m.at(s, t) == 0) continue;
        out[a].exact.emplace_back(s, t, m.at(s, t));
        out[a].approx.emplace_back(s, t, m.at(s, t).get_d());
      }
    }
  }
  return out;
}

class DriftError : public Error {
 public:
  using Error::Error;
};

// Streams the word through an exact distribution, switching to doubles once
// denominators outgrow the budget (or straight away when `start_float`).
EvalResult run_word(const ProbAutomaton& aut, const WordExpr& word, const EvalOptions& opts,
                    bool start_float, bool allow_switch) {
  const std::size_t n = aut.num_states();
  const auto letters = sparse_letters(aut);
  EvalResult res;
  res.length = word.length();

  bool exact = !start_float;
  std::vector<Rational> q(aut.initial().weights().begin(), aut.initial().weights().end());
  std::vector<Rational> q_next(n);
  std::vector<double> d(n);
  std::vector<double> d_next(n);
  std::vector<double> comp(n);
  if (!exact) {
    for (State s = 0; s < n; ++s) d[s] = q[s].get_d();
  }
  std::uint64_t steps = 0;

  word.for_each_letter([&](Letter a) {
    ++steps;
    if (exact) {
      for (auto& x : q_next) x = 0;
      for (const auto& [s, t, p] : letters[a].exact) {
        if (q[s] != 0) q_next[t] += q[s] * p;
      }
      q.swap(q_next);
      if (allow_switch && steps % 32 == 0) {
        std::size_t bits = 0;
        for (const auto& x : q) bits = std::max(bits, denominator_bits(x));
        if (bits > opts.exact_max_bits) {
          exact = false;
          for (State s = 0; s < n; ++s) d[s] = q[s].get_d();
        }
      }
      return;
    }
    std::fill(d_next.begin(), d_next.end(), 0.0);
    std::fill(comp.begin(), comp.end(), 0.0);
    for (const auto& [s, t, p] : letters[a].approx) {
      double y = d[s] * p - comp[t];
      double sum = d_next[t] + y;
      comp[t] = (sum - d_next[t]) - y;
      d_next[t] = sum;
    }
    d.swap(d_next);
    double mass = 0.0;
    double c = 0.0;
    for (double x : d) {
      double y = x - c;
      double sum = mass + y;
      c = (sum - mass) - y;
      mass = sum;
    }
    if (!(std::fabs(mass - 1.0) < opts.mass_tolerance)) {
      throw DriftError("floating-point mass drifted to " + std::to_string(mass));
    }
  });

  if (exact) {
    Rational acc = 0;
    for (State s = 0; s < n; ++s) {
      if (aut.is_final(s)) acc += q[s];
    }
    if (acc < 0 || acc > 1) throw Error("acceptance probability outside [0,1]");
    res.exact = acc;
    res.acceptance = acc.get_d();
    res.mode = EvalMode::Exact;
  } else {
    double acc = 0.0;
    for (State s = 0; s < n; ++s) {
      if (aut.is_final(s)) acc += d[s];
    }
    res.acceptance = std::clamp(acc, 0.0, 1.0);
    res.mode = EvalMode::Float;
  }
  return res;
}

}  // namespace

WordFamily parse_family(std::string_view text, const ProbAutomaton& aut) {
  FamilyNode root = FamilyParser(text, aut).parse();
  return {[root](std::uint64_t n) { return root.build(n); }, std::string(text)};
}

WordFamily fig1_family(const ProbAutomaton& aut) { return parse_family("(b a^n)^(2^n) b", aut); }

std::string to_string(EvalMode mode) { return mode == EvalMode::Exact ? "exact" : "float"; }

std::string to_string(ProbeVerdict verdict) {
  return verdict == ProbeVerdict::ConvergesTo1 ? "converges_to_1" : "inconclusive";
}

EvalResult eval_word(const ProbAutomaton& aut, const WordExpr& word, const EvalOptions& opts) {
  if (word.length() > opts.max_letters) {
    throw LengthBudgetExceeded("word of length " + std::to_string(word.length()) +
                               " exceeds the budget of " + std::to_string(opts.max_letters));
  }
  const bool exact_first = word.length() <= opts.exact_max_letters;
  try {
    return run_word(aut, word, opts, !exact_first, true);
  } catch (const DriftError&) {
    if (!exact_first) throw;
    return run_word(aut, word, opts, false, false);
  }
}

ConvergenceProbe eval_family(const ProbAutomaton& aut, const WordFamily& family,
                             std::span<const std::uint64_t> ns, double tolerance,
                             const EvalOptions& opts) {
  ConvergenceProbe probe;
  probe.description = family.description;
  for (std::uint64_t n : ns) {
    EvalResult r = eval_word(aut, family.generator(n), opts);
    if (!probe.samples.empty() && r.acceptance < probe.samples.back().result.acceptance) {
      probe.monotone = false;
    }
    probe.samples.push_back({n, std::move(r)});
  }
  if (!probe.samples.empty() && probe.samples.back().result.acceptance >= 1.0 - tolerance) {
    probe.verdict = ProbeVerdict::ConvergesTo1;
  }
  return probe;
}

ConvergenceProbe probe_value1(const ProbAutomaton& aut, const WitnessReport& witness,
                              std::uint64_t n_max, double tolerance, const EvalOptions& opts) {
  if (witness.kind != WitnessKind::Value1 || witness.derivations.size() != 1) {
    throw InvalidArgument("probe_value1 needs a value-1 witness");
  }
  std::vector<std::uint64_t> ns;
  for (std::uint64_t n = 1; n <= n_max; ++n) ns.push_back(n);
  return eval_family(aut, family_from_derivation(witness.derivations.front(), aut), ns, tolerance,
                     opts);
}

Rational min_transition_probability(const ProbAutomaton& aut) {
  std::optional<Rational> best;
  for (Letter a = 0; a < aut.num_letters(); ++a) {
    const TransitionMatrix& m = aut.matrix(a);
    for (State s = 0; s < aut.num_states(); ++s) {
      for (State t = 0; t < aut.num_states(); ++t) {
        const Rational& p = m.at(s, t);
        if (p > 0 && (!best || p < *best)) best = p;
      }
    }
  }
  return best.value_or(Rational(1));
}

std::string probe_csv(const ConvergenceProbe& probe) {
  std::ostringstream out;
  out << "n,word_length,acceptance,mode\n";
  for (const ProbeSample& s : probe.samples) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", s.result.acceptance);
    out << s.n << ',' << s.result.length << ',' << buf << ',' << to_string(s.result.mode) << '\n';
  }
  return out.str();
}

}  // namespace leaktight
