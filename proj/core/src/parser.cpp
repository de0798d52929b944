#include "leaktight/parser.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "leaktight/error.hpp"

namespace leaktight {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != '#' && !std::isspace(static_cast<unsigned char>(line[j]))) {
      ++j;
    }
    tokens.push_back(Token{std::string(line.substr(i, j - i)), i + 1});
    i = j;
  }
  return tokens;
}

class Parser {
 public:
  ProbAutomaton parse(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      auto tokens = tokenize(line);
      if (!tokens.empty()) directive(tokens);
    }
    return finish();
  }

 private:
  [[noreturn]] void fail(std::size_t column, const std::string& message) const {
    throw ParseError(line_no_, column, message);
  }

  void directive(const std::vector<Token>& tokens) {
    const std::string& kw = tokens[0].text;
    if (kw == "automaton") {
      once(seen_name_, tokens[0]);
      if (tokens.size() != 2) fail(tokens[0].column, "expected exactly one automaton name");
      name_ = tokens[1].text;
    } else if (kw == "alphabet") {
      once(seen_alphabet_, tokens[0]);
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const auto& t = tokens[i];
        if (is_reserved_letter_name(t.text) || t.text.find(':') != std::string::npos) {
          fail(t.column, "letter name '" + t.text + "' is reserved");
        }
        if (!letter_index_.emplace(t.text, letters_.size()).second) {
          fail(t.column, "duplicate letter '" + t.text + "'");
        }
        letters_.push_back(t.text);
      }
    } else if (kw == "states") {
      once(seen_states_, tokens[0]);
      if (!seen_alphabet_) fail(tokens[0].column, "'states' before 'alphabet' declaration");
      if (tokens.size() < 2) fail(tokens[0].column, "at least one state is required");
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const auto& t = tokens[i];
        if (t.text.find(':') != std::string::npos) {
          fail(t.column, "state name '" + t.text + "' contains ':'");
        }
        if (!state_index_.emplace(t.text, states_.size()).second) {
          fail(t.column, "duplicate state '" + t.text + "'");
        }
        states_.push_back(t.text);
      }
      table_.assign(states_.size() * letters_.size(), std::nullopt);
    } else if (kw == "initial") {
      once(seen_initial_, tokens[0]);
      need_states(tokens[0]);
      if (tokens.size() < 2) fail(tokens[0].column, "initial needs a state or a distribution");
      initial_.assign(states_.size(), Rational(0));
      if (tokens.size() == 2 && tokens[1].text.find(':') == std::string::npos) {
        initial_[state(tokens[1])] = 1;
      } else {
        weights(tokens, 1, initial_);
        check_sum(initial_, tokens[0], "initial distribution");
      }
    } else if (kw == "final") {
      once(seen_final_, tokens[0]);
      need_states(tokens[0]);
      final_.assign(states_.size(), false);
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        State s = state(tokens[i]);
        if (final_[s]) fail(tokens[i].column, "duplicate final state '" + tokens[i].text + "'");
        final_[s] = true;
      }
    } else if (kw == "priority") {
      once(seen_priority_, tokens[0]);
      need_states(tokens[0]);
      std::vector<std::optional<unsigned>> prio(states_.size());
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        auto [name, value] = split_pair(tokens[i]);
        State s = state(Token{name, tokens[i].column});
        if (prio[s]) fail(tokens[i].column, "duplicate priority for '" + name + "'");
        unsigned c = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), c);
        if (value.empty() || ec != std::errc() || ptr != value.data() + value.size()) {
          fail(tokens[i].column, "priority must be a nonnegative integer");
        }
        prio[s] = c;
      }
      priority_.emplace();
      for (State s = 0; s < states_.size(); ++s) {
        if (!prio[s]) fail(tokens[0].column, "priority missing for state '" + states_[s] + "'");
        priority_->push_back(*prio[s]);
      }
    } else if (kw == "trans") {
      need_states(tokens[0]);
      if (tokens.size() < 4) fail(tokens[0].column, "expected: trans STATE LETTER TARGET:P ...");
      State s = state(tokens[1]);
      Letter a = letter(tokens[2]);
      auto& slot = table_[s * letters_.size() + a];
      if (slot) {
        fail(tokens[0].column, "duplicate transition for (" + tokens[1].text + ", " +
                                   tokens[2].text + ")");
      }
      std::vector<Rational> row(states_.size(), Rational(0));
      weights(tokens, 3, row);
      check_sum(row, tokens[0], "row (" + tokens[1].text + ", " + tokens[2].text + ")");
      slot = std::move(row);
    } else {
      fail(tokens[0].column, "unknown directive '" + kw + "'");
    }
  }

  void once(bool& flag, const Token& kw) {
    if (flag) fail(kw.column, "duplicate '" + kw.text + "' declaration");
    flag = true;
  }

  void need_states(const Token& kw) {
    if (!seen_states_) fail(kw.column, "'" + kw.text + "' before 'states' declaration");
  }

  State state(const Token& t) const {
    auto it = state_index_.find(t.text);
    if (it == state_index_.end()) fail(t.column, "unknown state '" + t.text + "'");
    return it->second;
  }

  Letter letter(const Token& t) const {
    auto it = letter_index_.find(t.text);
    if (it == letter_index_.end()) fail(t.column, "unknown letter '" + t.text + "'");
    return it->second;
  }

  std::pair<std::string, std::string> split_pair(const Token& t) const {
    auto colon = t.text.rfind(':');
    if (colon == std::string::npos || colon == 0) {
      fail(t.column, "expected NAME:VALUE, got '" + t.text + "'");
    }
    return {t.text.substr(0, colon), t.text.substr(colon + 1)};
  }

  void weights(const std::vector<Token>& tokens, std::size_t from, std::vector<Rational>& out) {
    std::vector<bool> seen(states_.size(), false);
    for (std::size_t i = from; i < tokens.size(); ++i) {
      auto [name, value] = split_pair(tokens[i]);
      State s = state(Token{name, tokens[i].column});
      if (seen[s]) fail(tokens[i].column, "duplicate target '" + name + "'");
      seen[s] = true;
      Rational p;
      try {
        p = parse_rational(value);
      } catch (const InvalidArgument& e) {
        fail(tokens[i].column + name.size() + 1, e.what());
      }
      if (p < 0 || p > 1) fail(tokens[i].column, "probability " + value + " outside [0,1]");
      out[s] = p;
    }
  }

  void check_sum(const std::vector<Rational>& row, const Token& kw, const std::string& what) const {
    Rational sum = 0;
    for (const auto& p : row) sum += p;
    if (sum != 1) fail(kw.column, what + " sums to " + to_string(sum) + ", not 1");
  }

  ProbAutomaton finish() {
    const std::size_t end = line_no_ + 1;
    if (!seen_alphabet_) throw ParseError(end, 1, "missing 'alphabet' declaration");
    if (!seen_states_) throw ParseError(end, 1, "missing 'states' declaration");
    if (!seen_initial_) throw ParseError(end, 1, "missing 'initial' declaration");
    std::vector<TransitionMatrix> matrices(letters_.size(), TransitionMatrix(states_.size()));
    for (State s = 0; s < states_.size(); ++s) {
      for (Letter a = 0; a < letters_.size(); ++a) {
        const auto& row = table_[s * letters_.size() + a];
        if (!row) {
          throw ParseError(end, 1,
                           "incomplete transition table: missing (" + states_[s] + ", " +
                               letters_[a] + ")");
        }
        for (State t = 0; t < states_.size(); ++t) matrices[a].at(s, t) = (*row)[t];
      }
    }
    if (final_.empty()) final_.assign(states_.size(), false);
    try {
      return ProbAutomaton(name_, states_, letters_, Distribution(initial_), std::move(matrices),
                           final_, priority_);
    } catch (const InvalidArgument& e) {
      throw ParseError(end, 1, e.what());
    }
  }

  std::size_t line_no_ = 0;
  bool seen_name_ = false;
  bool seen_alphabet_ = false;
  bool seen_states_ = false;
  bool seen_initial_ = false;
  bool seen_final_ = false;
  bool seen_priority_ = false;
  std::string name_ = "automaton";
  std::vector<std::string> letters_;
  std::vector<std::string> states_;
  std::unordered_map<std::string, Letter> letter_index_;
  std::unordered_map<std::string, State> state_index_;
  std::vector<Rational> initial_;
  std::vector<bool> final_;
  std::optional<std::vector<unsigned>> priority_;
  std::vector<std::optional<std::vector<Rational>>> table_;
};

}  // namespace

ProbAutomaton parse_automaton(std::istream& in) { return Parser().parse(in); }

ProbAutomaton parse_automaton(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_automaton(in);
}

ProbAutomaton load_automaton(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, 0, "cannot open '" + path.string() + "'");
  return parse_automaton(in);
}

std::string write_automaton(const ProbAutomaton& aut) {
  std::ostringstream out;
  out << "automaton " << aut.name() << '\n';
  out << "alphabet";
  for (const auto& a : aut.letter_names()) out << ' ' << a;
  out << "\nstates";
  for (const auto& s : aut.state_names()) out << ' ' << s;
  out << "\ninitial";
  auto support = aut.initial().support();
  if (support.size() == 1) {
    out << ' ' << aut.state_name(support.front());
  } else {
    for (State s : support) out << ' ' << aut.state_name(s) << ':' << to_string(aut.initial()[s]);
  }
  out << "\nfinal";
  for (State s : aut.final_states()) out << ' ' << aut.state_name(s);
  out << '\n';
  if (aut.has_priority()) {
    out << "priority";
    for (State s = 0; s < aut.num_states(); ++s) {
      out << ' ' << aut.state_name(s) << ':' << (*aut.priority())[s];
    }
    out << '\n';
  }
  for (State s = 0; s < aut.num_states(); ++s) {
    for (Letter a = 0; a < aut.num_letters(); ++a) {
      out << "trans " << aut.state_name(s) << ' ' << aut.letter_name(a);
      const auto& m = aut.matrix(a);
      for (State t = 0; t < aut.num_states(); ++t) {
        if (m.at(s, t) != 0) out << ' ' << aut.state_name(t) << ':' << to_string(m.at(s, t));
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace leaktight
