#include "leaktight/automaton.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_map>

#include "leaktight/error.hpp"

namespace leaktight {

namespace {

bool valid_probability(const Rational& p) { return p >= 0 && p <= 1; }

void check_name(std::string_view name, std::string_view what) {
  if (name.empty()) throw InvalidArgument(std::string(what) + " name is empty");
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ':' || c == '#') {
      throw InvalidArgument(std::string(what) + " name '" + std::string(name) +
                            "' contains a reserved character");
    }
  }
}

template <typename Names>
std::unordered_map<std::string, std::size_t> index_names(const Names& names,
                                                         std::string_view what) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!index.emplace(names[i], i).second) {
      throw InvalidArgument("duplicate " + std::string(what) + " '" + names[i] + "'");
    }
  }
  return index;
}

}  // namespace

// Distribution ---------------------------------------------------------------

Distribution::Distribution(std::vector<Rational> weights) : weights_(std::move(weights)) {
  Rational sum = 0;
  for (const auto& w : weights_) {
    if (!valid_probability(w)) {
      throw InvalidArgument("distribution weight " + to_string(w) + " outside [0,1]");
    }
    sum += w;
  }
  if (sum != 1) throw InvalidArgument("distribution sums to " + to_string(sum) + ", not 1");
}

Distribution Distribution::point(std::size_t num_states, State s) {
  if (s >= num_states) throw InvalidArgument("point mass on unknown state");
  std::vector<Rational> w(num_states);
  w[s] = 1;
  return Distribution(std::move(w));
}

Distribution Distribution::uniform(std::size_t num_states, std::span<const State> states) {
  std::set<State> unique(states.begin(), states.end());
  if (unique.empty()) throw InvalidArgument("uniform distribution over an empty set");
  std::vector<Rational> w(num_states);
  Rational share(1, static_cast<unsigned long>(unique.size()));
  for (State s : unique) {
    if (s >= num_states) throw InvalidArgument("uniform distribution over unknown state");
    w[s] = share;
  }
  return Distribution(std::move(w));
}

std::vector<State> Distribution::support() const {
  std::vector<State> out;
  for (State s = 0; s < weights_.size(); ++s) {
    if (weights_[s] > 0) out.push_back(s);
  }
  return out;
}

// TransitionMatrix -----------------------------------------------------------

TransitionMatrix TransitionMatrix::identity(std::size_t n) {
  TransitionMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool TransitionMatrix::is_row_stochastic() const {
  for (State s = 0; s < n_; ++s) {
    Rational sum = 0;
    for (const auto& p : row(s)) {
      if (!valid_probability(p)) return false;
      sum += p;
    }
    if (sum != 1) return false;
  }
  return true;
}

TransitionMatrix operator*(const TransitionMatrix& lhs, const TransitionMatrix& rhs) {
  if (lhs.n_ != rhs.n_) throw InvalidArgument("matrix dimension mismatch");
  const std::size_t n = lhs.n_;
  TransitionMatrix out(n);
  for (State s = 0; s < n; ++s) {
    for (State q = 0; q < n; ++q) {
      const Rational& a = lhs.at(s, q);
      if (a == 0) continue;
      for (State t = 0; t < n; ++t) {
        const Rational& b = rhs.at(q, t);
        if (b != 0) out.at(s, t) += a * b;
      }
    }
  }
  return out;
}

// ProbAutomaton --------------------------------------------------------------

ProbAutomaton::ProbAutomaton(std::string name, std::vector<std::string> states,
                             std::vector<std::string> letters, Distribution initial,
                             std::vector<TransitionMatrix> letter_matrices,
                             std::vector<bool> final_states,
                             std::optional<std::vector<unsigned>> priority)
    : name_(std::move(name)),
      states_(std::move(states)),
      letters_(std::move(letters)),
      initial_(std::move(initial)),
      matrices_(std::move(letter_matrices)),
      final_(std::move(final_states)),
      priority_(std::move(priority)) {
  const std::size_t n = states_.size();
  if (n == 0) throw InvalidArgument("automaton has no states");
  for (const auto& s : states_) check_name(s, "state");
  for (const auto& a : letters_) {
    check_name(a, "letter");
    if (is_reserved_letter_name(a)) {
      throw InvalidArgument("letter name '" + a + "' is reserved");
    }
  }
  index_names(states_, "state");
  index_names(letters_, "letter");
  if (initial_.size() != n) throw InvalidArgument("initial distribution has wrong dimension");
  if (matrices_.size() != letters_.size()) {
    throw InvalidArgument("one transition matrix per letter is required");
  }
  for (std::size_t a = 0; a < matrices_.size(); ++a) {
    if (matrices_[a].size() != n) {
      throw InvalidArgument("transition matrix for letter '" + letters_[a] +
                            "' has wrong dimension");
    }
    if (!matrices_[a].is_row_stochastic()) {
      throw InvalidArgument("transition matrix for letter '" + letters_[a] +
                            "' is not row-stochastic");
    }
  }
  if (final_.size() != n) throw InvalidArgument("final-state mask has wrong dimension");
  if (priority_ && priority_->size() != n) {
    throw InvalidArgument("priority function must be total on states");
  }
}

std::optional<State> ProbAutomaton::find_state(std::string_view name) const {
  auto it = std::find(states_.begin(), states_.end(), name);
  if (it == states_.end()) return std::nullopt;
  return static_cast<State>(it - states_.begin());
}

std::optional<Letter> ProbAutomaton::find_letter(std::string_view name) const {
  auto it = std::find(letters_.begin(), letters_.end(), name);
  if (it == letters_.end()) return std::nullopt;
  return static_cast<Letter>(it - letters_.begin());
}

std::vector<State> ProbAutomaton::final_states() const {
  std::vector<State> out;
  for (State s = 0; s < final_.size(); ++s) {
    if (final_[s]) out.push_back(s);
  }
  return out;
}

bool ProbAutomaton::is_deterministic() const {
  for (const auto& m : matrices_) {
    for (State s = 0; s < num_states(); ++s) {
      auto row = m.row(s);
      if (std::count_if(row.begin(), row.end(), [](const Rational& p) { return p > 0; }) != 1) {
        return false;
      }
    }
  }
  return true;
}

ProbAutomaton ProbAutomaton::with_name(std::string name) const {
  ProbAutomaton copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

ProbAutomaton ProbAutomaton::with_initial(Distribution initial) const {
  if (initial.size() != num_states()) {
    throw InvalidArgument("initial distribution has wrong dimension");
  }
  ProbAutomaton copy = *this;
  copy.initial_ = std::move(initial);
  return copy;
}

ProbAutomaton ProbAutomaton::with_final_states(std::span<const State> finals) const {
  ProbAutomaton copy = *this;
  copy.final_.assign(num_states(), false);
  for (State s : finals) {
    if (s >= num_states()) throw InvalidArgument("final state out of range");
    copy.final_[s] = true;
  }
  return copy;
}

ProbAutomaton ProbAutomaton::without_priority() const {
  ProbAutomaton copy = *this;
  copy.priority_.reset();
  return copy;
}

// AutomatonBuilder -----------------------------------------------------------

AutomatonBuilder& AutomatonBuilder::states(std::vector<std::string> names) {
  states_ = std::move(names);
  return *this;
}

AutomatonBuilder& AutomatonBuilder::alphabet(std::vector<std::string> letters) {
  letters_ = std::move(letters);
  return *this;
}

AutomatonBuilder& AutomatonBuilder::initial(const std::string& state) {
  initial_ = {{state, Rational(1)}};
  return *this;
}

AutomatonBuilder& AutomatonBuilder::initial(std::vector<std::pair<std::string, Rational>> weights) {
  initial_ = std::move(weights);
  return *this;
}

AutomatonBuilder& AutomatonBuilder::final(std::vector<std::string> names) {
  final_ = std::move(names);
  return *this;
}

AutomatonBuilder& AutomatonBuilder::priority(
    std::vector<std::pair<std::string, unsigned>> priorities) {
  priority_ = std::move(priorities);
  return *this;
}

AutomatonBuilder& AutomatonBuilder::transition(
    const std::string& from, const std::string& letter,
    std::vector<std::pair<std::string, Rational>> targets) {
  rows_.push_back(Row{from, letter, std::move(targets)});
  return *this;
}

ProbAutomaton AutomatonBuilder::build() const {
  const auto state_index = index_names(states_, "state");
  const auto letter_index = index_names(letters_, "letter");
  const std::size_t n = states_.size();
  auto lookup = [](const auto& index, const std::string& name, std::string_view what) {
    auto it = index.find(name);
    if (it == index.end()) {
      throw InvalidArgument("unknown " + std::string(what) + " '" + name + "'");
    }
    return it->second;
  };

  std::vector<Rational> init(n);
  for (const auto& [s, w] : initial_) init[lookup(state_index, s, "state")] += w;

  std::vector<TransitionMatrix> matrices(letters_.size(), TransitionMatrix(n));
  std::vector<bool> seen(n * letters_.size(), false);
  for (const auto& row : rows_) {
    State s = lookup(state_index, row.from, "state");
    Letter a = lookup(letter_index, row.letter, "letter");
    if (seen[s * letters_.size() + a]) {
      throw InvalidArgument("duplicate transition for (" + row.from + ", " + row.letter + ")");
    }
    seen[s * letters_.size() + a] = true;
    for (const auto& [t, p] : row.targets) matrices[a].at(s, lookup(state_index, t, "state")) += p;
  }
  for (State s = 0; s < n; ++s) {
    for (Letter a = 0; a < letters_.size(); ++a) {
      if (!seen[s * letters_.size() + a]) {
        throw InvalidArgument("missing transition for (" + states_[s] + ", " + letters_[a] + ")");
      }
    }
  }

  std::vector<bool> finals(n, false);
  for (const auto& f : final_) finals[lookup(state_index, f, "state")] = true;

  std::optional<std::vector<unsigned>> prio;
  if (priority_) {
    std::vector<std::optional<unsigned>> partial(n);
    for (const auto& [s, c] : *priority_) partial[lookup(state_index, s, "state")] = c;
    prio.emplace();
    for (State s = 0; s < n; ++s) {
      if (!partial[s]) throw InvalidArgument("priority missing for state '" + states_[s] + "'");
      prio->push_back(*partial[s]);
    }
  }

  return ProbAutomaton(name_, states_, letters_, Distribution(std::move(init)), std::move(matrices),
                       std::move(finals), std::move(prio));
}

// Operations -----------------------------------------------------------------

Distribution step(const ProbAutomaton& aut, const Distribution& d, Letter a) {
  if (a >= aut.num_letters()) throw InvalidArgument("unknown letter index");
  if (d.size() != aut.num_states()) throw InvalidArgument("distribution has wrong dimension");
  const auto& m = aut.matrix(a);
  std::vector<Rational> out(aut.num_states());
  for (State q = 0; q < aut.num_states(); ++q) {
    if (d[q] == 0) continue;
    for (State t = 0; t < aut.num_states(); ++t) {
      if (m.at(q, t) != 0) out[t] += d[q] * m.at(q, t);
    }
  }
  return Distribution(std::move(out));
}

Distribution run(const ProbAutomaton& aut, const Distribution& d, std::span<const Letter> word) {
  Distribution current = d;
  for (Letter a : word) current = step(aut, current, a);
  return current;
}

Rational acceptance_probability(const ProbAutomaton& aut, std::span<const Letter> word) {
  Distribution end = run(aut, aut.initial(), word);
  Rational p = 0;
  for (State t = 0; t < aut.num_states(); ++t) {
    if (aut.is_final(t)) p += end[t];
  }
  return p;
}

TransitionMatrix transition_matrix(const ProbAutomaton& aut, std::span<const Letter> word) {
  TransitionMatrix m = TransitionMatrix::identity(aut.num_states());
  for (Letter a : word) {
    if (a >= aut.num_letters()) throw InvalidArgument("unknown letter index");
    m = m * aut.matrix(a);
  }
  return m;
}

bool is_idempotent_word(const ProbAutomaton& aut, std::span<const Letter> word) {
  TransitionMatrix m = transition_matrix(aut, word);
  TransitionMatrix m2 = m * m;
  for (State s = 0; s < m.size(); ++s) {
    for (State t = 0; t < m.size(); ++t) {
      if ((m.at(s, t) > 0) != (m2.at(s, t) > 0)) return false;
    }
  }
  return true;
}

Word parse_word(const ProbAutomaton& aut, std::string_view text) {
  auto letter = [&](std::string_view name) {
    auto a = aut.find_letter(name);
    if (!a) throw InvalidArgument("unknown letter '" + std::string(name) + "'");
    return *a;
  };
  Word word;
  bool has_space = std::any_of(text.begin(), text.end(),
                               [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  if (has_space) {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      if (j > i) word.push_back(letter(text.substr(i, j - i)));
      i = j;
    }
    return word;
  }
  bool single_chars = std::all_of(aut.letter_names().begin(), aut.letter_names().end(),
                                  [](const std::string& s) { return s.size() == 1; });
  if (single_chars) {
    for (char c : text) word.push_back(letter(std::string_view(&c, 1)));
  } else if (!text.empty()) {
    word.push_back(letter(text));
  }
  return word;
}

std::string word_to_string(const ProbAutomaton& aut, std::span<const Letter> word) {
  bool single_chars = std::all_of(aut.letter_names().begin(), aut.letter_names().end(),
                                  [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0 && !single_chars) out += ' ';
    out += aut.letter_name(word[i]);
  }
  return out;
}

bool is_reserved_letter_name(std::string_view name) {
  if (name == "eps" || name == "concat" || name == "iter") return true;
  return name.find_first_of("(),^") != std::string_view::npos;
}

}  // namespace leaktight
