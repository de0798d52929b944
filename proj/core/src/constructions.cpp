#include "leaktight/constructions.hpp"

#include <algorithm>
#include <set>

#include "leaktight/error.hpp"

namespace leaktight {

namespace {

void require_same_alphabet(const ProbAutomaton& a, const ProbAutomaton& b) {
  if (a.letter_names() != b.letter_names()) {
    throw InvalidArgument("alphabet mismatch between '" + a.name() + "' and '" + b.name() + "'");
  }
}

std::string component_prefix(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('A' + i));
  return "P" + std::to_string(i);
}

std::vector<unsigned> sorted_priorities(const ProbAutomaton& aut) {
  if (!aut.has_priority()) throw InvalidArgument("automaton has no priority function");
  std::set<unsigned> values(aut.priority()->begin(), aut.priority()->end());
  return {values.begin(), values.end()};
}

}  // namespace

ProbAutomaton parallel_compose(const ProbAutomaton& a, const ProbAutomaton& b) {
  const ProbAutomaton parts[] = {a, b};
  return parallel_compose(std::span<const ProbAutomaton>(parts));
}

ProbAutomaton parallel_compose(std::span<const ProbAutomaton> parts) {
  if (parts.empty()) throw InvalidArgument("parallel composition of zero automata");
  for (const auto& p : parts) require_same_alphabet(parts.front(), p);

  std::size_t total = 0;
  for (const auto& p : parts) total += p.num_states();
  const std::size_t num_letters = parts.front().num_letters();
  const Rational share(1, static_cast<unsigned long>(parts.size()));

  std::vector<std::string> names;
  std::vector<Rational> init(total);
  std::vector<bool> finals(total, false);
  std::vector<TransitionMatrix> matrices(num_letters, TransitionMatrix(total));
  bool all_priority = std::all_of(parts.begin(), parts.end(),
                                  [](const ProbAutomaton& p) { return p.has_priority(); });
  std::vector<unsigned> prio;

  std::size_t offset = 0;
  std::string name;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& part = parts[i];
    const std::string prefix = component_prefix(i) + ".";
    name += (i ? "||" : "") + part.name();
    for (State s = 0; s < part.num_states(); ++s) {
      names.push_back(prefix + part.state_name(s));
      init[offset + s] = share * part.initial()[s];
      finals[offset + s] = part.is_final(s);
      if (all_priority) prio.push_back((*part.priority())[s]);
      for (Letter x = 0; x < num_letters; ++x) {
        for (State t = 0; t < part.num_states(); ++t) {
          matrices[x].at(offset + s, offset + t) = part.matrix(x).at(s, t);
        }
      }
    }
    offset += part.num_states();
  }
  std::optional<std::vector<unsigned>> priority;
  if (all_priority) priority = std::move(prio);
  return ProbAutomaton(name, std::move(names), parts.front().letter_names(),
                       Distribution(std::move(init)), std::move(matrices), std::move(finals),
                       std::move(priority));
}

ProbAutomaton synchronized_product(const ProbAutomaton& a, const ProbAutomaton& b) {
  require_same_alphabet(a, b);
  const std::size_t na = a.num_states();
  const std::size_t nb = b.num_states();
  const std::size_t n = na * nb;
  std::vector<std::string> names;
  std::vector<Rational> init(n);
  std::vector<bool> finals(n, false);
  std::vector<TransitionMatrix> matrices(a.num_letters(), TransitionMatrix(n));
  for (State p = 0; p < na; ++p) {
    for (State q = 0; q < nb; ++q) {
      const State s = p * nb + q;
      names.push_back("(" + a.state_name(p) + "," + b.state_name(q) + ")");
      init[s] = a.initial()[p] * b.initial()[q];
      finals[s] = a.is_final(p) && b.is_final(q);
      for (Letter x = 0; x < a.num_letters(); ++x) {
        for (State tp = 0; tp < na; ++tp) {
          const Rational& pa = a.matrix(x).at(p, tp);
          if (pa == 0) continue;
          for (State tq = 0; tq < nb; ++tq) {
            const Rational& pb = b.matrix(x).at(q, tq);
            if (pb != 0) matrices[x].at(s, tp * nb + tq) = pa * pb;
          }
        }
      }
    }
  }
  return ProbAutomaton(a.name() + "x" + b.name(), std::move(names), a.letter_names(),
                       Distribution(std::move(init)), std::move(matrices), std::move(finals));
}

DeterministicTransducer::DeterministicTransducer(std::vector<std::string> states,
                                                 std::size_t input_size,
                                                 std::vector<std::vector<std::size_t>> next,
                                                 std::size_t initial)
    : states_(std::move(states)), input_size_(input_size), next_(std::move(next)),
      initial_(initial) {
  if (states_.empty()) throw InvalidArgument("transducer has no states");
  if (next_.size() != states_.size()) throw InvalidArgument("transducer is not total");
  for (const auto& row : next_) {
    if (row.size() != input_size_) throw InvalidArgument("transducer is not total");
    for (std::size_t p : row) {
      if (p >= states_.size()) throw InvalidArgument("transducer target out of range");
    }
  }
  if (initial_ >= states_.size()) throw InvalidArgument("transducer initial state out of range");
}

ProbAutomaton transducer_compose(const ProbAutomaton& a, const DeterministicTransducer& m) {
  if (m.input_size() != a.num_states()) {
    throw InvalidArgument("transducer input alphabet must be the automaton's state set");
  }
  const std::size_t nm = m.num_states();
  const std::size_t n = a.num_states() * nm;
  std::vector<std::string> names;
  std::vector<Rational> init(n);
  std::vector<bool> finals(n, false);
  std::vector<TransitionMatrix> matrices(a.num_letters(), TransitionMatrix(n));
  for (State q = 0; q < a.num_states(); ++q) {
    for (std::size_t p = 0; p < nm; ++p) {
      const State s = q * nm + p;
      names.push_back("(" + a.state_name(q) + "," + m.state_name(p) + ")");
      if (p == m.initial()) init[s] = a.initial()[q];
      finals[s] = a.is_final(q);
      const std::size_t p_next = m.next(p, q);
      for (Letter x = 0; x < a.num_letters(); ++x) {
        for (State t = 0; t < a.num_states(); ++t) {
          const Rational& w = a.matrix(x).at(q, t);
          if (w != 0) matrices[x].at(s, t * nm + p_next) = w;
        }
      }
    }
  }
  return ProbAutomaton(a.name() + "*M", std::move(names), a.letter_names(),
                       Distribution(std::move(init)), std::move(matrices), std::move(finals));
}

DeterministicTransducer min_priority_tracker(const ProbAutomaton& parity_automaton) {
  const auto values = sorted_priorities(parity_automaton);
  const auto& prio = *parity_automaton.priority();
  std::vector<std::string> names;
  for (unsigned v : values) names.push_back(std::to_string(v));
  auto index_of = [&](unsigned v) {
    return static_cast<std::size_t>(std::lower_bound(values.begin(), values.end(), v) -
                                    values.begin());
  };
  std::vector<std::vector<std::size_t>> next(values.size());
  for (std::size_t e = 0; e < values.size(); ++e) {
    for (State q = 0; q < parity_automaton.num_states(); ++q) {
      next[e].push_back(index_of(std::min(values[e], prio[q])));
    }
  }
  return DeterministicTransducer(std::move(names), parity_automaton.num_states(), std::move(next),
                                 values.size() - 1);
}

unsigned tracker_priority(const ProbAutomaton& parity_automaton, std::size_t p) {
  return sorted_priorities(parity_automaton).at(p);
}

}  // namespace leaktight
