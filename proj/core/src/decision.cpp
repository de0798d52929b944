#include "leaktight/decision.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>

#include "leaktight/constructions.hpp"
#include "leaktight/error.hpp"

namespace leaktight {

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Value1True:
      return "VALUE1_TRUE";
    case Outcome::Value1FalseLeaktight:
      return "VALUE1_FALSE_LEAKTIGHT";
    case Outcome::NotLeaktight:
      return "NOT_LEAKTIGHT";
  }
  return "UNKNOWN";
}

std::optional<Outcome> parse_outcome(std::string_view text) {
  for (Outcome o : {Outcome::Value1True, Outcome::Value1FalseLeaktight, Outcome::NotLeaktight}) {
    if (text == to_string(o)) return o;
  }
  return std::nullopt;
}

std::string to_string(ParityStatus status) {
  switch (status) {
    case ParityStatus::True:
      return "true";
    case ParityStatus::False:
      return "false";
    case ParityStatus::Uncertified:
      return "uncertified";
  }
  return "unknown";
}

ClosureStats stats_of(const MonoidClosure& closure, double wall_seconds) {
  return {closure.size(), closure.markov_monoid().words.size(), closure.max_sharp_height(),
          closure.rounds(), wall_seconds};
}

namespace {

struct TimedClosure {
  MonoidClosure closure;
  double seconds;
};

TimedClosure timed_saturate(const ProbAutomaton& aut, const SaturationOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  MonoidClosure c = saturate(aut, opts);
  std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  return {std::move(c), dt.count()};
}

}  // namespace

Verdict decide(const ProbAutomaton& aut, const MonoidClosure& closure) {
  if (closure.num_states() != aut.num_states()) {
    throw InvalidArgument("closure does not belong to this automaton");
  }
  Verdict v;
  v.stats = stats_of(closure);
  if (auto w = find_value1_witness(closure, aut)) {
    v.outcome = Outcome::Value1True;
    v.witness = std::move(w);
  } else if (auto leak = find_leak_witness(closure)) {
    v.outcome = Outcome::NotLeaktight;
    v.witness = std::move(leak);
  } else {
    v.outcome = Outcome::Value1FalseLeaktight;
  }
  return v;
}

Verdict decide(const ProbAutomaton& aut, const SaturationOptions& opts) {
  auto [closure, seconds] = timed_saturate(aut, opts);
  Verdict v = decide(aut, closure);
  v.stats.wall_seconds = seconds;
  return v;
}

LeaktightResult is_leaktight(const ProbAutomaton& aut, const SaturationOptions& opts) {
  auto [closure, seconds] = timed_saturate(aut, opts);
  LeaktightResult r;
  r.leak = find_leak_witness(closure);
  r.leaktight = !r.leak.has_value();
  r.stats = stats_of(closure, seconds);
  return r;
}

bool check_rank_function(const ProbAutomaton& aut, const RankFunction& rank) {
  const std::size_t n = aut.num_states();
  if (rank.rank.size() != n) return false;
  for (Letter a = 0; a < aut.num_letters(); ++a) {
    const TransitionMatrix& m = aut.matrix(a);
    for (State s = 0; s < n; ++s) {
      std::size_t same_level = 0;
      for (State t = 0; t < n; ++t) {
        if (m.at(s, t) == 0) continue;
        if (rank.rank[t] < rank.rank[s]) return false;
        if (rank.rank[t] == rank.rank[s]) ++same_level;
      }
      if (same_level > 1) return false;
    }
  }
  return true;
}

std::optional<RankFunction> is_hierarchical(const ProbAutomaton& aut) {
  const std::size_t n = aut.num_states();
  LimitWord reach = LimitWord::identity(n);
  for (Letter a = 0; a < aut.num_letters(); ++a) {
    LimitWord supp = LimitWord::support_of(aut.matrix(a));
    for (State s = 0; s < n; ++s) {
      for (State t = 0; t < n; ++t) {
        if (supp.get(s, t)) reach.set(s, t);
      }
    }
  }
  const LimitWord step = reach;
  for (State k = 0; k < n; ++k) {
    for (State s = 0; s < n; ++s) {
      if (!reach.get(s, k)) continue;
      for (State t = 0; t < n; ++t) {
        if (reach.get(k, t)) reach.set(s, t);
      }
    }
  }
  auto same_component = [&](State s, State t) { return reach.get(s, t) && reach.get(t, s); };

  for (Letter a = 0; a < aut.num_letters(); ++a) {
    const TransitionMatrix& m = aut.matrix(a);
    for (State s = 0; s < n; ++s) {
      std::size_t inside = 0;
      for (State t = 0; t < n; ++t) {
        if (m.at(s, t) > 0 && same_component(s, t)) ++inside;
      }
      if (inside > 1) return std::nullopt;
    }
  }

  RankFunction rf{std::vector<std::size_t>(n, 0)};
  for (bool changed = true; changed;) {
    changed = false;
    for (State s = 0; s < n; ++s) {
      for (State t = 0; t < n; ++t) {
        if (!step.get(s, t)) continue;
        std::size_t want = rf.rank[s] + (same_component(s, t) ? 0 : 1);
        if (rf.rank[t] < want) {
          rf.rank[t] = want;
          changed = true;
        }
      }
    }
  }
  return rf;
}

ProbAutomaton parity_reach_automaton(const ProbAutomaton& aut, std::span<const State> subset) {
  return aut.without_priority().with_final_states(subset);
}

ProbAutomaton parity_tracked_automaton(const ProbAutomaton& aut, std::span<const State> subset) {
  if (!aut.has_priority()) throw InvalidArgument("automaton has no priority function");
  DeterministicTransducer m = min_priority_tracker(aut);
  ProbAutomaton product = transducer_compose(aut.without_priority(), m);
  const std::size_t k = m.num_states();
  auto index_of = [&](unsigned prio) {
    for (std::size_t p = 0; p < k; ++p) {
      if (tracker_priority(aut, p) == prio) return p;
    }
    throw InvalidArgument("priority missing from tracker");
  };
  std::vector<State> start;
  std::vector<State> finals;
  for (State q : subset) {
    start.push_back(q * k + index_of((*aut.priority())[q]));
    for (std::size_t p = 0; p < k; ++p) {
      if (tracker_priority(aut, p) % 2 == 0) finals.push_back(q * k + p);
    }
  }
  std::sort(start.begin(), start.end());
  std::sort(finals.begin(), finals.end());
  return product.with_initial(Distribution::uniform(product.num_states(), start))
      .with_final_states(finals);
}

ParityReductionResult parity_value1(const ProbAutomaton& aut, const SaturationOptions& opts) {
  if (!aut.has_priority()) throw InvalidArgument("parity reduction needs a priority function");
  const std::size_t n = aut.num_states();
  if (n > kMaxParityStates) {
    throw InvalidArgument("parity reduction is limited to " + std::to_string(kMaxParityStates) +
                          " states");
  }
  // Closures depend only on the letter supports, so one closure per
  // automaton serves every subset R.
  ProbAutomaton base = aut.without_priority();
  MonoidClosure base_closure = saturate(base, opts);
  std::vector<State> all(n);
  for (State q = 0; q < n; ++q) all[q] = q;
  ProbAutomaton tracked_base = parity_tracked_automaton(aut, all);
  MonoidClosure tracked_closure = saturate(tracked_base, opts);

  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) masks.push_back(mask);
  auto subset_of = [&](std::uint32_t mask) {
    std::vector<State> s;
    for (State q = 0; q < n; ++q) {
      if (mask & (std::uint32_t{1} << q)) s.push_back(q);
    }
    return s;
  };
  std::stable_sort(masks.begin(), masks.end(), [&](std::uint32_t a, std::uint32_t b) {
    auto sa = subset_of(a);
    auto sb = subset_of(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    return sa < sb;
  });

  ParityReductionResult result;
  bool all_false = true;
  for (std::uint32_t mask : masks) {
    SubsetRecord rec;
    rec.subset = subset_of(mask);
    rec.reach = decide(parity_reach_automaton(aut, rec.subset), base_closure).outcome;
    rec.tracked = decide(parity_tracked_automaton(aut, rec.subset), tracked_closure).outcome;
    if (rec.reach == Outcome::Value1True && rec.tracked == Outcome::Value1True) {
      rec.status = ParityStatus::True;
    } else if (rec.reach == Outcome::Value1FalseLeaktight ||
               rec.tracked == Outcome::Value1FalseLeaktight) {
      rec.status = ParityStatus::False;
    } else {
      rec.status = ParityStatus::Uncertified;
      all_false = false;
    }
    result.records.push_back(rec);
    if (rec.status == ParityStatus::True) {
      result.overall = ParityStatus::True;
      result.witness_subset = rec.subset;
      return result;
    }
  }
  result.overall = all_false ? ParityStatus::False : ParityStatus::Uncertified;
  return result;
}

}  // namespace leaktight
