#include "leaktight/witness.hpp"

#include <algorithm>
#include <tuple>

#include "leaktight/error.hpp"

namespace leaktight {

std::string to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::Value1:
      return "value1";
    case WitnessKind::Leak:
      return "leak";
    case WitnessKind::NonSimplicity:
      return "non_simplicity";
  }
  return "unknown";
}

bool is_value1_witness(const LimitWord& u, const ProbAutomaton& aut) {
  if (u.size() != aut.num_states()) return false;
  for (State s : aut.initial().support()) {
    for (State t = 0; t < u.size(); ++t) {
      if (u.get(s, t) && !aut.is_final(t)) return false;
    }
  }
  return true;
}

bool is_leak_witness(const ExtendedLimitWord& e, State r, State q) {
  if (r >= e.size() || q >= e.size() || !is_idempotent(e)) return false;
  return is_recurrent(e.u(), r) && is_recurrent(e.u(), q) && !e.u().get(r, q) &&
         e.u_plus().get(r, q);
}

bool is_non_simplicity_witness(const LimitWord& u, const LimitWord& v, const LimitWord& w, State r,
                               State t) {
  if (u.size() != v.size() || v.size() != w.size() || r >= u.size() || t >= u.size()) return false;
  if (!is_idempotent(v)) return false;
  LimitWord z = u * iterate(v) * w;
  return is_idempotent(z) && is_recurrent(z, r) && (u * v).get(r, t) && !is_recurrent(v, t);
}

namespace {

WitnessReport make_report(const MonoidClosure& closure, WitnessKind kind,
                          std::vector<std::size_t> elements,
                          std::vector<std::pair<State, State>> states) {
  WitnessReport rep;
  rep.kind = kind;
  for (std::size_t i : elements) {
    rep.values.push_back(closure.element(i));
    rep.derivations.push_back(closure.derivation(i));
  }
  rep.elements = std::move(elements);
  rep.states = std::move(states);
  return rep;
}

// Factors of the top-level concatenation of element i's derivation.
void flatten(const MonoidClosure& closure, std::size_t i, std::vector<std::size_t>& out) {
  const DerivationStep& s = closure.step(i);
  if (s.kind == DerivationTree::Kind::Concat) {
    flatten(closure, s.left, out);
    flatten(closure, s.right, out);
  } else {
    out.push_back(i);
  }
}

// Given u, v, w, replaces w by w z^(p-1) so that u v# w becomes the
// idempotent power z^p of z = u v# w. Returns the new w and the idempotent.
std::pair<LimitWord, LimitWord> complete(const LimitWord& uvs, const LimitWord& w) {
  LimitWord z = uvs * w;
  LimitWord w2 = w;
  LimitWord zp = z;
  while (!is_idempotent(zp)) {
    w2 = w2 * z;
    zp = zp * z;
  }
  return {w2, zp};
}

std::optional<std::pair<State, State>> triple_states(const LimitWord& uv, const LimitWord& v,
                                                     const LimitWord& z) {
  const std::size_t n = v.size();
  for (State r = 0; r < n; ++r) {
    if (!is_recurrent(z, r)) continue;
    for (State t = 0; t < n; ++t) {
      if (uv.get(r, t) && !is_recurrent(v, t)) return std::make_pair(r, t);
    }
  }
  return std::nullopt;
}

std::optional<WitnessReport> triple_report(const MonoidClosure& closure, const LimitWord& u,
                                           const LimitWord& v, const LimitWord& w) {
  const auto& proj = closure.markov_monoid();
  if (!is_idempotent(v)) return std::nullopt;
  auto [w2, z] = complete(u * iterate(v), w);
  auto st = triple_states(u * v, v, z);
  if (!st) return std::nullopt;
  auto src = [&](const LimitWord& x) { return proj.source.at(proj.index.at(x)); };
  return make_report(closure, WitnessKind::NonSimplicity, {src(u), src(v), src(w2)}, {*st});
}

}  // namespace

std::optional<WitnessReport> find_value1_witness(const MonoidClosure& closure,
                                                 const ProbAutomaton& aut) {
  std::optional<std::size_t> best;
  auto key = [&](std::size_t i) {
    return std::make_tuple(closure.sharp_height(i), closure.derivation_size(i), i);
  };
  for (std::size_t i = 0; i < closure.size(); ++i) {
    if (!is_value1_witness(closure.element(i).u(), aut)) continue;
    if (!best || key(i) < key(*best)) best = i;
  }
  if (!best) return std::nullopt;
  return make_report(closure, WitnessKind::Value1, {*best}, {});
}

std::vector<WitnessReport> all_leak_witnesses(const MonoidClosure& closure) {
  std::vector<std::tuple<State, State, std::size_t, std::size_t>> found;
  for (std::size_t i = 0; i < closure.size(); ++i) {
    const ExtendedLimitWord& e = closure.element(i);
    if (e.u() == e.u_plus() || !is_idempotent(e)) continue;
    for (State r = 0; r < e.size(); ++r) {
      if (!is_recurrent(e.u(), r)) continue;
      for (State q = 0; q < e.size(); ++q) {
        if (is_leak_witness(e, r, q)) found.emplace_back(r, q, closure.derivation_size(i), i);
      }
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<WitnessReport> out;
  out.reserve(found.size());
  for (auto [r, q, size, i] : found) {
    out.push_back(make_report(closure, WitnessKind::Leak, {i}, {{r, q}}));
  }
  return out;
}

std::optional<WitnessReport> find_leak_witness(const MonoidClosure& closure) {
  std::optional<std::tuple<State, State, std::size_t, std::size_t>> best;
  for (std::size_t i = 0; i < closure.size(); ++i) {
    const ExtendedLimitWord& e = closure.element(i);
    if (e.u() == e.u_plus() || !is_idempotent(e)) continue;
    for (State r = 0; r < e.size(); ++r) {
      for (State q = 0; q < e.size(); ++q) {
        if (!is_leak_witness(e, r, q)) continue;
        auto cand = std::make_tuple(r, q, closure.derivation_size(i), i);
        if (!best || cand < *best) best = cand;
      }
    }
  }
  if (!best) return std::nullopt;
  auto [r, q, size, i] = *best;
  return make_report(closure, WitnessKind::Leak, {i}, {{r, q}});
}

std::optional<WitnessReport> find_non_simplicity_witness(const MonoidClosure& closure) {
  // Leaking idempotents: r recurrent, u(r,t) = 0, u+(r,t) = 1. The argument
  // that a leak yields a triple splits such an element at an iteration.
  std::vector<std::size_t> leaking;
  for (std::size_t i = 0; i < closure.size(); ++i) {
    const ExtendedLimitWord& e = closure.element(i);
    if (e.u() == e.u_plus() || !is_idempotent(e)) continue;
    bool hit = false;
    for (State r = 0; r < e.size() && !hit; ++r) {
      if (!is_recurrent(e.u(), r)) continue;
      for (State t = 0; t < e.size() && !hit; ++t) hit = !e.u().get(r, t) && e.u_plus().get(r, t);
    }
    if (hit) leaking.push_back(i);
  }
  std::stable_sort(leaking.begin(), leaking.end(), [&](std::size_t a, std::size_t b) {
    return closure.sharp_height(a) < closure.sharp_height(b);
  });

  const std::size_t n = closure.num_states();
  for (std::size_t i : leaking) {
    std::vector<std::size_t> factors;
    flatten(closure, i, factors);
    for (std::size_t k = 0; k < factors.size(); ++k) {
      const DerivationStep& s = closure.step(factors[k]);
      if (s.kind != DerivationTree::Kind::Iterate) continue;
      LimitWord u = LimitWord::identity(n);
      for (std::size_t j = 0; j < k; ++j) u = u * closure.element(factors[j]).u();
      LimitWord w = LimitWord::identity(n);
      for (std::size_t j = k + 1; j < factors.size(); ++j) w = w * closure.element(factors[j]).u();
      if (auto rep = triple_report(closure, u, closure.element(s.left).u(), w)) return rep;
    }
  }

  const auto& words = closure.markov_monoid().words;
  for (const LimitWord& v : words) {
    if (!is_idempotent(v)) continue;
    if (recurrent_states(v).size() == n) continue;
    LimitWord vs = iterate(v);
    for (const LimitWord& u : words) {
      LimitWord uv = u * v;
      bool reaches_transient = false;
      for (State r = 0; r < n && !reaches_transient; ++r) {
        for (State t = 0; t < n && !reaches_transient; ++t) {
          reaches_transient = uv.get(r, t) && !is_recurrent(v, t);
        }
      }
      if (!reaches_transient) continue;
      LimitWord uvs = u * vs;
      for (const LimitWord& w : words) {
        auto [w2, z] = complete(uvs, w);
        if (triple_states(uv, v, z)) return triple_report(closure, u, v, w);
      }
    }
  }
  return std::nullopt;
}

bool recheck(const WitnessReport& report, const ProbAutomaton& aut) {
  if (report.values.size() != report.derivations.size()) return false;
  try {
    for (std::size_t i = 0; i < report.values.size(); ++i) {
      if (evaluate(report.derivations[i], aut) != report.values[i]) return false;
    }
  } catch (const Error&) {
    return false;
  }
  switch (report.kind) {
    case WitnessKind::Value1:
      return report.values.size() == 1 && is_value1_witness(report.values[0].u(), aut);
    case WitnessKind::Leak:
      return report.values.size() == 1 && report.states.size() == 1 &&
             is_leak_witness(report.values[0], report.states[0].first, report.states[0].second);
    case WitnessKind::NonSimplicity:
      return report.values.size() == 3 && report.states.size() == 1 &&
             is_non_simplicity_witness(report.values[0].u(), report.values[1].u(),
                                       report.values[2].u(), report.states[0].first,
                                       report.states[0].second);
  }
  return false;
}

}  // namespace leaktight
