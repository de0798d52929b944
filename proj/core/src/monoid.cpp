#include "leaktight/monoid.hpp"

#include <algorithm>

#include "leaktight/error.hpp"

namespace leaktight {

std::size_t MonoidClosure::max_sharp_height() const {
  return height_.empty() ? 0 : *std::max_element(height_.begin(), height_.end());
}

std::optional<std::size_t> MonoidClosure::find(const ExtendedLimitWord& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

DerivationTree MonoidClosure::derivation(std::size_t i) const {
  std::vector<std::optional<DerivationTree>> memo(i + 1);
  // Children always have smaller indices, so an iterative build in index
  // order over the reachable set avoids deep recursion.
  std::vector<std::size_t> stack{i};
  std::vector<bool> needed(i + 1, false);
  needed[i] = true;
  while (!stack.empty()) {
    std::size_t k = stack.back();
    stack.pop_back();
    const DerivationStep& s = steps_.at(k);
    auto mark = [&](std::size_t c) {
      if (!needed[c]) {
        needed[c] = true;
        stack.push_back(c);
      }
    };
    if (s.kind == DerivationTree::Kind::Concat) {
      mark(s.left);
      mark(s.right);
    } else if (s.kind == DerivationTree::Kind::Iterate) {
      mark(s.left);
    }
  }
  for (std::size_t k = 0; k <= i; ++k) {
    if (!needed[k]) continue;
    const DerivationStep& s = steps_[k];
    switch (s.kind) {
      case DerivationTree::Kind::Identity:
        memo[k] = DerivationTree::identity();
        break;
      case DerivationTree::Kind::Letter:
        memo[k] = DerivationTree::letter(s.letter);
        break;
      case DerivationTree::Kind::Concat:
        memo[k] = DerivationTree::concat(*memo[s.left], *memo[s.right]);
        break;
      case DerivationTree::Kind::Iterate:
        memo[k] = DerivationTree::iterate(*memo[s.left]);
        break;
    }
  }
  return *memo[i];
}

MonoidClosure saturate(const ProbAutomaton& aut, const SaturationOptions& opts) {
  auto gens = letter_generators(aut);
  return saturate(gens, aut.num_states(), opts);
}

MonoidClosure saturate(std::span<const ExtendedLimitWord> generators, std::size_t n,
                       const SaturationOptions& opts) {
  MonoidClosure c;
  c.n_ = n;

  std::size_t round = 0;
  auto add = [&](ExtendedLimitWord e, DerivationStep step, std::size_t height,
                 std::size_t size) {
    auto [it, inserted] = c.index_.try_emplace(std::move(e), c.elements_.size());
    if (!inserted) return;
    if (c.elements_.size() >= opts.max_elements) {
      throw BudgetExceeded(opts.max_elements, c.elements_.size());
    }
    c.elements_.push_back(it->first);
    c.steps_.push_back(step);
    c.height_.push_back(height);
    c.tree_size_.push_back(size);
    c.round_.push_back(round);
  };

  add(ExtendedLimitWord::identity(n), {}, 0, 1);
  for (std::size_t a = 0; a < generators.size(); ++a) {
    if (generators[a].size() != n) throw InvalidArgument("generator dimension mismatch");
    add(generators[a], {DerivationTree::Kind::Letter, a, 0, 0}, 0, 1);
  }

  auto try_iterate = [&](std::size_t i) {
    const ExtendedLimitWord& e = c.elements_[i];
    if (!is_idempotent(e)) return;
    add(ext_iterate(e), {DerivationTree::Kind::Iterate, 0, i, 0}, c.height_[i] + 1,
        c.tree_size_[i] + 1);
  };

  // Generators are the first frontier; iterate them up front.
  std::size_t frontier_begin = 0;
  std::size_t frontier_end = c.elements_.size();
  for (std::size_t i = frontier_begin; i < frontier_end; ++i) try_iterate(i);
  frontier_end = c.elements_.size();

  auto combine = [&](std::size_t i, std::size_t j) {
    add(ext_concat(c.elements_[i], c.elements_[j]), {DerivationTree::Kind::Concat, 0, i, j},
        std::max(c.height_[i], c.height_[j]), c.tree_size_[i] + c.tree_size_[j] + 1);
  };
  auto is_atom = [&](std::size_t i) {
    return c.steps_[i].kind == DerivationTree::Kind::Letter ||
           c.steps_[i].kind == DerivationTree::Kind::Iterate;
  };

  std::vector<std::size_t> atoms;
  std::size_t atoms_done = 0;
  while (frontier_begin < frontier_end) {
    ++round;
    const std::size_t old_end = frontier_end;
    if (opts.strategy == SaturationStrategy::Pairwise) {
      for (std::size_t i = 0; i < old_end; ++i) {
        for (std::size_t j = frontier_begin; j < old_end; ++j) {
          combine(i, j);
          if (i < frontier_begin) combine(j, i);
        }
      }
    } else {
      for (std::size_t i = frontier_begin; i < old_end; ++i) {
        if (is_atom(i)) atoms.push_back(i);
      }
      // Old elements with the new atoms, then new elements with all atoms.
      for (std::size_t i = 0; i < frontier_begin; ++i) {
        for (std::size_t k = atoms_done; k < atoms.size(); ++k) combine(i, atoms[k]);
      }
      for (std::size_t i = frontier_begin; i < old_end; ++i) {
        for (std::size_t a : atoms) combine(i, a);
      }
      atoms_done = atoms.size();
    }
    const std::size_t concat_end = c.elements_.size();
    for (std::size_t i = old_end; i < concat_end; ++i) try_iterate(i);
    frontier_begin = old_end;
    frontier_end = c.elements_.size();
  }
  c.rounds_ = round;

  for (std::size_t i = 0; i < c.elements_.size(); ++i) {
    auto [it, inserted] = c.markov_.index.try_emplace(c.elements_[i].u(), c.markov_.words.size());
    if (inserted) {
      c.markov_.words.push_back(c.elements_[i].u());
      c.markov_.source.push_back(i);
    }
  }
  return c;
}

bool verify_closed(const MonoidClosure& closure) {
  const auto& els = closure.elements();
  for (const auto& e : els) {
    if (is_idempotent(e) && !closure.find(ext_iterate(e))) return false;
    for (const auto& f : els) {
      if (!closure.find(ext_concat(e, f))) return false;
    }
  }
  return true;
}

}  // namespace leaktight
