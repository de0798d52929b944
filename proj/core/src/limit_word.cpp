#include "leaktight/limit_word.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "leaktight/error.hpp"

namespace leaktight {

namespace {

void require_idempotent(const LimitWord& u, const char* op) {
  if (!is_idempotent(u)) {
    throw InvalidArgument(std::string(op) + " requires an idempotent limit-word");
  }
}

}  // namespace

LimitWord LimitWord::identity(std::size_t n) {
  LimitWord u(n);
  for (State s = 0; s < n; ++s) u.set(s, s);
  return u;
}

LimitWord LimitWord::full(std::size_t n) {
  LimitWord u(n);
  for (State s = 0; s < n; ++s) {
    for (State t = 0; t < n; ++t) u.set(s, t);
  }
  return u;
}

LimitWord LimitWord::from_edges(std::size_t n, std::span<const std::pair<State, State>> edges) {
  LimitWord u(n);
  for (auto [s, t] : edges) {
    if (s >= n || t >= n) throw InvalidArgument("limit-word edge out of range");
    u.set(s, t);
  }
  if (!u.rows_nonempty()) throw InvalidArgument("limit-word has an empty row");
  return u;
}

LimitWord LimitWord::from_edges(std::size_t n,
                                std::initializer_list<std::pair<State, State>> edges) {
  return from_edges(n, std::span<const std::pair<State, State>>(edges.begin(), edges.size()));
}

LimitWord LimitWord::support_of(const TransitionMatrix& m) {
  LimitWord u(m.size());
  for (State s = 0; s < m.size(); ++s) {
    for (State t = 0; t < m.size(); ++t) {
      if (m.at(s, t) > 0) u.set(s, t);
    }
  }
  return u;
}

LimitWord LimitWord::from_rows(std::span<const std::string> rows) {
  LimitWord u(rows.size());
  for (State s = 0; s < rows.size(); ++s) {
    if (rows[s].size() != rows.size()) throw InvalidArgument("limit-word row has wrong length");
    for (State t = 0; t < rows.size(); ++t) {
      if (rows[s][t] == '1') {
        u.set(s, t);
      } else if (rows[s][t] != '0') {
        throw InvalidArgument("limit-word rows must be 0/1 strings");
      }
    }
  }
  return u;
}

bool LimitWord::rows_nonempty() const noexcept {
  for (State s = 0; s < n_; ++s) {
    auto r = row(s);
    if (std::all_of(r.begin(), r.end(), [](Block b) { return b == 0; })) return false;
  }
  return true;
}

std::vector<State> LimitWord::successors(State s) const {
  std::vector<State> out;
  for (State t = 0; t < n_; ++t) {
    if (get(s, t)) out.push_back(t);
  }
  return out;
}

std::vector<std::pair<State, State>> LimitWord::edges() const {
  std::vector<std::pair<State, State>> out;
  for (State s = 0; s < n_; ++s) {
    for (State t = 0; t < n_; ++t) {
      if (get(s, t)) out.emplace_back(s, t);
    }
  }
  return out;
}

std::vector<std::string> LimitWord::to_rows() const {
  std::vector<std::string> rows(n_, std::string(n_, '0'));
  for (State s = 0; s < n_; ++s) {
    for (State t = 0; t < n_; ++t) {
      if (get(s, t)) rows[s][t] = '1';
    }
  }
  return rows;
}

std::size_t LimitWord::hash() const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ n_;
  for (Block b : bits_) {
    h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

bool LimitWord::is_subset_of(const LimitWord& other) const noexcept {
  if (n_ != other.n_) return false;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] & ~other.bits_[i]) return false;
  }
  return true;
}

LimitWord concat(const LimitWord& u, const LimitWord& v) {
  if (u.size() != v.size()) throw InvalidArgument("limit-word dimension mismatch");
  const std::size_t n = u.size();
  const std::size_t w = u.blocks_per_row();
  LimitWord out(n);
  for (State s = 0; s < n; ++s) {
    auto dst = out.row(s);
    auto src = u.row(s);
    for (std::size_t blk = 0; blk < w; ++blk) {
      for (LimitWord::Block bits = src[blk]; bits != 0; bits &= bits - 1) {
        State q = blk * LimitWord::kBlockBits + static_cast<State>(std::countr_zero(bits));
        auto vq = v.row(q);
        for (std::size_t k = 0; k < w; ++k) dst[k] |= vq[k];
      }
    }
  }
  return out;
}

bool is_idempotent(const LimitWord& u) { return concat(u, u) == u; }

LimitWord idempotent_power(const LimitWord& u) {
  // Walk u, u^2, u^3, ... until a power repeats: u^i = u^j with i < j. The
  // idempotent power is u^m for the first m >= i that is a multiple of j - i.
  std::unordered_map<LimitWord, std::size_t, LimitWordHash> seen;
  std::vector<LimitWord> powers;
  LimitWord p = u;
  std::size_t k = 1;
  while (true) {
    auto [it, inserted] = seen.emplace(p, k);
    if (!inserted) break;
    powers.push_back(p);
    p = concat(p, u);
    ++k;
  }
  const std::size_t index = seen.at(p);
  const std::size_t period = k - index;
  std::size_t m = ((index + period - 1) / period) * period;
  return powers[m - 1];
}

bool is_recurrent(const LimitWord& u, State s) {
  for (State t = 0; t < u.size(); ++t) {
    if (u.get(s, t) && !u.get(t, s)) return false;
  }
  return true;
}

std::vector<State> recurrent_states(const LimitWord& u) {
  require_idempotent(u, "recurrent_states");
  std::vector<State> out;
  for (State s = 0; s < u.size(); ++s) {
    if (is_recurrent(u, s)) out.push_back(s);
  }
  return out;
}

LimitWord iterate(const LimitWord& u) {
  require_idempotent(u, "iterate");
  LimitWord keep(u.size());
  // Column mask of recurrent states, applied to every row.
  std::vector<LimitWord::Block> mask(u.blocks_per_row(), 0);
  for (State t = 0; t < u.size(); ++t) {
    if (is_recurrent(u, t)) mask[t / LimitWord::kBlockBits] |= LimitWord::Block{1} << (t % 64);
  }
  for (State s = 0; s < u.size(); ++s) {
    auto src = u.row(s);
    auto dst = keep.row(s);
    for (std::size_t k = 0; k < mask.size(); ++k) dst[k] = src[k] & mask[k];
  }
  return keep;
}

std::size_t cl_count(const LimitWord& u) {
  require_idempotent(u, "cl_count");
  const std::size_t n = u.size();
  std::vector<bool> assigned(n, false);
  std::size_t classes = 0;
  for (State s = 0; s < n; ++s) {
    if (assigned[s] || !u.get(s, s)) continue;
    ++classes;
    for (State t = s; t < n; ++t) {
      if (u.get(s, t) && u.get(t, s)) assigned[t] = true;
    }
  }
  return classes;
}

}  // namespace leaktight
