#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "leaktight/automaton.hpp"

namespace leaktight {

/// Boolean |Q| x |Q| matrix stored as per-row bitsets of 64-bit words.
///
/// A limit-word proper has every row nonempty; the class itself also admits
/// the zero matrix so that it can be built incrementally, and
/// `rows_nonempty()` tells the two apart.
class LimitWord {
 public:
  using Block = std::uint64_t;
  static constexpr std::size_t kBlockBits = 64;

  LimitWord() = default;
  explicit LimitWord(std::size_t n)
      : n_(n), blocks_per_row_((n + kBlockBits - 1) / kBlockBits), bits_(n * blocks_per_row_) {}

  static LimitWord identity(std::size_t n);
  static LimitWord full(std::size_t n);
  /// Builds from an edge list; throws InvalidArgument if a row stays empty.
  static LimitWord from_edges(std::size_t n, std::span<const std::pair<State, State>> edges);
  static LimitWord from_edges(std::size_t n, std::initializer_list<std::pair<State, State>> edges);
  /// Support of a stochastic matrix (positive entries).
  static LimitWord support_of(const TransitionMatrix& m);
  /// Parses rows written as 0/1 strings, e.g. {"01", "11"}.
  static LimitWord from_rows(std::span<const std::string> rows);

  std::size_t size() const noexcept { return n_; }
  std::size_t blocks_per_row() const noexcept { return blocks_per_row_; }

  bool get(State s, State t) const noexcept {
    return (bits_[s * blocks_per_row_ + t / kBlockBits] >> (t % kBlockBits)) & 1U;
  }
  void set(State s, State t, bool value = true) noexcept {
    Block mask = Block{1} << (t % kBlockBits);
    Block& b = bits_[s * blocks_per_row_ + t / kBlockBits];
    b = value ? (b | mask) : (b & ~mask);
  }

  std::span<const Block> row(State s) const noexcept {
    return std::span<const Block>(bits_.data(), bits_.size()).subspan(s * blocks_per_row_, blocks_per_row_);
  }
  std::span<Block> row(State s) noexcept {
    return std::span<Block>(bits_.data(), bits_.size()).subspan(s * blocks_per_row_, blocks_per_row_);
  }
  std::span<const Block> blocks() const noexcept { return {bits_.data(), bits_.size()}; }

  bool rows_nonempty() const noexcept;
  std::vector<State> successors(State s) const;
  std::vector<std::pair<State, State>> edges() const;
  /// Row-major 0/1 strings, one per state.
  std::vector<std::string> to_rows() const;
  std::size_t hash() const noexcept;

  /// Pointwise order: every edge of *this is an edge of `other`.
  bool is_subset_of(const LimitWord& other) const noexcept;

  friend bool operator==(const LimitWord&, const LimitWord&) = default;
  friend std::strong_ordering operator<=>(const LimitWord& a, const LimitWord& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.bits_.begin(), a.bits_.end(),
                                                  b.bits_.begin(), b.bits_.end());
  }

 private:
  std::size_t n_ = 0;
  std::size_t blocks_per_row_ = 0;
  std::vector<Block> bits_;
};

struct LimitWordHash {
  std::size_t operator()(const LimitWord& u) const noexcept { return u.hash(); }
};

/// Boolean matrix product: (u.v)(s,t) = 1 iff u(s,q) and v(q,t) for some q.
LimitWord concat(const LimitWord& u, const LimitWord& v);
inline LimitWord operator*(const LimitWord& u, const LimitWord& v) { return concat(u, v); }

bool is_idempotent(const LimitWord& u);

/// The unique idempotent among the powers of u (equal to u^{|Q|!}).
LimitWord idempotent_power(const LimitWord& u);

/// States s with u(s,t) => u(t,s) for all t. Requires u idempotent.
std::vector<State> recurrent_states(const LimitWord& u);
bool is_recurrent(const LimitWord& u, State s);

/// u#: keeps the edges of u that lead to a u-recurrent state. Requires u idempotent.
LimitWord iterate(const LimitWord& u);

/// Number of classes of s ~ t (u(s,t) and u(t,s)) on {s | u(s,s)}. Requires u idempotent.
std::size_t cl_count(const LimitWord& u);

}  // namespace leaktight
