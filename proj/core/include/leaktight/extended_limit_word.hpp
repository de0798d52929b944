#pragma once

#include <cstddef>

#include "leaktight/limit_word.hpp"

namespace leaktight {

/// Pair (u, u+) with u pointwise below u+. The second component remembers
/// every edge that is still positive at finite horizons.
class ExtendedLimitWord {
 public:
  ExtendedLimitWord() = default;
  /// Throws InvalidArgument on dimension mismatch or when u is not below u+.
  ExtendedLimitWord(LimitWord u, LimitWord u_plus);
  /// The diagonal pair (u, u).
  explicit ExtendedLimitWord(LimitWord u);

  static ExtendedLimitWord identity(std::size_t n);

  const LimitWord& u() const noexcept { return u_; }
  const LimitWord& u_plus() const noexcept { return u_plus_; }
  std::size_t size() const noexcept { return u_.size(); }
  std::size_t hash() const noexcept;

  friend bool operator==(const ExtendedLimitWord&, const ExtendedLimitWord&) = default;
  friend auto operator<=>(const ExtendedLimitWord&, const ExtendedLimitWord&) = default;

 private:
  friend ExtendedLimitWord ext_concat(const ExtendedLimitWord&, const ExtendedLimitWord&);
  friend ExtendedLimitWord ext_iterate(const ExtendedLimitWord&);
  struct Unchecked {};
  ExtendedLimitWord(LimitWord u, LimitWord u_plus, Unchecked)
      : u_(std::move(u)), u_plus_(std::move(u_plus)) {}

  LimitWord u_;
  LimitWord u_plus_;
};

struct ExtendedLimitWordHash {
  std::size_t operator()(const ExtendedLimitWord& e) const noexcept { return e.hash(); }
};

ExtendedLimitWord ext_concat(const ExtendedLimitWord& a, const ExtendedLimitWord& b);
inline ExtendedLimitWord operator*(const ExtendedLimitWord& a, const ExtendedLimitWord& b) {
  return ext_concat(a, b);
}

/// Both components idempotent.
bool is_idempotent(const ExtendedLimitWord& e);

/// (u, u+)# = (u#, u+). Throws InvalidArgument unless both components are idempotent.
ExtendedLimitWord ext_iterate(const ExtendedLimitWord& e);

}  // namespace leaktight
