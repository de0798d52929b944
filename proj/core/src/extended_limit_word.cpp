#include "leaktight/extended_limit_word.hpp"

#include "leaktight/error.hpp"

namespace leaktight {

ExtendedLimitWord::ExtendedLimitWord(LimitWord u, LimitWord u_plus)
    : u_(std::move(u)), u_plus_(std::move(u_plus)) {
  if (u_.size() != u_plus_.size()) throw InvalidArgument("extended limit-word dimension mismatch");
  if (!u_.is_subset_of(u_plus_)) {
    throw InvalidArgument("extended limit-word: u is not pointwise below u+");
  }
}

ExtendedLimitWord::ExtendedLimitWord(LimitWord u) : u_(u), u_plus_(std::move(u)) {}

ExtendedLimitWord ExtendedLimitWord::identity(std::size_t n) {
  return ExtendedLimitWord(LimitWord::identity(n));
}

std::size_t ExtendedLimitWord::hash() const noexcept {
  std::size_t h = u_.hash();
  return h ^ (u_plus_.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

ExtendedLimitWord ext_concat(const ExtendedLimitWord& a, const ExtendedLimitWord& b) {
  return ExtendedLimitWord(concat(a.u_, b.u_), concat(a.u_plus_, b.u_plus_),
                           ExtendedLimitWord::Unchecked{});
}

bool is_idempotent(const ExtendedLimitWord& e) {
  return is_idempotent(e.u()) && is_idempotent(e.u_plus());
}

ExtendedLimitWord ext_iterate(const ExtendedLimitWord& e) {
  if (!is_idempotent(e.u_plus())) {
    throw InvalidArgument("iterate requires an idempotent extended limit-word");
  }
  return ExtendedLimitWord(iterate(e.u_), e.u_plus_, ExtendedLimitWord::Unchecked{});
}

}  // namespace leaktight
