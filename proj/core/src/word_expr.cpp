#include "leaktight/word_expr.hpp"

#include <limits>

#include "leaktight/error.hpp"

namespace leaktight {

namespace {
constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) noexcept {
  return a > kMax - b ? kMax : a + b;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept {
  if (a == 0 || b == 0) return 0;
  return a > kMax / b ? kMax : a * b;
}

WordExpr WordExpr::letter(Letter a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Letter;
  n->letter = a;
  n->length = 1;
  return WordExpr(std::move(n));
}

WordExpr WordExpr::empty() { return seq({}); }

WordExpr WordExpr::seq(std::vector<WordExpr> parts) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Seq;
  for (const WordExpr& p : parts) n->length = saturating_add(n->length, p.length());
  n->parts = std::move(parts);
  return WordExpr(std::move(n));
}

WordExpr WordExpr::repeat(WordExpr body, std::uint64_t count) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Repeat;
  n->count = count;
  n->length = saturating_mul(body.length(), count);
  n->parts.push_back(std::move(body));
  return WordExpr(std::move(n));
}

WordExpr WordExpr::from_word(const Word& word) {
  std::vector<WordExpr> parts;
  parts.reserve(word.size());
  for (Letter a : word) parts.push_back(letter(a));
  return seq(std::move(parts));
}

Word WordExpr::materialize(std::uint64_t max_length) const {
  if (length() > max_length) {
    throw LengthBudgetExceeded("word of length " + std::to_string(length()) +
                               " exceeds the budget of " + std::to_string(max_length));
  }
  Word w;
  w.reserve(length());
  for_each_letter([&](Letter a) { w.push_back(a); });
  return w;
}

std::string WordExpr::to_string(const ProbAutomaton& aut) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::Letter:
      return aut.letter_name(n.letter);
    case Kind::Seq: {
      if (n.parts.empty()) return "eps";
      std::string out;
      for (const WordExpr& p : n.parts) {
        if (!out.empty()) out += ' ';
        out += p.to_string(aut);
      }
      return out;
    }
    case Kind::Repeat: {
      const WordExpr& body = n.parts.front();
      std::string inner = body.to_string(aut);
      if (body.kind() != Kind::Letter) inner = "(" + inner + ")";
      return inner + "^" + std::to_string(n.count);
    }
  }
  return {};
}

}  // namespace leaktight
