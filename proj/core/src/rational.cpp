#include "leaktight/rational.hpp"

#include <cctype>

#include "leaktight/error.hpp"

namespace leaktight {

namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_integer_literal(den))) {
    throw InvalidArgument("malformed rational literal '" + std::string(text) + "'");
  }
  std::string n(num.front() == '+' ? num.substr(1) : num);
  mpz_class numerator(n, 10);
  mpz_class denominator(1);
  if (slash != std::string_view::npos) {
    if (den.front() == '-' || den.front() == '+') {
      throw InvalidArgument("signed denominator in '" + std::string(text) + "'");
    }
    denominator = mpz_class(std::string(den), 10);
    if (denominator == 0) {
      throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    }
  }
  Rational value(numerator, denominator);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::size_t denominator_bits(const Rational& value) {
  return mpz_sizeinbase(value.get_den_mpz_t(), 2);
}

}  // namespace leaktight
