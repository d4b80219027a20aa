#include "hopfgraph/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hopfgraph {

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) {
    return r.get_num().get_str();
  }
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

BigInt parse_integer(std::string_view text, bool allow_sign) {
  std::size_t pos = 0;
  if (allow_sign && !text.empty() && (text[0] == '-' || text[0] == '+')) {
    pos = 1;
  }
  if (pos == text.size()) {
    throw std::invalid_argument("empty integer in rational literal");
  }
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("invalid character in rational literal: '" +
                                  std::string(text) + "'");
    }
  }
  std::string digits(text);
  if (digits[0] == '+') digits.erase(0, 1);
  return BigInt(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, true));
  }
  BigInt num = parse_integer(text.substr(0, slash), true);
  BigInt den = parse_integer(text.substr(slash + 1), false);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational factorial(unsigned n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational double_factorial(int n) {
  if (n <= 0) return Rational(1);
  BigInt f;
  mpz_2fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

}  // namespace hopfgraph
