#include "fermatrank/numeric.hpp"

#include <cctype>

#include "fermatrank/errors.hpp"

namespace fermatrank {

Int pow_int(const Int& base, unsigned exp) {
  Int result = 1;
  Int b = base;
  while (exp != 0) {
    if (exp & 1u) result *= b;
    exp >>= 1u;
    if (exp != 0) b *= b;
  }
  return result;
}

std::string int_to_string(const Int& x) { return x.str(); }

std::string rat_to_string(const Rat& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Int int_from_string(const std::string& text) {
  if (text.empty()) fail(ErrorCode::invalid_argument, "empty integer literal");
  std::size_t i = text[0] == '-' || text[0] == '+' ? 1 : 0;
  if (i == text.size()) fail(ErrorCode::invalid_argument, "bad integer literal: " + text);
  for (; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      fail(ErrorCode::invalid_argument, "bad integer literal: " + text);
  return Int(text);
}

Rat rat_from_string(const std::string& text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) return Rat(int_from_string(text));
  const Int num = int_from_string(text.substr(0, slash));
  const Int den = int_from_string(text.substr(slash + 1));
  if (den == 0) fail(ErrorCode::invalid_argument, "zero denominator: " + text);
  return Rat(num, den);
}

double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace fermatrank
