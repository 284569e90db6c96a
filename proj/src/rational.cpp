#include "ctrz/rational.hpp"

#include <cctype>

#include "ctrz/error.hpp"

namespace ctrz {

std::string to_string(const BigInt& n) { return n.get_str(); }

std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

BigInt parse_integer(std::string_view text, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && !text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw InputError("malformed rational \"" + std::string(text) + "\"");
  for (std::size_t k = i; k < text.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw InputError("malformed rational \"" + std::string(text) + "\"");
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return BigInt(digits, 10);
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_integer(text, true));
  BigInt num = parse_integer(text.substr(0, slash), true);
  BigInt den = parse_integer(text.substr(slash + 1), false);
  if (den == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigInt require_integer(const BigRational& q, std::string_view what) {
  if (!is_integer(q))
    throw ValidationError(std::string(what) + " is not an integer: " + to_string(q));
  return q.get_num();
}

}  // namespace ctrz
