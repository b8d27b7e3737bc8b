#include "stabcover/rational.hpp"

#include <cctype>

namespace stabcover {

namespace {

bool valid_integer_token(const std::string& s, std::size_t begin, std::size_t end,
                         bool allow_sign) {
  if (begin >= end) return false;
  std::size_t i = begin;
  if (allow_sign && (s[i] == '+' || s[i] == '-')) ++i;
  if (i >= end) return false;
  for (; i < end; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s[0] == '+') s = s.substr(1);  // GMP rejects a leading '+'
  std::size_t slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_token(s, 0, s.size(), true)) return std::nullopt;
  } else {
    if (!valid_integer_token(s, 0, slash, true)) return std::nullopt;
    if (!valid_integer_token(s, slash + 1, s.size(), false)) return std::nullopt;
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) return std::nullopt;
  if (slash != std::string::npos && q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& value) {
  return value.get_str();
}

bool is_integer(const Rational& value) {
  return value.get_den() == 1;
}

}  // namespace stabcover
