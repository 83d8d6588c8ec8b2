#include "polyprobe/rational.hpp"

#include <cctype>

namespace polyprobe {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::optional<BigInt> parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) return std::nullopt;
  BigInt value(std::string(s));
  return negative ? -value : value;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_integer(text.substr(0, slash));
    auto den = parse_integer(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return Rational(*num, *den);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view head = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = false;
    if (!head.empty() && (head.front() == '+' || head.front() == '-')) {
      negative = head.front() == '-';
      head.remove_prefix(1);
    }
    if (!all_digits(frac) || (!head.empty() && !all_digits(head))) return std::nullopt;
    BigInt integer_part = head.empty() ? BigInt(0) : BigInt(std::string(head));
    BigInt frac_part(std::string(frac));
    BigInt scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational value = Rational(integer_part) + Rational(frac_part, scale);
    return negative ? -value : value;
  }

  auto integer = parse_integer(text);
  if (!integer) return std::nullopt;
  return Rational(*integer);
}

std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace polyprobe
