#include "emc/numbers.hpp"

#include <cctype>
#include <sstream>

namespace emc {

std::string to_string(const BigCount& v) { return v.str(); }

std::string to_string(const Rational& q) {
  const BigCount num = boost::multiprecision::numerator(q);
  const BigCount den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return std::nullopt;

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    BigCount d{std::string(den)};
    if (d == 0) return std::nullopt;
    value = Rational(BigCount{std::string(num)}, d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || !all_digits(frac)) return std::nullopt;
    BigCount scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = Rational(BigCount{std::string(whole)} * scale + BigCount{std::string(frac)}, scale);
  } else {
    if (!all_digits(text)) return std::nullopt;
    value = Rational(BigCount{std::string(text)});
  }
  if (negative) value = -value;
  return value;
}

std::string decimal_string(const Rational& q, int fractional_digits) {
  if (fractional_digits < 0) fractional_digits = 0;
  BigCount num = boost::multiprecision::numerator(q);
  const BigCount den = boost::multiprecision::denominator(q);
  const bool negative = num < 0;
  if (negative) num = -num;

  BigCount scale = 1;
  for (int i = 0; i < fractional_digits; ++i) scale *= 10;
  // round half away from zero
  BigCount scaled = (num * scale * 2 + den) / (den * 2);
  BigCount whole = scaled / scale;
  BigCount frac = scaled % scale;

  std::ostringstream out;
  if (negative && (whole != 0 || frac != 0)) out << '-';
  out << whole.str();
  if (fractional_digits > 0) {
    std::string f = frac.str();
    out << '.' << std::string(fractional_digits - f.size(), '0') << f;
  }
  return out.str();
}

}  // namespace emc
