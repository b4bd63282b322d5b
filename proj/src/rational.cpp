#include "boxmin/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace boxmin {

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
    }
  }
  // a leading 0 would make the string octal
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return BigInt(0);
  return BigInt(std::string(digits.substr(first)));
}

BigInt pow10(long long e) {
  BigInt p = 1;
  for (long long i = 0; i < e; ++i) p *= 10;
  return p;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty number");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational num = parse_rational(text.substr(0, slash));
    const Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(whole) + "'");
    return num / den;
  }

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  long long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = text.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    const BigInt magnitude = parse_integer(exp_text, whole);
    if (magnitude > 4000) throw std::invalid_argument("exponent out of range in '" + std::string(whole) + "'");
    exponent = magnitude.convert_to<long long>();
    if (exp_negative) exponent = -exponent;
    text = text.substr(0, e);
  }

  std::string digits;
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long long>(frac_part.size());
  } else {
    digits = std::string(text);
  }

  Rational value(parse_integer(digits, whole));
  if (exponent > 0) value *= pow10(exponent);
  if (exponent < 0) value /= pow10(-exponent);
  return negative ? -value : value;
}

BigInt floor_of(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

}  // namespace boxmin
