#include "qaoadepth/rational.hpp"

#include "qaoadepth/error.hpp"

#include <cctype>
#include <limits>

namespace qaoadepth {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Boost reads a leading zero as an octal prefix.
BigInt decimal(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  return first == std::string_view::npos ? BigInt(0) : BigInt(std::string(digits.substr(first)));
}

BigInt pow10(long exponent) {
  BigInt out = 1;
  for (long i = 0; i < exponent; ++i) out *= 10;
  return out;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorKind::invalid_input, "malformed number '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad_number(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    BigInt d = decimal(den);
    if (d == 0) throw Error(ErrorKind::invalid_input, "zero denominator in '" + std::string(text) + "'");
    result = Rational(decimal(num), d);
  } else {
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_text = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) bad_number(text);
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
      s = s.substr(0, e);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      auto whole = s.substr(0, dot);
      auto frac = s.substr(dot + 1);
      if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
          (whole.empty() && frac.empty())) {
        bad_number(text);
      }
      digits = std::string(whole) + std::string(frac);
      exponent -= static_cast<long>(frac.size());
    } else {
      if (!all_digits(s)) bad_number(text);
      digits = std::string(s);
    }
    BigInt mantissa = decimal(digits);
    if (exponent >= 0) {
      result = Rational(mantissa * pow10(exponent));
    } else {
      result = Rational(mantissa, pow10(-exponent));
    }
  }
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& value) { return value.str(); }

bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

BigInt ceil(const Rational& value) {
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  BigInt q = num / den;  // truncates toward zero
  if (q * den != num && num > 0) q += 1;
  return q;
}

std::uint32_t bits_for_range(const BigInt& value) {
  std::uint32_t bits = 0;
  BigInt capacity = 0;  // 2^bits - 1
  while (capacity < value) {
    ++bits;
    capacity = capacity * 2 + 1;
  }
  return bits;
}

std::optional<std::int64_t> to_int64(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    return std::nullopt;
  }
  return value.convert_to<std::int64_t>();
}

}  // namespace qaoadepth
