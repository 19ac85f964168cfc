#include "permutope/rational.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "permutope/errors.hpp"

namespace permutope {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("malformed rational: '" + std::string(whole) + "'");
  s.remove_prefix(std::min(s.find_first_not_of('0'), s.size()));
  BigInt value = s.empty() ? BigInt(0) : BigInt(std::string(s));
  return negative ? BigInt(-value) : value;
}

BigInt pow10(std::size_t e) {
  BigInt r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (std::string_view bad : {"nan", "inf", "infinity"}) {
    std::string_view l = lower;
    if (!l.empty() && (l.front() == '-' || l.front() == '+')) l.remove_prefix(1);
    if (l == bad) throw RationalityError("non-finite value '" + std::string(s) + "'");
  }

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt p = parse_integer(s.substr(0, slash), s);
    BigInt q = parse_integer(s.substr(slash + 1), s);
    if (q == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    return Rational(p, q);
  }

  // Decimal with optional fraction and exponent.
  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  long long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = body.substr(e + 1);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) {
      throw ParseError("malformed rational: '" + std::string(s) + "'");
    }
    exponent = std::stoll(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
    body = body.substr(0, e);
  }
  std::string digits;
  std::size_t fraction_digits = 0;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view ip = body.substr(0, dot);
    std::string_view fp = body.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) ||
        (ip.empty() && fp.empty())) {
      throw ParseError("malformed rational: '" + std::string(s) + "'");
    }
    digits = std::string(ip) + std::string(fp);
    fraction_digits = fp.size();
  } else {
    if (!all_digits(body)) throw ParseError("malformed rational: '" + std::string(s) + "'");
    digits = std::string(body);
  }
  // cpp_int reads a leading 0 as an octal prefix.
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
  BigInt mantissa = digits.empty() ? BigInt(0) : BigInt(digits);
  if (negative) mantissa = -mantissa;
  long long scale = exponent - static_cast<long long>(fraction_digits);
  if (scale >= 0) return Rational(mantissa * pow10(static_cast<std::size_t>(scale)));
  return Rational(mantissa, pow10(static_cast<std::size_t>(-scale)));
}

std::string to_decimal_string(const Rational& r, int significant_digits) {
  using Decimal = boost::multiprecision::cpp_dec_float_50;
  Decimal value = Decimal(boost::multiprecision::numerator(r)) /
                  Decimal(boost::multiprecision::denominator(r));
  return value.str(significant_digits, std::ios_base::fmtflags(0));
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt factorial(std::uint64_t n) {
  BigInt result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

}  // namespace permutope
