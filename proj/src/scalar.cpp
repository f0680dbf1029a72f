#include "pmg/scalar.hpp"

#include "pmg/errors.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace pmg {

std::string_view to_string(ScalarMode mode) {
  switch (mode) {
    case ScalarMode::exact:
      return "exact";
    case ScalarMode::bigfloat:
      return "bigfloat";
    case ScalarMode::machine:
      return "machine";
  }
  return "unknown";
}

ScalarMode parse_mode(std::string_view text) {
  if (text == "exact") return ScalarMode::exact;
  if (text == "bigfloat") return ScalarMode::bigfloat;
  if (text == "machine") return ScalarMode::machine;
  throw Error(ErrorCode::BadParameter, "unknown scalar mode '" + std::string(text) + "'");
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorCode::BadParameter, "not a rational or decimal literal: '" + std::string(text) + "'");
}

Integer parse_integer(std::string_view digits) {
  // A leading zero would select octal in the GMP string constructor.
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return Integer(std::string(digits));
}

Integer pow10(unsigned n) {
  Integer r = 1;
  for (unsigned i = 0; i < n; ++i) r *= 10;
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) bad_number(text);

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = trim(s.substr(0, slash));
    auto den = trim(s.substr(slash + 1));
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    Integer d = parse_integer(den);
    if (d == 0) throw Error(ErrorCode::BadParameter, "zero denominator in '" + std::string(text) + "'");
    value = Rational(parse_integer(num), d);
  } else {
    std::string_view mantissa = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = s.substr(0, e);
      std::string_view exp_text = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) bad_number(text);
      std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
      if (exp_negative) exponent = -exponent;
    }
    std::string_view int_part = mantissa;
    std::string_view frac_part;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      int_part = mantissa.substr(0, dot);
      frac_part = mantissa.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) bad_number(text);
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)))
      bad_number(text);
    std::string digits = std::string(int_part) + std::string(frac_part);
    Integer numerator = parse_integer(digits);
    long scale = static_cast<long>(frac_part.size()) - exponent;
    if (scale >= 0) {
      value = Rational(numerator, pow10(static_cast<unsigned>(scale)));
    } else {
      value = Rational(numerator * pow10(static_cast<unsigned>(-scale)));
    }
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  if (mp::denominator(value) == 1) return mp::numerator(value).str();
  return mp::numerator(value).str() + "/" + mp::denominator(value).str();
}

double rational_to_double(const Rational& value) {
  // mpq_get_d truncates; route through a 53-bit mpfr value for round-to-nearest.
  mpfr_t tmp;
  mpfr_init2(tmp, 53);
  mpfr_set_q(tmp, value.backend().data(), MPFR_RNDN);
  double out = mpfr_get_d(tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  return out;
}

BigFloat rational_to_bigfloat(const Rational& value) {
  BigFloat out;
  mpfr_set_q(out.backend().data(), value.backend().data(), MPFR_RNDN);
  return out;
}

PrecisionScope::PrecisionScope(unsigned digits10) : saved_(BigFloat::default_precision()) {
  if (digits10 < kMinBigFloatDigits) {
    throw Error(ErrorCode::BadParameter,
                "bigfloat precision must be at least " + std::to_string(kMinBigFloatDigits) + " digits");
  }
  BigFloat::default_precision(digits10);
}

PrecisionScope::~PrecisionScope() { BigFloat::default_precision(saved_); }

std::string ScalarTraits<double>::format(double x, int digits) {
  std::ostringstream out;
  out << std::setprecision(std::clamp(digits, 1, 17)) << x;
  return out.str();
}

std::string ScalarTraits<BigFloat>::format(const BigFloat& x, int digits) {
  return x.str(std::max(digits, 1));
}

double ScalarTraits<BigFloat>::default_tolerance() {
  int digits = static_cast<int>(BigFloat::default_precision());
  return std::pow(10.0, -(digits - 8));
}

}  // namespace pmg
