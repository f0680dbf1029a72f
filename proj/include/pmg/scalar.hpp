#pragma once

// Scalar backends. Every numeric routine in the library is a template over
// one of Rational (exact), BigFloat (runtime mpfr precision) or double.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <string_view>

namespace pmg {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;
using BigFloat = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

enum class ScalarMode { exact, bigfloat, machine };

inline constexpr unsigned kMinBigFloatDigits = 18;
inline constexpr unsigned kDefaultBigFloatDigits = 30;

std::string_view to_string(ScalarMode mode);
ScalarMode parse_mode(std::string_view text);

/// Parses "p/q", an integer, or a decimal literal ("0.125", "-2.5e-3") into
/// the exact rational it denotes. Throws Error(BadParameter) on bad input.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "n" when the denominator is 1.
std::string to_string(const Rational& value);

/// Correctly rounded conversions from an exact rational.
double rational_to_double(const Rational& value);
BigFloat rational_to_bigfloat(const Rational& value);

/// Sets the working precision (decimal digits) of newly created BigFloat
/// values for the lifetime of the scope. The underlying default is process
/// wide, so concurrent scopes with different precisions must not overlap.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits10);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr ScalarMode mode = ScalarMode::exact;
  static Rational from(const Rational& r) { return r; }
  static std::string format(const Rational& x, int /*digits*/) { return to_string(x); }
  static double default_tolerance() { return 0.0; }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr ScalarMode mode = ScalarMode::machine;
  static double from(const Rational& r) { return rational_to_double(r); }
  static std::string format(double x, int digits);
  static double default_tolerance() { return 1e-9; }
};

template <>
struct ScalarTraits<BigFloat> {
  static constexpr bool exact = false;
  static constexpr ScalarMode mode = ScalarMode::bigfloat;
  static BigFloat from(const Rational& r) { return rational_to_bigfloat(r); }
  static std::string format(const BigFloat& x, int digits);
  /// 10^-(digits - 8) at the current working precision.
  static double default_tolerance();
};

template <class S>
S from_rational(const Rational& r) {
  return ScalarTraits<S>::from(r);
}

template <class S>
std::string format_scalar(const S& x, int digits) {
  return ScalarTraits<S>::format(x, digits);
}

template <class S>
S abs_value(const S& x) {
  return x < S(0) ? S(-x) : x;
}

}  // namespace pmg
