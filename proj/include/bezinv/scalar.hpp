#pragma once

// Scalar kinds shared by every module: exact GMP rationals and doubles.

#include <gmpxx.h>

#include <cmath>
#include <concepts>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bezinv {

using Rational = mpq_class;
using Integer = mpz_class;

template <class T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, double>;

template <class T>
inline constexpr bool is_exact_v = std::same_as<T, Rational>;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define BEZINV_DEFINE_ERROR(Name)      \
  class Name : public Error {          \
   public:                             \
    using Error::Error;                \
  }

BEZINV_DEFINE_ERROR(ZeroPolynomialError);
BEZINV_DEFINE_ERROR(NotRepresentableError);
BEZINV_DEFINE_ERROR(DegreeMismatchError);
BEZINV_DEFINE_ERROR(NotExactError);
BEZINV_DEFINE_ERROR(NonFiniteError);
BEZINV_DEFINE_ERROR(DegenerateVectorError);
BEZINV_DEFINE_ERROR(DenominatorZeroError);
BEZINV_DEFINE_ERROR(InvalidCurveError);
BEZINV_DEFINE_ERROR(ParseError);

#undef BEZINV_DEFINE_ERROR

inline double to_double(const Rational& r) { return r.get_d(); }
inline double to_double(double d) { return d; }

template <Scalar T>
T from_rational(const Rational& r) {
  if constexpr (is_exact_v<T>) {
    return r;
  } else {
    return r.get_d();
  }
}

template <Scalar T>
T from_int(long v) {
  return T(v);
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(double d) { return d == 0.0; }

inline double magnitude(const Rational& r) { return std::fabs(r.get_d()); }
inline double magnitude(double d) { return std::fabs(d); }

/// Exact rational equal to a finite double.
Rational exact_from_double(double d);

/// Parses "12", "-3.0395517", "1.5e-3" or "22/7" into an exact rational.
/// Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// %.17g formatting, enough to round-trip any double.
std::string format_double(double d);

template <Scalar To, Scalar From>
std::vector<To> convert(std::span<const From> values) {
  std::vector<To> out;
  out.reserve(values.size());
  for (const auto& v : values) {
    if constexpr (std::same_as<To, From>) {
      out.push_back(v);
    } else if constexpr (is_exact_v<From>) {
      out.push_back(v.get_d());
    } else {
      out.push_back(exact_from_double(v));
    }
  }
  return out;
}

}  // namespace bezinv
