#pragma once

// Exact rational scalars and their text forms.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace locus {

using Integer = mpz_class;

/// Arbitrary-precision rational, always kept in canonical form
/// (positive denominator, coprime numerator/denominator).
using Rational = mpq_class;

/// Raised for malformed polynomial or rational text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

/// n/d in lowest terms. The two-argument mpq_class constructor does not
/// canonicalize, so prefer this for literals.
inline Rational ratio(long n, long d) {
  if (d == 0) throw std::domain_error("zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline Rational midpoint(const Rational& a, const Rational& b) {
  Rational m = a + b;
  m /= 2;
  return m;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace detail

/// Parses `[-+]digits` or `[-+]digits/digits`. The result is canonicalized,
/// so "-80/5" and "-16" parse to the same value.
inline Rational parse_rational(std::string_view text) {
  std::string_view s = detail::trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s;
  std::string_view den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!detail::all_digits(num) || !detail::all_digits(den))
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  if (negative) n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// Canonical exact text: "n" for integers, "n/d" otherwise.
inline std::string format_rational(const Rational& q) { return q.get_str(10); }

/// Decimal rendering with `digits` significant digits (printf "%g" style),
/// rounded from the exact value.
inline std::string to_decimal(const Rational& q, int digits = 12) {
  if (q == 0) return "0";
  // Enough working precision that rounding to `digits` is exact in practice.
  mpf_class f(0, 256);
  f = q;
  mp_exp_t exp = 0;
  std::string mant = f.get_str(exp, 10, static_cast<std::size_t>(digits));
  bool negative = false;
  if (!mant.empty() && mant.front() == '-') {
    negative = true;
    mant.erase(0, 1);
  }
  while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
  // value = 0.mant * 10^exp
  const long e10 = static_cast<long>(exp) - 1;  // exponent of the leading digit
  std::string out;
  if (e10 < -5 || e10 >= digits) {
    out = mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += (e10 < 0 ? "e-" : "e+");
    long a = e10 < 0 ? -e10 : e10;
    if (a < 10) out += "0";
    out += std::to_string(a);
  } else if (e10 < 0) {
    out = "0." + std::string(static_cast<std::size_t>(-e10 - 1), '0') + mant;
  } else {
    const auto int_len = static_cast<std::size_t>(e10 + 1);
    if (mant.size() <= int_len) {
      out = mant + std::string(int_len - mant.size(), '0');
    } else {
      out = mant.substr(0, int_len) + "." + mant.substr(int_len);
    }
  }
  return negative ? "-" + out : out;
}

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace locus
