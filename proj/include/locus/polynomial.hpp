#pragma once

// Dense univariate polynomials over a field, with the exact-rational
// specialisations (content stripping, gcd, square-free decomposition)
// that the root machinery is built on.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "locus/rational.hpp"

namespace locus {

/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

/// Coefficient `i` multiplies x^i. Trailing zeros are never stored, so two
/// equal polynomials always have identical coefficient vectors.
template <class Field>
class BasicPolynomial {
 public:
  using value_type = Field;

  BasicPolynomial() = default;

  explicit BasicPolynomial(std::vector<Field> ascending) : coeffs_(std::move(ascending)) { trim(); }

  BasicPolynomial(std::initializer_list<Field> ascending) : coeffs_(ascending) { trim(); }

  static BasicPolynomial constant(const Field& c) { return BasicPolynomial(std::vector<Field>{c}); }

  static BasicPolynomial monomial(const Field& c, std::size_t power) {
    std::vector<Field> v(power + 1, Field(0));
    v[power] = c;
    return BasicPolynomial(std::move(v));
  }

  /// The polynomial x - root.
  static BasicPolynomial linear_factor(const Field& root) {
    return BasicPolynomial(std::vector<Field>{Field(-root), Field(1)});
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  int degree() const noexcept {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }

  std::size_t size() const noexcept { return coeffs_.size(); }

  std::span<const Field> coefficients() const noexcept { return coeffs_; }

  Field coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Field(0); }

  const Field& leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  /// Horner evaluation.
  Field operator()(const Field& x) const {
    Field acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  BasicPolynomial operator-() const {
    std::vector<Field> v(coeffs_);
    for (auto& c : v) c = -c;
    return BasicPolynomial(std::move(v));
  }

  BasicPolynomial& operator+=(const BasicPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Field(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  BasicPolynomial& operator-=(const BasicPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Field(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  BasicPolynomial& operator*=(const Field& c) {
    if (c == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
  friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }
  friend BasicPolynomial operator*(BasicPolynomial a, const Field& c) { return a *= c; }
  friend BasicPolynomial operator*(const Field& c, BasicPolynomial a) { return a *= c; }

  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Field> v(a.coeffs_.size() + b.coeffs_.size() - 1, Field(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return BasicPolynomial(std::move(v));
  }

  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Field> coeffs_;
};

using Polynomial = BasicPolynomial<Rational>;

template <class Field>
BasicPolynomial<Field> from_coefficients(std::vector<Field> ascending) {
  return BasicPolynomial<Field>(std::move(ascending));
}

template <class Field>
BasicPolynomial<Field> derivative(const BasicPolynomial<Field>& p) {
  if (p.size() <= 1) return {};
  auto c = p.coefficients();
  std::vector<Field> v(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) v[i - 1] = c[i] * Field(static_cast<long>(i));
  return BasicPolynomial<Field>(std::move(v));
}

template <class Field>
Field eval_at(const BasicPolynomial<Field>& p, const Field& x) {
  return p(x);
}

template <class Field>
BasicPolynomial<Field> pow(const BasicPolynomial<Field>& p, unsigned k) {
  BasicPolynomial<Field> r = BasicPolynomial<Field>::constant(Field(1));
  for (unsigned i = 0; i < k; ++i) r = r * p;
  return r;
}

/// Euclidean division over the field: a = q*b + r with deg r < deg b.
template <class Field>
std::pair<BasicPolynomial<Field>, BasicPolynomial<Field>> divmod(const BasicPolynomial<Field>& a,
                                                                   const BasicPolynomial<Field>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {BasicPolynomial<Field>{}, a};
  std::vector<Field> rem(a.coefficients().begin(), a.coefficients().end());
  auto bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<Field> quo(rem.size() - db, Field(0));
  const Field& lead = bc.back();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    Field f = rem[k] / lead;
    quo[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * bc[j];
  }
  rem.resize(db);
  return {BasicPolynomial<Field>(std::move(quo)), BasicPolynomial<Field>(std::move(rem))};
}

template <class Field>
BasicPolynomial<Field> remainder(const BasicPolynomial<Field>& a, const BasicPolynomial<Field>& b) {
  return divmod(a, b).second;
}

/// Quotient of a division known to be exact.
template <class Field>
BasicPolynomial<Field> exact_quotient(const BasicPolynomial<Field>& a, const BasicPolynomial<Field>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("exact_quotient: division leaves a remainder");
  return q;
}

template <class Field>
BasicPolynomial<Field> monic(const BasicPolynomial<Field>& p) {
  if (p.is_zero()) return p;
  Field inv = Field(1) / p.leading();
  return p * inv;
}

// ---------------------------------------------------------------------------
// Rational-specific operations.

/// Positive rational c such that c*p has coprime integer coefficients.
/// The sign is preserved, so sign-based algorithms may substitute the
/// result for p.
inline Rational positive_content_scale(const Polynomial& p) {
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const auto& c : p.coefficients()) {
    if (c == 0) continue;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  if (num_gcd == 0) return Rational(1);
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  return scale;
}

/// p scaled by a positive rational to coprime integer coefficients.
inline Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p * positive_content_scale(p);
}

/// Monic gcd. Remainders are reduced to primitive integer form at every
/// step, which keeps the Euclidean sequence from blowing up.
inline Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  Polynomial a = primitive_part(p);
  Polynomial b = primitive_part(q);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Polynomial r = primitive_part(remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// p / gcd(p, p'), monic.
inline Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("square-free part of the zero polynomial");
  if (p.is_constant()) return Polynomial::constant(Rational(1));
  return monic(exact_quotient(p, gcd(p, derivative(p))));
}

struct SquarefreeFactor {
  Polynomial factor;  // monic, square-free, non-constant
  unsigned multiplicity;
};

/// Yun's algorithm: p = lc * prod factor_i^i over pairwise coprime,
/// square-free factors. Constant p yields an empty list.
inline std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("square-free decomposition of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (p.is_constant()) return out;
  Polynomial dp = derivative(p);
  Polynomial a0 = gcd(p, dp);
  Polynomial b = exact_quotient(p, a0);
  Polynomial c = exact_quotient(dp, a0);
  Polynomial d = c - derivative(b);
  unsigned i = 1;
  while (!b.is_constant()) {
    Polynomial a = gcd(b, d);
    if (!a.is_constant()) out.push_back({monic(a), i});
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - derivative(b);
    ++i;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text format: comma-separated ascending coefficients, e.g. "1,0,1" = x^2+1.

inline Polynomial parse_polynomial(std::string_view text, bool descending = false) {
  std::vector<Rational> coeffs;
  std::string_view rest = detail::trim(text);
  if (rest.empty()) throw ParseError("empty polynomial text");
  while (true) {
    auto comma = rest.find(',');
    coeffs.push_back(parse_rational(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (descending) std::reverse(coeffs.begin(), coeffs.end());
  return Polynomial(std::move(coeffs));
}

/// Inverse of parse_polynomial; the zero polynomial renders as "0".
inline std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& c : p.coefficients()) {
    if (!out.empty()) out += ',';
    out += format_rational(c);
  }
  return out;
}

/// Human-readable form, highest power first: "16*x^4 - 16*x^2 + 4".
inline std::string pretty(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  auto c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    Rational mag = abs(c[k]);
    if (out.empty()) {
      if (c[k] < 0) out += "-";
    } else {
      out += c[k] < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1 && k > 0;
    if (!unit) out += format_rational(mag);
    if (k > 0) {
      if (!unit) out += "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << pretty(p); }

}  // namespace locus
