#pragma once

// Exact real-root counting and isolation with Sturm chains, plus sign
// determination of a polynomial at a real algebraic number given by an
// isolating interval.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "locus/polynomial.hpp"
#include "locus/rational.hpp"

namespace locus {

/// A rational or one of the two infinities.
class ExtendedRational {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  ExtendedRational(Rational value) : kind_(Kind::Finite), value_(std::move(value)) {}  // NOLINT
  static ExtendedRational neg_inf() { return ExtendedRational(Kind::NegInf); }
  static ExtendedRational pos_inf() { return ExtendedRational(Kind::PosInf); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  const Rational& value() const {
    if (!is_finite()) throw std::logic_error("value() of an infinite bound");
    return value_;
  }

  friend bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
    return a.is_finite() && a.value_ < b.value_;
  }

  std::string str() const {
    switch (kind_) {
      case Kind::NegInf: return "-inf";
      case Kind::PosInf: return "+inf";
      default: return format_rational(value_);
    }
  }

 private:
  explicit ExtendedRational(Kind k) : kind_(k) {}
  Kind kind_;
  Rational value_;
};

/// Exact sign of p(x). Integer-coefficient polynomials are evaluated in
/// homogenised integer form, avoiding rational normalisation.
inline int sign_at(const Polynomial& p, const Rational& x) {
  if (p.is_zero()) return 0;
  auto c = p.coefficients();
  bool integral = std::all_of(c.begin(), c.end(), [](const Rational& q) { return q.get_den() == 1; });
  if (!integral) return sign(p(x));
  const Integer& a = x.get_num();
  const Integer& b = x.get_den();
  Integer acc = c.back().get_num();
  Integer bpow = 1;
  Integer term;
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    bpow *= b;
    acc *= a;
    if (c[k] != 0) {
      term = c[k].get_num() * bpow;
      acc += term;
    }
  }
  return sgn(acc);
}

inline int sign_at(const Polynomial& p, const ExtendedRational& x) {
  if (p.is_zero()) return 0;
  switch (x.kind()) {
    case ExtendedRational::Kind::PosInf: return sign(p.leading());
    case ExtendedRational::Kind::NegInf:
      return (p.degree() % 2 == 0 ? 1 : -1) * sign(p.leading());
    default: return sign_at(p, x.value());
  }
}

/// Sturm chain of the square-free part of p. Each member is scaled by a
/// positive rational to primitive integer form; positive scaling does not
/// change sign variations.
class SturmChain {
 public:
  explicit SturmChain(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
    chain_.push_back(primitive_part(squarefree_part(p)));
    if (chain_.front().is_constant()) return;
    chain_.push_back(primitive_part(derivative(chain_.front())));
    while (true) {
      Polynomial r = remainder(chain_[chain_.size() - 2], chain_.back());
      if (r.is_zero()) break;
      chain_.push_back(primitive_part(-r));
    }
  }

  const Polynomial& base() const noexcept { return chain_.front(); }
  std::size_t length() const noexcept { return chain_.size(); }

  int variations(const ExtendedRational& x) const {
    int changes = 0;
    int last = 0;
    for (const auto& q : chain_) {
      int s = sign_at(q, x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }

  /// Distinct roots in the half-open interval (a, b]. Valid for any a < b,
  /// including roots at either endpoint, because the chain is square-free.
  std::size_t count(const ExtendedRational& a, const ExtendedRational& b) const {
    if (!(a < b)) return 0;
    return static_cast<std::size_t>(variations(a) - variations(b));
  }

  /// Distinct roots in the open interval (a, b).
  std::size_t count_open(const Rational& a, const Rational& b) const {
    if (!(a < b)) return 0;
    std::size_t n = count(a, b);
    if (sign_at(base(), b) == 0) --n;
    return n;
  }

  std::size_t count_all() const { return count(ExtendedRational::neg_inf(), ExtendedRational::pos_inf()); }

 private:
  std::vector<Polynomial> chain_;
};

struct IsolatingInterval {
  Rational lo;
  Rational hi;

  bool is_point() const { return lo == hi; }
  Rational width() const { return Rational(hi - lo); }
};

/// One real root of a square-free owner polynomial: either the rational
/// point lo == hi, or the unique root of the owner inside the open
/// interval (lo, hi), whose endpoints are not roots.
class IsolatedRoot {
 public:
  IsolatedRoot(IsolatingInterval interval, unsigned multiplicity, std::shared_ptr<const Polynomial> owner)
      : interval_(std::move(interval)), multiplicity_(multiplicity), owner_(std::move(owner)) {
    if (multiplicity_ == 0) throw std::invalid_argument("root multiplicity must be positive");
    if (interval_.hi < interval_.lo) throw std::invalid_argument("isolating interval with lo > hi");
  }

  const IsolatingInterval& interval() const noexcept { return interval_; }
  const Rational& lo() const noexcept { return interval_.lo; }
  const Rational& hi() const noexcept { return interval_.hi; }
  bool is_point() const { return interval_.is_point(); }
  Rational width() const { return interval_.width(); }
  unsigned multiplicity() const noexcept { return multiplicity_; }
  const Polynomial& owner() const noexcept { return *owner_; }
  const std::shared_ptr<const Polynomial>& owner_ptr() const noexcept { return owner_; }

  std::optional<Rational> exact_value() const {
    if (is_point()) return interval_.lo;
    return std::nullopt;
  }

  /// Any rational inside the interval; exact when the root is rational.
  Rational approximation() const { return midpoint(interval_.lo, interval_.hi); }

  /// Halves the interval, or collapses it onto the midpoint if that is the root.
  void bisect() {
    if (is_point()) return;
    Rational m = midpoint(interval_.lo, interval_.hi);
    int sm = sign_at(*owner_, m);
    if (sm == 0) {
      interval_.lo = m;
      interval_.hi = m;
    } else if (sm == sign_at(*owner_, interval_.lo)) {
      interval_.lo = std::move(m);
    } else {
      interval_.hi = std::move(m);
    }
  }

  void refine_to(const Rational& max_width) {
    while (!is_point() && width() > max_width) bisect();
  }

  bool contains(const Rational& x) const {
    return is_point() ? x == interval_.lo : (interval_.lo < x && x < interval_.hi);
  }

 private:
  IsolatingInterval interval_;
  unsigned multiplicity_;
  std::shared_ptr<const Polynomial> owner_;
};

struct RootCount {
  std::size_t distinct = 0;
  std::size_t with_multiplicity = 0;

  friend bool operator==(const RootCount&, const RootCount&) = default;
};

/// Power of two strictly above the Cauchy bound 1 + max |c_i / c_d|.
inline Rational root_bound(const Polynomial& p) {
  Rational m = 0;
  auto c = p.coefficients();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    Rational r = abs(c[i] / c.back());
    if (r > m) m = r;
  }
  Rational b = 1;
  while (b <= m + 1) b *= 2;
  return b;
}

/// Distinct real roots of p in (lo, hi). Endpoints that are roots of p are
/// rejected; callers move them off the root first.
inline std::size_t sturm_count(const Polynomial& p, const ExtendedRational& lo, const ExtendedRational& hi) {
  if (p.is_zero()) throw std::invalid_argument("sturm_count of the zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("sturm_count needs lo < hi");
  if ((lo.is_finite() && sign_at(p, lo.value()) == 0) || (hi.is_finite() && sign_at(p, hi.value()) == 0))
    throw std::domain_error("sturm_count endpoint is a root");
  return SturmChain(p).count(lo, hi);
}

inline std::size_t sturm_count(const Polynomial& p) {
  return sturm_count(p, ExtendedRational::neg_inf(), ExtendedRational::pos_inf());
}

namespace detail {

/// Roots of a square-free polynomial, unsorted.
inline std::vector<IsolatedRoot> isolate_squarefree(const Polynomial& f, unsigned multiplicity) {
  std::vector<IsolatedRoot> out;
  auto owner = std::make_shared<const Polynomial>(primitive_part(f));
  if (owner->is_constant()) return out;
  SturmChain chain(*owner);
  const Rational bound = root_bound(*owner);

  struct Work {
    Rational a, b;
    int va, vb;
  };
  std::vector<Work> stack;
  stack.push_back({-bound, bound, chain.variations(Rational(-bound)), chain.variations(bound)});
  while (!stack.empty()) {
    Work w = std::move(stack.back());
    stack.pop_back();
    const int n = w.va - w.vb;
    if (n <= 0) continue;
    Rational m = midpoint(w.a, w.b);
    if (n == 1) {
      if (sign_at(*owner, m) == 0) {
        out.emplace_back(IsolatingInterval{m, m}, multiplicity, owner);
      } else {
        out.emplace_back(IsolatingInterval{w.a, w.b}, multiplicity, owner);
      }
      continue;
    }
    if (sign_at(*owner, m) != 0) {
      int vm = chain.variations(m);
      stack.push_back({w.a, m, w.va, vm});
      stack.push_back({m, w.b, vm, w.vb});
      continue;
    }
    // Rational root at the midpoint: emit it and carve a root-free
    // neighbourhood around it.
    out.emplace_back(IsolatingInterval{m, m}, multiplicity, owner);
    Rational delta = (w.b - w.a) / 4;
    while (true) {
      Rational l = m - delta, r = m + delta;
      if (sign_at(*owner, l) != 0 && sign_at(*owner, r) != 0 && chain.count(l, r) == 1) break;
      delta /= 2;
    }
    Rational l = m - delta, r = m + delta;
    int vl = chain.variations(l), vr = chain.variations(r);
    stack.push_back({w.a, l, w.va, vl});
    stack.push_back({r, w.b, vr, w.vb});
  }
  return out;
}

inline bool intervals_touch(const IsolatedRoot& a, const IsolatedRoot& b) {
  return !(a.hi() < b.lo() || b.hi() < a.lo());
}

}  // namespace detail

/// Sorts items by position and refines until their closed intervals are
/// pairwise disjoint. All roots must be distinct.
template <class T, class Proj>
void separate(std::vector<T>& items, Proj proj) {
  auto less = [&](const T& x, const T& y) {
    const IsolatedRoot& a = proj(const_cast<T&>(x));
    const IsolatedRoot& b = proj(const_cast<T&>(y));
    if (a.lo() != b.lo()) return a.lo() < b.lo();
    return a.hi() < b.hi();
  };
  while (true) {
    std::sort(items.begin(), items.end(), less);
    bool clean = true;
    for (std::size_t i = 0; i + 1 < items.size(); ++i) {
      IsolatedRoot& a = proj(items[i]);
      IsolatedRoot& b = proj(items[i + 1]);
      if (a.hi() < b.lo()) continue;
      clean = false;
      if (a.is_point() && b.is_point()) throw std::logic_error("separate: duplicate root");
      a.bisect();
      b.bisect();
    }
    if (clean) return;
  }
}

inline void separate(std::vector<IsolatedRoot>& roots) {
  separate(roots, [](IsolatedRoot& r) -> IsolatedRoot& { return r; });
}

/// Every distinct real root of p with its multiplicity, sorted, with
/// pairwise disjoint closed intervals. Multiplicities come from the
/// square-free decomposition.
inline std::vector<IsolatedRoot> isolate_real_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots of the zero polynomial");
  std::vector<IsolatedRoot> roots;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    auto part = detail::isolate_squarefree(factor, mult);
    std::move(part.begin(), part.end(), std::back_inserter(roots));
  }
  separate(roots);
  return roots;
}

inline RootCount count_real_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("count_real_roots of the zero polynomial");
  RootCount rc;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    std::size_t n = SturmChain(factor).count_all();
    rc.distinct += n;
    rc.with_multiplicity += n * mult;
  }
  return rc;
}

inline IsolatedRoot refine(IsolatedRoot root, const Rational& max_width) {
  root.refine_to(max_width);
  return root;
}

/// Exact sign of q at the algebraic number pinned by r. Zero is decided by
/// a gcd test against the owner; otherwise r is refined until q has no root
/// on its closed interval.
inline int sign_at_root(const Polynomial& q, IsolatedRoot r) {
  if (q.is_zero()) return 0;
  if (q.is_constant()) return sign(q.leading());
  if (r.is_point()) return sign_at(q, r.lo());
  Polynomial g = gcd(r.owner(), q);
  if (!g.is_constant()) {
    // Roots of g inside (lo, hi) are roots of the owner, hence r itself.
    if (SturmChain(g).count_open(r.lo(), r.hi()) > 0) return 0;
  }
  SturmChain chain(q);
  while (true) {
    if (r.is_point()) return sign_at(q, r.lo());
    int s_lo = sign_at(q, r.lo());
    if (s_lo != 0 && chain.count(r.lo(), r.hi()) == 0) return s_lo;
    r.bisect();
  }
}

/// True iff a and b pin the same real number.
inline bool same_root(const IsolatedRoot& a, const IsolatedRoot& b) {
  if (!detail::intervals_touch(a, b)) return false;
  if (a.is_point() && b.is_point()) return a.lo() == b.lo();
  if (a.is_point()) return b.contains(a.lo()) && sign_at(b.owner(), a.lo()) == 0;
  if (b.is_point()) return a.contains(b.lo()) && sign_at(a.owner(), b.lo()) == 0;
  Rational lo = std::max(a.lo(), b.lo());
  Rational hi = std::min(a.hi(), b.hi());
  if (!(lo < hi)) return false;
  Polynomial g = gcd(a.owner(), b.owner());
  if (g.is_constant()) return false;
  return SturmChain(g).count_open(lo, hi) > 0;
}

/// Exact order of two roots: -1, 0 or +1.
inline int compare_roots(IsolatedRoot a, IsolatedRoot b) {
  if (same_root(a, b)) return 0;
  while (true) {
    if (a.hi() < b.lo()) return -1;
    if (b.hi() < a.lo()) return 1;
    a.bisect();
    b.bisect();
  }
}

/// Exact order of a root against a rational: -1 if root < x, 0, or +1.
inline int compare_root(IsolatedRoot r, const Rational& x) {
  if (r.contains(x) && (r.is_point() || sign_at(r.owner(), x) == 0)) return 0;
  while (true) {
    if (r.hi() < x) return -1;
    if (x < r.lo()) return 1;
    if (r.is_point()) return r.lo() == x ? 0 : (r.lo() < x ? -1 : 1);
    if (sign_at(r.owner(), x) == 0) return 0;
    r.bisect();
  }
}

template <class Tag>
struct TaggedRoot {
  IsolatedRoot root;
  std::vector<Tag> tags;
};

/// Merges roots from several sources into one ordered, separated sequence.
/// Identical algebraic numbers from different sources collapse into one
/// entry carrying every source tag (the first source's root is kept).
template <class Tag>
std::vector<TaggedRoot<Tag>> order_roots(std::vector<std::pair<IsolatedRoot, Tag>> sources) {
  std::vector<TaggedRoot<Tag>> out;
  out.reserve(sources.size());
  for (auto& [root, tag] : sources) {
    bool merged = false;
    for (auto& e : out) {
      if (same_root(e.root, root)) {
        e.tags.push_back(std::move(tag));
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back({std::move(root), {std::move(tag)}});
  }
  separate(out, [](TaggedRoot<Tag>& e) -> IsolatedRoot& { return e.root; });
  return out;
}

}  // namespace locus
