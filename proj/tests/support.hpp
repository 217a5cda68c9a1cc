#pragma once

// Invariant checks shared by the unit suites and the acceptance runner.
// Each returns an empty string on success and a description otherwise.

#include <string>
#include <vector>

#include "locus/harness.hpp"
#include "locus/polynomial.hpp"
#include "locus/real_roots.hpp"
#include "locus/root_locus.hpp"
#include "locus/shapiro.hpp"

namespace locus::check {

inline std::string where(const Polynomial& p) { return " [p = " + format_polynomial(p) + "]"; }

/// Rationals strictly inside segment `i`, avoiding every isolating interval.
inline std::vector<Rational> segment_points(const AxisAnalysis& a, std::size_t i, int count) {
  const AxisSegment& s = a.segments[i];
  std::vector<Rational> out;
  if (!s.left_event && !s.right_event) {
    for (int k = 0; k < count; ++k) out.push_back(ratio(k - count / 2, 3));
    return out;
  }
  if (!s.left_event) {
    Rational hi = a.events[*s.right_event].root.lo();
    for (int k = 1; k <= count; ++k) out.push_back(hi - ratio(k, 2));
    return out;
  }
  if (!s.right_event) {
    Rational lo = a.events[*s.left_event].root.hi();
    for (int k = 1; k <= count; ++k) out.push_back(lo + ratio(k, 2));
    return out;
  }
  Rational lo = a.events[*s.left_event].root.hi();
  Rational hi = a.events[*s.right_event].root.lo();
  for (int k = 1; k <= count; ++k) out.push_back(lo + (hi - lo) * ratio(k, count + 1));
  return out;
}

/// EVEN exactly where num/den has the sign it has at +infinity.
inline std::string parity_sign(const AxisAnalysis& a) {
  const int at_inf = sign(a.rf.numerator.leading()) * sign(a.rf.denominator.leading());
  for (std::size_t i = 0; i < a.segments.size(); ++i) {
    for (const Rational& x : segment_points(a, i, 3)) {
      bool even = a.segments[i].parity == Parity::Even;
      if ((rf_sign_at(a.rf, x) == at_inf) != even)
        return "parity/sign mismatch on segment " + std::to_string(i) + " at x = " + format_rational(x);
    }
  }
  return {};
}

/// K strictly monotone between consecutive events and critical points.
inline std::string gain_monotone(const AxisAnalysis& a) {
  std::vector<IsolatedRoot> marks;
  for (const auto& e : a.events) marks.push_back(e.root);
  for (const auto& b : a.breakaways) marks.push_back(b.location);
  separate(marks);
  std::vector<std::vector<Rational>> gaps;
  const int per_gap = 6;
  for (std::size_t i = 0; i <= marks.size(); ++i) {
    std::vector<Rational> xs;
    if (marks.empty()) {
      for (int k = -per_gap; k <= per_gap; ++k) xs.push_back(Rational(k));
    } else if (i == 0) {
      for (int k = per_gap; k >= 1; --k) xs.push_back(marks.front().lo() - ratio(k, 2));
    } else if (i == marks.size()) {
      for (int k = 1; k <= per_gap; ++k) xs.push_back(marks.back().hi() + ratio(k, 2));
    } else {
      Rational lo = marks[i - 1].hi(), hi = marks[i].lo();
      for (int k = 1; k <= per_gap; ++k) xs.push_back(lo + (hi - lo) * ratio(k, per_gap + 1));
    }
    gaps.push_back(std::move(xs));
    if (marks.empty()) break;
  }
  for (const auto& xs : gaps) {
    int dir = 0;
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
      auto k0 = gain_at(a.rf, xs[k]);
      auto k1 = gain_at(a.rf, xs[k + 1]);
      if (!k0 || !k1) return "sample hit a zero at " + format_rational(xs[k]);
      int d = sign(Rational(*k1 - *k0));
      if (d == 0 || (dir != 0 && d != dir))
        return "gain not strictly monotone near x = " + format_rational(xs[k]);
      dir = d;
    }
  }
  return {};
}

/// Standard breakaway points are exactly the gain extrema, MAX and MIN
/// distinguished, and standardness matches the critical multiplicity.
inline std::string standard_iff_extremum(const AxisAnalysis& a) {
  for (const auto& b : a.breakaways) {
    IsolatedRoot r = b.location;
    r.refine_to(ratio(1, 1 << 20) * (b.right_sample - b.left_sample));
    auto kl = gain_at(a.rf, b.left_sample);
    auto km = gain_at(a.rf, r.approximation());
    auto kr = gain_at(a.rf, b.right_sample);
    if (!kl || !km || !kr) return "breakaway sample hit a zero";
    const bool is_max = *km > *kl && *km > *kr;
    const bool is_min = *km < *kl && *km < *kr;
    if (is_max != (b.extremum == Extremum::Max) || is_min != (b.extremum == Extremum::Min))
      return "extremum label disagrees with sampled gain at " + format_rational(r.approximation());
    if (b.standard != (is_max || is_min)) return "standard flag disagrees with extremum";
    if (b.standard != (b.location.multiplicity() % 2 == 1)) return "standard flag disagrees with multiplicity parity";
  }
  return {};
}

/// Degree drop and leading-term ratio of the discriminant-like polynomial.
inline std::string delta_structure(const ShapiroInstance& s) {
  const auto top = static_cast<std::size_t>(2 * s.n - 2);
  if (s.delta.coefficient(top) != 0) return "x^(2n-2) coefficient of delta is nonzero";
  if (s.delta.degree() > 2 * s.n - 3) return "delta degree exceeds 2n-3";
  Polynomial sq = s.p1 * s.p1;
  Polynomial pr = s.p2 * s.p;
  if (sq.leading() / pr.leading() != s.k0) return "leading ratio differs from n/(n-1)";
  return {};
}

/// classify and both verdicts unchanged under p -> lambda p.
inline std::string scale_covariance(const Polynomial& p) {
  const Classification c = classify(p);
  const ActualVerdict a = actual_verdict(build(p));
  for (const Rational& lambda : {Rational(2), Rational(-3), ratio(1, 5)}) {
    Polynomial q = p * lambda;
    ShapiroInstance sq = build(q);
    if (classify(sq).label != c.label) return "label changes under scaling by " + format_rational(lambda);
    if (actual_verdict(sq).verdict != a.verdict) return "verdict changes under scaling by " + format_rational(lambda);
    if (sq.delta != build(p).delta * Rational(lambda * lambda)) return "delta does not scale by lambda^2";
  }
  return {};
}

/// sign(K - K0) = sign(delta) at `per_segment` rationals of every EVEN
/// segment, and the shortcut agrees with the exact threshold test at every
/// breakaway point on an EVEN segment.
inline std::string shortcut_identity(const ShapiroInstance& s, const AxisAnalysis& a, int per_segment) {
  for (std::size_t i = 0; i < a.segments.size(); ++i) {
    if (a.segments[i].parity != Parity::Even) continue;
    for (const Rational& x : segment_points(a, i, per_segment)) {
      auto k = gain_at(s.pp, x);
      if (!k) return "EVEN-segment sample is a zero";
      const int lhs = sign(Rational(*k - s.k0));
      const int rhs = sign_at(s.delta, x);
      if (lhs != rhs) return "sign(K-K0) != sign(delta) at x = " + format_rational(x);
      if (delta_sign_shortcut(s, a, x) != comparison_from_sign(lhs)) return "shortcut disagrees at " + format_rational(x);
    }
  }
  for (const auto& b : a.breakaways) {
    if (a.segments[b.segment].parity != Parity::Even) continue;
    if (delta_sign_shortcut(s, a, b.location) != gain_vs_threshold(s.pp, b, s.k0))
      return "shortcut disagrees with threshold test at a breakaway point";
  }
  return {};
}

/// All structural checks for one polynomial.
inline std::string all_invariants(const Polynomial& p) {
  ShapiroInstance s = build(p);
  AxisAnalysis a = analyze_axis(s.pp);
  for (auto* f : {parity_sign, gain_monotone, standard_iff_extremum}) {
    if (auto e = f(a); !e.empty()) return e + where(p);
  }
  if (auto e = delta_structure(s); !e.empty()) return e + where(p);
  if (auto e = scale_covariance(p); !e.empty()) return e + where(p);
  return {};
}

}  // namespace locus::check
