#pragma once

// Real-zero analysis of D = (n-1) p'^2 - n p p'' for real polynomials p of
// even degree n.
//
// Whether D + p has a real zero is decided by the real-axis root locus of
// PP = p'' p / p'^2: on EVEN segments K - K0 = D / ((n-1) p'' p) with
// K0 = n/(n-1), so real zeros of D are exactly the EVEN-segment points with
// gain K0. The classifier walks a 13-leaf decision tree over p, p', p'' and
// the breakaway points of PP; the leaf alone predicts the outcome.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "locus/polynomial.hpp"
#include "locus/rational.hpp"
#include "locus/real_roots.hpp"
#include "locus/root_locus.hpp"

namespace locus {

/// Raised for inputs outside the even-degree domain.
class DegreeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class ClassLabel {
  Lambda1,
  Lambda21,
  Lambda22,
  Gamma11,
  Gamma121,
  Gamma122,
  Gamma22,
  Gamma211,
  Gamma2121,
  Gamma2122,
  Gamma231,
  Gamma2321,
  Gamma2322,
};

inline constexpr std::array<ClassLabel, 13> kAllLabels = {
    ClassLabel::Lambda1,   ClassLabel::Lambda21,  ClassLabel::Lambda22,  ClassLabel::Gamma11,  ClassLabel::Gamma121,
    ClassLabel::Gamma122,  ClassLabel::Gamma22,   ClassLabel::Gamma211,  ClassLabel::Gamma2121, ClassLabel::Gamma2122,
    ClassLabel::Gamma231,  ClassLabel::Gamma2321, ClassLabel::Gamma2322,
};

inline const char* to_string(ClassLabel l) {
  switch (l) {
    case ClassLabel::Lambda1: return "Lambda1";
    case ClassLabel::Lambda21: return "Lambda21";
    case ClassLabel::Lambda22: return "Lambda22";
    case ClassLabel::Gamma11: return "Gamma11";
    case ClassLabel::Gamma121: return "Gamma121";
    case ClassLabel::Gamma122: return "Gamma122";
    case ClassLabel::Gamma22: return "Gamma22";
    case ClassLabel::Gamma211: return "Gamma211";
    case ClassLabel::Gamma2121: return "Gamma2121";
    case ClassLabel::Gamma2122: return "Gamma2122";
    case ClassLabel::Gamma231: return "Gamma231";
    case ClassLabel::Gamma2321: return "Gamma2321";
    case ClassLabel::Gamma2322: return "Gamma2322";
  }
  return "?";
}

inline std::optional<ClassLabel> label_from_string(std::string_view s) {
  for (ClassLabel l : kAllLabels)
    if (s == to_string(l)) return l;
  return std::nullopt;
}

enum class Verdict { Holds, Fails, DeltaZero };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "HOLDS";
    case Verdict::Fails: return "FAILS";
    default: return "DELTA_ZERO";
  }
}

struct ShapiroInstance {
  Polynomial p;
  int n = 0;
  Polynomial p1;     // p'
  Polynomial p2;     // p''
  Polynomial delta;  // (n-1) p'^2 - n p p''
  Rational k0;       // n / (n-1)
  RationalFunctionOnAxis pp;  // p'' p / p'^2, canceled
};

inline ShapiroInstance build(const Polynomial& p) {
  if (p.is_zero() || p.degree() < 2 || p.degree() % 2 != 0)
    throw DegreeError("polynomial degree must be even and at least 2 (got " +
                      (p.is_zero() ? std::string("zero polynomial") : std::to_string(p.degree())) + ")");
  ShapiroInstance s;
  s.p = p;
  s.n = p.degree();
  s.p1 = derivative(p);
  s.p2 = derivative(s.p1);
  const Rational n(s.n);
  const Rational n1(s.n - 1);
  s.delta = (s.p1 * s.p1) * n1 - (s.p * s.p2) * n;
  s.k0 = n / n1;
  s.pp = normalize(s.p2 * s.p, s.p1 * s.p1);
  return s;
}

/// Verdict implied by the leaf: HOLDS means D and p have a real zero
/// between them.
inline Verdict predict_verdict(ClassLabel label) {
  switch (label) {
    case ClassLabel::Gamma11:
    case ClassLabel::Gamma121:
    case ClassLabel::Gamma2121:
    case ClassLabel::Gamma2321:
      return Verdict::Fails;
    default:
      return Verdict::Holds;
  }
}

struct ActualVerdict {
  Verdict verdict;
  RootCount nr_delta;  // zero counts when delta is identically zero
  RootCount nr_p;
};

/// Direct count: HOLDS iff D and p have at least one distinct real zero
/// between them. D identically zero (p a pure n-th power of a linear form)
/// is reported separately.
inline ActualVerdict actual_verdict(const ShapiroInstance& s) {
  ActualVerdict out{Verdict::Fails, {}, count_real_roots(s.p)};
  if (s.delta.is_zero()) {
    out.verdict = Verdict::DeltaZero;
    return out;
  }
  out.nr_delta = count_real_roots(s.delta);
  out.verdict = out.nr_delta.distinct + out.nr_p.distinct > 0 ? Verdict::Holds : Verdict::Fails;
  return out;
}

enum class IntervalKind { RightInfinite, LeftInfinite, Finite, PoleToZero, PoleToInfinity };

inline const char* to_string(IntervalKind k) {
  switch (k) {
    case IntervalKind::RightInfinite: return "RIGHT_INFINITE";
    case IntervalKind::LeftInfinite: return "LEFT_INFINITE";
    case IntervalKind::Finite: return "FINITE";
    case IntervalKind::PoleToZero: return "POLE_TO_ZERO";
    default: return "POLE_TO_INFINITY";
  }
}

struct BreakawayFinding {
  BreakawayPoint point;
  std::optional<Comparison> vs_k0;  // set for standard points
};

struct IntervalFinding {
  std::size_t segment = 0;
  IntervalKind kind = IntervalKind::Finite;
  Parity parity = Parity::Even;
  bool right_of_p0 = false;
  bool considered = false;  // feeds the leaf condition
  std::vector<BreakawayFinding> breakaways;
  std::optional<BreakawayFinding> decisive;
};

struct Evidence {
  RootCount p_roots;
  std::size_t p1_distinct = 0;
  std::optional<IsolatedRoot> p0;
  unsigned p2_roots_left = 0;  // with multiplicity
  unsigned p2_roots_right = 0;
  std::optional<AxisAnalysis> axis;
  std::vector<IntervalFinding> intervals;
};

struct Classification {
  ClassLabel label;
  Evidence evidence;
};

namespace detail {

inline IntervalKind interval_kind(const AxisAnalysis& a, const AxisSegment& s) {
  auto kind_of = [&](std::size_t e) { return a.events[e].kind; };
  if (!s.left_event && !s.right_event) return IntervalKind::PoleToInfinity;
  if (!s.left_event)
    return kind_of(*s.right_event) == EventKind::Pole ? IntervalKind::PoleToInfinity : IntervalKind::LeftInfinite;
  if (!s.right_event)
    return kind_of(*s.left_event) == EventKind::Pole ? IntervalKind::PoleToInfinity : IntervalKind::RightInfinite;
  if (kind_of(*s.left_event) == EventKind::Pole || kind_of(*s.right_event) == EventKind::Pole)
    return IntervalKind::PoleToZero;
  return IntervalKind::Finite;
}

/// True when some MIN breakaway on a considered interval has K <= K0.
inline bool mark_min_condition(std::vector<IntervalFinding>& intervals) {
  bool any = false;
  for (auto& f : intervals) {
    if (!f.considered) continue;
    for (const auto& b : f.breakaways) {
      if (b.point.extremum == Extremum::Min && b.vs_k0 != Comparison::Greater) {
        if (!f.decisive) f.decisive = b;
        any = true;
      }
    }
  }
  return any;
}

}  // namespace detail

inline Classification classify(const ShapiroInstance& s) {
  Evidence ev;
  ev.p_roots = count_real_roots(s.p);
  if (ev.p_roots.distinct > 0) return {ClassLabel::Lambda1, std::move(ev)};

  auto p1_roots = isolate_real_roots(s.p1);
  ev.p1_distinct = p1_roots.size();
  if (p1_roots.empty()) throw std::logic_error("odd-degree derivative without a real root");
  if (p1_roots.size() >= 2) return {ClassLabel::Lambda21, std::move(ev)};
  if (p1_roots.front().multiplicity() > 1) return {ClassLabel::Lambda22, std::move(ev)};
  ev.p0 = p1_roots.front();

  if (!s.p2.is_constant()) {
    for (const auto& z : isolate_real_roots(s.p2)) {
      if (compare_roots(z, *ev.p0) > 0)
        ev.p2_roots_right += z.multiplicity();
      else
        ev.p2_roots_left += z.multiplicity();
    }
  }

  ev.axis = analyze_axis(s.pp);
  const AxisAnalysis& axis = *ev.axis;
  std::optional<std::size_t> pole;
  for (std::size_t i = 0; i < axis.events.size(); ++i) {
    if (axis.events[i].kind != EventKind::Pole) continue;
    if (pole) throw std::logic_error("PP has more than one real pole");
    pole = i;
  }
  if (!pole) throw std::logic_error("PP has no real pole");

  for (std::size_t i = 0; i < axis.segments.size(); ++i) {
    IntervalFinding f;
    f.segment = i;
    f.kind = detail::interval_kind(axis, axis.segments[i]);
    f.parity = axis.segments[i].parity;
    f.right_of_p0 = i > *pole;
    for (const auto& b : axis.breakaways) {
      if (b.segment != i) continue;
      BreakawayFinding bf{b, std::nullopt};
      if (b.standard) bf.vs_k0 = gain_vs_threshold(s.pp, b, s.k0);
      f.breakaways.push_back(std::move(bf));
    }
    ev.intervals.push_back(std::move(f));
  }

  const bool has_left = ev.p2_roots_left > 0;
  const bool has_right = ev.p2_roots_right > 0;

  if (!has_left && !has_right) {
    // p'' has no real zeros: the whole axis counts.
    bool any_standard = false;
    bool big_max = false;
    for (auto& f : ev.intervals) {
      f.considered = true;
      for (const auto& b : f.breakaways) {
        any_standard = any_standard || b.point.standard;
        if (b.point.extremum == Extremum::Max && b.vs_k0 != Comparison::Less) {
          if (!f.decisive) f.decisive = b;
          big_max = true;
        }
      }
    }
    ClassLabel label = !any_standard ? ClassLabel::Gamma11 : (big_max ? ClassLabel::Gamma122 : ClassLabel::Gamma121);
    return {label, std::move(ev)};
  }

  if (has_left && !has_right) return {ClassLabel::Gamma22, std::move(ev)};

  const bool right_even = ev.p2_roots_right % 2 == 0;
  if (right_even) return {has_left ? ClassLabel::Gamma231 : ClassLabel::Gamma211, std::move(ev)};

  for (auto& f : ev.intervals) {
    if (f.kind == IntervalKind::RightInfinite && f.parity != Parity::Even)
      throw std::logic_error("right infinite interval is not EVEN");
    if (f.parity != Parity::Even) continue;
    switch (f.kind) {
      case IntervalKind::RightInfinite: f.considered = true; break;
      case IntervalKind::Finite: f.considered = has_left || f.right_of_p0; break;
      case IntervalKind::LeftInfinite: f.considered = has_left; break;
      default: break;
    }
  }
  const bool low_min = detail::mark_min_condition(ev.intervals);
  if (!has_left) return {low_min ? ClassLabel::Gamma2122 : ClassLabel::Gamma2121, std::move(ev)};
  return {low_min ? ClassLabel::Gamma2322 : ClassLabel::Gamma2321, std::move(ev)};
}

inline Classification classify(const Polynomial& p) { return classify(build(p)); }

namespace detail {

inline Parity parity_at(const AxisAnalysis& axis, std::optional<std::size_t> seg) {
  if (!seg) throw std::domain_error("point is a zero or pole of PP");
  return axis.segments[*seg].parity;
}

}  // namespace detail

/// sign(K(x) - K0) read off sign(D(x)); only valid on EVEN segments of PP.
inline Comparison delta_sign_shortcut(const ShapiroInstance& s, const AxisAnalysis& axis, const Rational& x) {
  if (detail::parity_at(axis, axis.segment_of(x)) != Parity::Even)
    throw std::domain_error("delta shortcut needs a point on an EVEN segment");
  return comparison_from_sign(sign_at(s.delta, x));
}

inline Comparison delta_sign_shortcut(const ShapiroInstance& s, const AxisAnalysis& axis, const IsolatedRoot& x) {
  if (detail::parity_at(axis, axis.segment_of(x)) != Parity::Even)
    throw std::domain_error("delta shortcut needs a point on an EVEN segment");
  return comparison_from_sign(sign_at_root(s.delta, x));
}

inline Comparison delta_sign_shortcut(const ShapiroInstance& s, const Rational& x) {
  return delta_sign_shortcut(s, analyze_axis(s.pp), x);
}

inline Comparison delta_sign_shortcut(const ShapiroInstance& s, const IsolatedRoot& x) {
  return delta_sign_shortcut(s, analyze_axis(s.pp), x);
}

}  // namespace locus
