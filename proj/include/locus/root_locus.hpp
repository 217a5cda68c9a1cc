#pragma once

// Real-axis root-locus analysis of K * num(s)/den(s) = +-1.
//
// On the real axis the gain is K(x) = |den(x) / num(x)|: zero at poles,
// infinite at zeros. An axis interval carries the 2q*pi locus (EVEN) when an
// even number of real zeros and poles, counted with multiplicity, lie to its
// right, and the 2q*pi+pi locus (ODD) otherwise. Breakaway points are real
// critical points of num/den that are not multiple zeros or poles.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "locus/polynomial.hpp"
#include "locus/rational.hpp"
#include "locus/real_roots.hpp"

namespace locus {

/// num/den with every common factor removed.
struct RationalFunctionOnAxis {
  Polynomial numerator;
  Polynomial denominator;
  bool canceled = false;
};

/// Divides out gcd(num, den). The gcd is monic, so the leading-coefficient
/// ratio (and with it every gain value) is preserved.
inline RationalFunctionOnAxis normalize(const Polynomial& numerator, const Polynomial& denominator) {
  if (denominator.is_zero()) throw std::invalid_argument("rational function with zero denominator");
  if (numerator.is_zero()) throw std::invalid_argument("rational function with zero numerator");
  Polynomial g = gcd(numerator, denominator);
  return {exact_quotient(numerator, g), exact_quotient(denominator, g), true};
}

enum class EventKind { Zero, Pole };
enum class Parity { Even, Odd };
enum class Extremum { Max, Min, None };
enum class Comparison { Less, Equal, Greater };

inline const char* to_string(EventKind k) { return k == EventKind::Zero ? "ZERO" : "POLE"; }
inline const char* to_string(Parity p) { return p == Parity::Even ? "EVEN" : "ODD"; }
inline const char* to_string(Extremum e) {
  switch (e) {
    case Extremum::Max: return "MAX";
    case Extremum::Min: return "MIN";
    default: return "NONE";
  }
}
inline const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::Less: return "LT";
    case Comparison::Equal: return "EQ";
    default: return "GT";
  }
}

inline Comparison comparison_from_sign(int s) {
  return s < 0 ? Comparison::Less : (s == 0 ? Comparison::Equal : Comparison::Greater);
}

struct AxisEvent {
  IsolatedRoot root;
  EventKind kind;
  unsigned multiplicity;
};

/// Open interval between consecutive events; a missing end is infinite.
struct AxisSegment {
  std::optional<std::size_t> left_event;
  std::optional<std::size_t> right_event;
  Parity parity = Parity::Even;
  unsigned right_count = 0;
  Rational sample;  // a rational strictly inside the segment
};

struct BreakawayPoint {
  IsolatedRoot location;  // root of the gain-derivative numerator
  bool standard = false;
  Extremum extremum = Extremum::None;
  std::size_t segment = 0;
  // Rationals just outside the isolating interval, inside the same segment,
  // with no other critical point or event in between.
  Rational left_sample;
  Rational right_sample;
};

/// num' * den - num * den', the numerator of (num/den)'.
inline Polynomial gain_derivative_numerator(const RationalFunctionOnAxis& rf) {
  return derivative(rf.numerator) * rf.denominator - rf.numerator * derivative(rf.denominator);
}

/// |den(x)/num(x)|; empty at real zeros of the numerator, where K = +inf.
inline std::optional<Rational> gain_at(const RationalFunctionOnAxis& rf, const Rational& x) {
  Rational n = rf.numerator(x);
  if (n == 0) return std::nullopt;
  Rational k = rf.denominator(x) / n;
  return Rational(abs(k));
}

/// Sign of num/den at a point that is neither a zero nor a pole.
inline int rf_sign_at(const RationalFunctionOnAxis& rf, const Rational& x) {
  return sign_at(rf.numerator, x) * sign_at(rf.denominator, x);
}

/// Real zeros and poles with multiplicity, ordered along the axis.
inline std::vector<AxisEvent> axis_events(const RationalFunctionOnAxis& rf) {
  std::vector<AxisEvent> events;
  for (auto& r : isolate_real_roots(rf.numerator)) {
    unsigned m = r.multiplicity();
    events.push_back({std::move(r), EventKind::Zero, m});
  }
  for (auto& r : isolate_real_roots(rf.denominator)) {
    unsigned m = r.multiplicity();
    events.push_back({std::move(r), EventKind::Pole, m});
  }
  separate(events, [](AxisEvent& e) -> IsolatedRoot& { return e.root; });
  return events;
}

/// Segments for already ordered, separated events.
inline std::vector<AxisSegment> axis_segments(const std::vector<AxisEvent>& events) {
  std::vector<AxisSegment> segments(events.size() + 1);
  unsigned right = 0;
  for (std::size_t i = events.size() + 1; i-- > 0;) {
    AxisSegment& s = segments[i];
    if (i > 0) s.left_event = i - 1;
    if (i < events.size()) {
      s.right_event = i;
      right += events[i].multiplicity;
    }
    s.right_count = right;
    s.parity = right % 2 == 0 ? Parity::Even : Parity::Odd;
    if (events.empty()) {
      s.sample = 0;
    } else if (i == 0) {
      s.sample = events.front().root.lo() - 1;
    } else if (i == events.size()) {
      s.sample = events.back().root.hi() + 1;
    } else {
      s.sample = midpoint(events[i - 1].root.hi(), events[i].root.lo());
    }
  }
  return segments;
}

inline std::vector<AxisSegment> axis_segments(const RationalFunctionOnAxis& rf) {
  return axis_segments(axis_events(rf));
}

/// Everything the real-axis analysis produces, computed together so that
/// events and critical points share one separated ordering.
struct AxisAnalysis {
  RationalFunctionOnAxis rf;
  Polynomial gain_derivative;
  std::vector<AxisEvent> events;
  std::vector<AxisSegment> segments;
  std::vector<BreakawayPoint> breakaways;

  /// Index of the segment holding x, or empty if x is an event.
  std::optional<std::size_t> segment_of(const Rational& x) const {
    for (const auto& e : events)
      if (compare_root(e.root, x) == 0) return std::nullopt;
    std::size_t i = 0;
    while (i < events.size() && compare_root(events[i].root, x) < 0) ++i;
    return i;
  }

  /// Index of the segment holding an algebraic point, or empty if it is an event.
  std::optional<std::size_t> segment_of(const IsolatedRoot& r) const {
    std::size_t i = 0;
    for (const auto& e : events) {
      int c = compare_roots(e.root, r);
      if (c == 0) return std::nullopt;
      if (c < 0) ++i;
    }
    return i;
  }
};

inline AxisAnalysis analyze_axis(const RationalFunctionOnAxis& rf) {
  if (!rf.canceled) throw std::invalid_argument("analyze_axis needs a canceled rational function");
  AxisAnalysis out;
  out.rf = rf;
  out.gain_derivative = gain_derivative_numerator(rf);

  // Event tags are (Zero|Pole, multiplicity); critical points carry their
  // multiplicity in the gain-derivative numerator.
  struct Source {
    bool critical;
    EventKind kind;
    unsigned multiplicity;
  };
  std::vector<std::pair<IsolatedRoot, Source>> sources;
  for (auto& r : isolate_real_roots(rf.numerator)) {
    unsigned m = r.multiplicity();
    sources.emplace_back(std::move(r), Source{false, EventKind::Zero, m});
  }
  for (auto& r : isolate_real_roots(rf.denominator)) {
    unsigned m = r.multiplicity();
    sources.emplace_back(std::move(r), Source{false, EventKind::Pole, m});
  }
  if (!out.gain_derivative.is_zero()) {
    for (auto& r : isolate_real_roots(out.gain_derivative)) {
      unsigned m = r.multiplicity();
      sources.emplace_back(std::move(r), Source{true, EventKind::Zero, m});
    }
  }
  auto ordered = order_roots(std::move(sources));

  // A critical point merged with an event is a multiple zero or pole and is
  // excluded from the breakaway candidates.
  std::vector<std::size_t> candidates;
  for (std::size_t k = 0; k < ordered.size(); ++k) {
    const auto& tags = ordered[k].tags;
    auto event = std::find_if(tags.begin(), tags.end(), [](const Source& s) { return !s.critical; });
    if (event != tags.end()) {
      out.events.push_back({ordered[k].root, event->kind, event->multiplicity});
    } else {
      candidates.push_back(k);
    }
  }
  out.segments = axis_segments(out.events);

  for (std::size_t k : candidates) {
    const IsolatedRoot& r = ordered[k].root;
    BreakawayPoint b{r, false, Extremum::None, 0, Rational(0), Rational(0)};
    b.left_sample = k == 0 ? Rational(r.lo() - 1) : midpoint(ordered[k - 1].root.hi(), r.lo());
    b.right_sample = k + 1 == ordered.size() ? Rational(r.hi() + 1) : midpoint(r.hi(), ordered[k + 1].root.lo());
    std::size_t seg = 0;
    for (std::size_t j = 0; j < k; ++j) {
      const auto& tags = ordered[j].tags;
      if (std::any_of(tags.begin(), tags.end(), [](const Source& s) { return !s.critical; })) ++seg;
    }
    b.segment = seg;
    // K = sigma * den/num with sigma the sign of num/den on the segment, so
    // sign K' = -sigma * sign(num' den - num den').
    const int sigma = rf_sign_at(rf, b.left_sample);
    const int left = -sigma * sign_at(out.gain_derivative, b.left_sample);
    const int right = -sigma * sign_at(out.gain_derivative, b.right_sample);
    if (left > 0 && right < 0) {
      b.standard = true;
      b.extremum = Extremum::Max;
    } else if (left < 0 && right > 0) {
      b.standard = true;
      b.extremum = Extremum::Min;
    }
    out.breakaways.push_back(std::move(b));
  }
  return out;
}

inline std::vector<BreakawayPoint> breakaway_points(const RationalFunctionOnAxis& rf) {
  return analyze_axis(rf).breakaways;
}

/// Exact comparison of K(b) with a non-negative threshold, via the sign of
/// den^2 - k0^2 num^2 at b (both gains are non-negative, so squaring keeps
/// the order).
inline Comparison gain_vs_threshold(const RationalFunctionOnAxis& rf, const BreakawayPoint& b, const Rational& k0) {
  Rational k0sq = k0 * k0;
  Polynomial q = rf.denominator * rf.denominator - (rf.numerator * rf.numerator) * k0sq;
  return comparison_from_sign(sign_at_root(q, b.location));
}

}  // namespace locus
