#pragma once

// JSON and CSV renderings used by the command-line tool. Every rational is
// written as an exact "n" or "n/d" string; only plot data uses decimals.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "locus/harness.hpp"
#include "locus/polynomial.hpp"
#include "locus/real_roots.hpp"
#include "locus/root_locus.hpp"
#include "locus/shapiro.hpp"

namespace locus {

using Json = nlohmann::ordered_json;

inline Json to_json(const RootCount& rc) {
  return Json{{"distinct", rc.distinct}, {"with_multiplicity", rc.with_multiplicity}};
}

inline Json to_json(const IsolatedRoot& r) {
  return Json{{"lo", format_rational(r.lo())}, {"hi", format_rational(r.hi())}, {"multiplicity", r.multiplicity()}};
}

inline Json to_json(const BreakawayFinding& b) {
  Json j = to_json(b.point.location);
  j["standard"] = b.point.standard;
  j["extremum"] = to_string(b.point.extremum);
  j["vs_k0"] = b.vs_k0 ? Json(to_string(*b.vs_k0)) : Json(nullptr);
  return j;
}

inline Json to_json(const Evidence& ev) {
  Json j;
  j["p_real_roots"] = to_json(ev.p_roots);
  j["p1_distinct_real_roots"] = ev.p1_distinct;
  j["p0"] = ev.p0 ? to_json(*ev.p0) : Json(nullptr);
  j["p2_roots_left"] = ev.p2_roots_left;
  j["p2_roots_right"] = ev.p2_roots_right;
  Json events = Json::array();
  Json intervals = Json::array();
  if (ev.axis) {
    for (const auto& e : ev.axis->events) {
      Json je = to_json(e.root);
      je["kind"] = to_string(e.kind);
      events.push_back(std::move(je));
    }
    for (const auto& f : ev.intervals) {
      const AxisSegment& seg = ev.axis->segments[f.segment];
      Json ji;
      ji["segment"] = f.segment;
      ji["kind"] = to_string(f.kind);
      ji["parity"] = to_string(f.parity);
      ji["left_event"] = seg.left_event ? Json(*seg.left_event) : Json(nullptr);
      ji["right_event"] = seg.right_event ? Json(*seg.right_event) : Json(nullptr);
      ji["right_of_p0"] = f.right_of_p0;
      ji["considered"] = f.considered;
      Json bs = Json::array();
      for (const auto& b : f.breakaways) bs.push_back(to_json(b));
      ji["breakaways"] = std::move(bs);
      ji["decisive"] = f.decisive ? to_json(*f.decisive) : Json(nullptr);
      intervals.push_back(std::move(ji));
    }
  }
  j["events"] = std::move(events);
  j["intervals"] = std::move(intervals);
  return j;
}

struct Report {
  ShapiroInstance instance;
  Classification classification;
  Verdict predicted;
  ActualVerdict actual;
  bool agree;
  std::int64_t classify_us = 0;
  std::int64_t count_us = 0;
};

inline Report make_report(const ShapiroInstance& s) {
  Classification c = classify(s);
  Verdict predicted = predict_verdict(c.label);
  ActualVerdict actual = actual_verdict(s);
  return Report{s, std::move(c), predicted, actual, predicted == actual.verdict};
}

inline Json to_json(const Report& r, bool with_timings = true) {
  Json j;
  j["input"] = format_polynomial(r.instance.p);
  j["degree"] = r.instance.n;
  j["label"] = to_string(r.classification.label);
  j["predicted"] = to_string(r.predicted);
  j["actual"] = to_string(r.actual.verdict);
  j["agree"] = r.agree;
  j["delta"] = format_polynomial(r.instance.delta);
  j["k0"] = format_rational(r.instance.k0);
  j["nr_delta"] = to_json(r.actual.nr_delta);
  j["nr_p"] = to_json(r.actual.nr_p);
  j["evidence"] = to_json(r.classification.evidence);
  if (with_timings) j["timings_us"] = Json{{"classify", r.classify_us}, {"count", r.count_us}};
  return j;
}

inline Json to_json(const FuzzSummary& s) {
  Json j;
  j["config"] = Json{{"seed", s.config.seed},
                     {"cases", s.config.cases},
                     {"degrees", std::to_string(s.config.degree_lo) + ":" + std::to_string(s.config.degree_hi)},
                     {"bound", s.config.coeff_bound},
                     {"strategy", to_string(s.config.strategy)}};
  j["total"] = s.total;
  j["agreements"] = s.agreements;
  j["delta_zero_count"] = s.delta_zero_count;
  Json d = Json::array();
  for (const auto& x : s.disagreements) {
    d.push_back(Json{{"case", x.index},
                     {"polynomial", format_polynomial(x.polynomial)},
                     {"label", x.label},
                     {"predicted", x.predicted},
                     {"actual", x.actual}});
  }
  j["disagreements"] = std::move(d);
  Json h;
  for (ClassLabel l : kAllLabels) h[to_string(l)] = s.class_histogram.count(l) ? s.class_histogram.at(l) : 0;
  j["class_histogram"] = std::move(h);
  return j;
}

inline Json to_json(const ClassExample& e) {
  Json j;
  j["label"] = to_string(e.label);
  j["status"] = e.polynomial ? "FOUND" : "NOT_FOUND";
  j["polynomial"] = e.polynomial ? Json(format_polynomial(*e.polynomial)) : Json(nullptr);
  j["source"] = e.source;
  j["tries"] = e.tries;
  return j;
}

// ---------------------------------------------------------------------------
// Plot data.

struct PlotRow {
  Rational x;
  std::optional<Rational> gain;  // empty: +inf (zero of PP)
  Rational delta;
  std::string parity;  // empty at events
  bool is_event = false;
};

/// Grid rows lo + i (hi - lo)/(N-1), plus one row per event and per
/// breakaway point inside [lo, hi]. Irrational positions are represented by
/// a rational within 2^-64 (hi - lo) of the point.
inline std::vector<PlotRow> plot_rows(const ShapiroInstance& s, const Rational& lo, const Rational& hi,
                                      std::size_t samples) {
  if (samples < 2) throw std::invalid_argument("plotdata needs at least 2 samples");
  if (!(lo < hi)) throw std::invalid_argument("plotdata range needs lo < hi");
  AxisAnalysis axis = analyze_axis(s.pp);
  std::vector<IsolatedRoot> marks;
  for (const auto& e : axis.events) marks.push_back(e.root);
  for (const auto& b : axis.breakaways) marks.push_back(b.location);

  auto is_mark = [&](const Rational& x) {
    return std::any_of(marks.begin(), marks.end(), [&](const IsolatedRoot& r) { return compare_root(r, x) == 0; });
  };
  auto row_at = [&](const Rational& x, bool event) {
    PlotRow row;
    row.x = x;
    row.delta = s.delta(x);
    row.is_event = event;
    auto seg = axis.segment_of(x);
    if (seg) {
      row.gain = gain_at(s.pp, x);
      row.parity = to_string(axis.segments[*seg].parity);
    } else if (sign_at(s.pp.numerator, x) == 0) {
      row.gain = std::nullopt;
    } else {
      row.gain = Rational(0);
    }
    return row;
  };

  std::vector<PlotRow> rows;
  const Rational step = (hi - lo) / Rational(static_cast<long>(samples - 1));
  for (std::size_t i = 0; i < samples; ++i) {
    Rational x = i + 1 == samples ? hi : Rational(lo + step * Rational(static_cast<long>(i)));
    rows.push_back(row_at(x, is_mark(x)));
  }

  Rational tiny = (hi - lo);
  mpq_div_2exp(tiny.get_mpq_t(), tiny.get_mpq_t(), 64);
  auto add_mark = [&](IsolatedRoot r, bool is_pole, bool is_zero, bool is_breakaway) {
    if (compare_root(r, lo) < 0 || compare_root(r, hi) > 0) return;
    if (std::any_of(rows.begin(), rows.end(), [&](const PlotRow& row) { return compare_root(r, row.x) == 0; }))
      return;
    r.refine_to(tiny);
    Rational x = r.approximation();
    PlotRow row;
    row.x = x;
    row.delta = s.delta(x);
    row.is_event = true;
    if (is_pole) {
      row.gain = Rational(0);
    } else if (is_zero) {
      row.gain = std::nullopt;
    } else {
      row.gain = gain_at(s.pp, x);
    }
    if (is_breakaway) {
      if (auto seg = axis.segment_of(x)) row.parity = to_string(axis.segments[*seg].parity);
    }
    rows.push_back(std::move(row));
  };
  for (const auto& e : axis.events) add_mark(e.root, e.kind == EventKind::Pole, e.kind == EventKind::Zero, false);
  for (const auto& b : axis.breakaways) add_mark(b.location, false, false, true);

  std::stable_sort(rows.begin(), rows.end(), [](const PlotRow& a, const PlotRow& b) { return a.x < b.x; });
  return rows;
}

inline void write_plot_csv(std::ostream& os, const std::vector<PlotRow>& rows) {
  os << "x,K,delta,parity,is_event\n";
  for (const auto& r : rows) {
    os << to_decimal(r.x) << ',' << (r.gain ? to_decimal(*r.gain) : std::string()) << ',' << to_decimal(r.delta)
       << ',' << r.parity << ',' << (r.is_event ? "true" : "false") << '\n';
  }
}

}  // namespace locus
