// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "locus/harness.hpp"
#include "locus/report.hpp"
#include "locus/shapiro.hpp"
#include "oracle_values.inc"
#include "support.hpp"

using namespace locus;

namespace {

// Pinned limits.
constexpr std::size_t kUniformCases = 2000;
constexpr std::size_t kPositiveCases = 500;
constexpr double kUniformSeconds = 300.0;
constexpr std::size_t kInvariantFuzzCases = 200;
constexpr int kShortcutPointsPerSegment = 10;
constexpr std::size_t kCoverageBudget = 2000;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail << why;
    pass = false;
  }
};

int failures = 0;

void report(int id, const char* name, Outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << "  " << id << " " << name << ": " << o.detail.str() << std::endl;
  if (!o.pass) ++failures;
}

std::string capture(const std::string& args) {
  std::string cmd = std::string(LOCUS_CLI_PATH) + " " + args;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  return out;
}

std::vector<Polynomial> fixture_polynomials() {
  std::vector<Polynomial> out;
  for (const auto& f : seeded_fixtures()) out.push_back(f.polynomial);
  for (const auto& o : kOracleCases) out.push_back(parse_polynomial(o.p));
  return out;
}

void verdict_agreement() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  FuzzConfig uniform;
  uniform.seed = 2024;
  uniform.cases = kUniformCases;
  uniform.degree_lo = 2;
  uniform.degree_hi = 10;
  uniform.coeff_bound = 20;
  FuzzConfig positive = uniform;
  positive.cases = kPositiveCases;
  positive.degree_lo = 4;
  positive.degree_hi = 8;
  positive.strategy = Strategy::PositiveOnly;
  std::size_t total = 0, agree = 0, zero = 0;
  for (const FuzzConfig& cfg : {uniform, positive}) {
    FuzzSummary s = run_fuzz(cfg);
    total += s.total;
    agree += s.agreements;
    zero += s.delta_zero_count;
    for (const auto& d : s.disagreements)
      o.fail("disagreement on " + format_polynomial(d.polynomial) + " (" + d.label + ": " + d.predicted + " vs " +
             d.actual + "); ");
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > kUniformSeconds) o.fail("took " + std::to_string(secs) + " s; ");
  o.detail << agree << "/" << (total - zero) << " agree over " << total << " cases (" << zero
           << " with delta identically zero, counted separately), " << static_cast<int>(secs) << " s";
  report(1, "verdict agreement", o);
}

void fixture_classifications() {
  Outcome o;
  struct Want {
    const char* p;
    ClassLabel label;
    Verdict verdict;
    const char* delta;  // empty: not pinned
    int delta_roots;    // -1: not pinned
  };
  const Want wants[] = {
      {"-1,0,1", ClassLabel::Lambda1, Verdict::Holds, "", -1},
      {"1,0,1", ClassLabel::Gamma11, Verdict::Fails, "-4", -1},
      {"1,0,2,0,1", ClassLabel::Gamma11, Verdict::Fails, "-16,0,-32,0,-16", -1},
      {"1,0,0,0,1", ClassLabel::Lambda22, Verdict::Holds, "0,0,-48", -1},
      {"2,0,-2,0,1", ClassLabel::Lambda21, Verdict::Holds, "", 4},
  };
  for (const auto& w : wants) {
    ShapiroInstance s = build(parse_polynomial(w.p));
    ClassLabel l = classify(s).label;
    ActualVerdict a = actual_verdict(s);
    if (l != w.label) o.fail(std::string(w.p) + " classified " + to_string(l) + "; ");
    if (predict_verdict(l) != w.verdict || a.verdict != w.verdict) o.fail(std::string(w.p) + " verdict; ");
    if (*w.delta && s.delta != parse_polynomial(w.delta)) o.fail(std::string(w.p) + " delta; ");
    if (w.delta_roots >= 0 && a.nr_delta.distinct != static_cast<std::size_t>(w.delta_roots))
      o.fail(std::string(w.p) + " delta root count; ");
  }
  o.detail << "5 fixtures checked";
  report(2, "fixture classifications", o);
}

void worked_examples() {
  Outcome o;
  auto quartic = analyze_axis(normalize(parse_polynomial("1"), parse_polynomial("-1,0,0,0,1")));
  if (quartic.gain_derivative != parse_polynomial("0,0,0,-4")) o.fail("1/(x^4-1) gain derivative; ");
  if (quartic.breakaways.size() != 1 || compare_root(quartic.breakaways[0].location, Rational(0)) != 0 ||
      quartic.breakaways[0].location.multiplicity() != 3 || !quartic.breakaways[0].standard ||
      quartic.breakaways[0].extremum != Extremum::Max)
    o.fail("1/(x^4-1) should have a standard MAX of multiplicity three at 0; ");
  auto cubic = analyze_axis(normalize(parse_polynomial("1"), parse_polynomial("-1,0,0,1")));
  if (cubic.gain_derivative != parse_polynomial("0,0,-3")) o.fail("1/(x^3-1) gain derivative; ");
  if (cubic.breakaways.size() != 1 || compare_root(cubic.breakaways[0].location, Rational(0)) != 0 ||
      cubic.breakaways[0].location.multiplicity() != 2 || cubic.breakaways[0].standard)
    o.fail("1/(x^3-1) should have a non-standard point of multiplicity two at 0; ");
  o.detail << "-4x^3 standard MAX at 0; -3x^2 non-standard at 0";
  report(3, "worked breakaway examples", o);
}

void structural_invariants() {
  Outcome o;
  std::vector<Polynomial> polys = fixture_polynomials();
  FuzzConfig cfg;
  cfg.seed = 31337;
  cfg.cases = kInvariantFuzzCases / 2;
  for (std::size_t i = 0; i < cfg.cases; ++i) polys.push_back(random_polynomial(cfg, i));
  cfg.strategy = Strategy::PositiveOnly;
  cfg.degree_lo = 4;
  cfg.degree_hi = 8;
  for (std::size_t i = 0; i < cfg.cases; ++i) polys.push_back(random_polynomial(cfg, i));
  std::size_t checked = 0;
  for (const auto& p : polys) {
    if (build(p).delta.is_zero()) continue;
    std::string e = check::all_invariants(p);
    if (!e.empty()) o.fail(e + "; ");
    ++checked;
  }
  o.detail << checked << " polynomials: parity/sign, gain monotonicity, standard iff extremum, delta degree drop "
           << "and leading ratio, scaling by 2, -3, 1/5";
  report(4, "structural invariants", o);
}

void shortcut_identity() {
  Outcome o;
  std::size_t segments = 0;
  for (const auto& p : fixture_polynomials()) {
    ShapiroInstance s = build(p);
    AxisAnalysis a = analyze_axis(s.pp);
    for (const auto& seg : a.segments) segments += seg.parity == Parity::Even;
    std::string e = check::shortcut_identity(s, a, kShortcutPointsPerSegment);
    if (!e.empty()) o.fail(e + check::where(p) + "; ");
  }
  o.detail << kShortcutPointsPerSegment << " points on each of " << segments << " EVEN segments";
  report(5, "shortcut identity", o);
}

void determinism() {
  Outcome o;
  std::string a = capture("fuzz --seed 7 --cases 500");
  std::string b = capture("fuzz --seed 7 --cases 500");
  if (a.empty()) o.fail("no output from the CLI; ");
  if (a != b) o.fail("outputs differ; ");
  o.detail << "two runs of `fuzz --seed 7 --cases 500`, " << a.size() << " bytes each";
  report(6, "determinism", o);
}

void coverage() {
  Outcome o;
  FuzzConfig cfg;
  cfg.degree_lo = 4;
  cfg.degree_hi = 8;
  auto found = coverage_report(kCoverageBudget, cfg);
  std::size_t n = 0;
  std::ostringstream list;
  for (const auto& e : found) {
    list << " " << to_string(e.label) << "=" << (e.polynomial ? e.source : std::string("NOT_FOUND"));
    if (e.polynomial) {
      ++n;
      if (classify(*e.polynomial).label != e.label) o.fail(std::string(to_string(e.label)) + " example misfiled; ");
    }
  }
  for (ClassLabel l : {ClassLabel::Lambda1, ClassLabel::Lambda21, ClassLabel::Lambda22, ClassLabel::Gamma11}) {
    const auto& e = found[static_cast<std::size_t>(l)];
    if (!e.polynomial || e.source != "fixture") o.fail(std::string(to_string(l)) + " not shown from fixtures; ");
  }
  o.detail << n << "/13 found with budget " << kCoverageBudget << ":" << list.str();
  report(7, "class coverage", o);
}

}  // namespace

int main() {
  verdict_agreement();
  fixture_classifications();
  worked_examples();
  structural_invariants();
  shortcut_identity();
  determinism();
  coverage();
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
