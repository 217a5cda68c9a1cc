// locus: classify even-degree polynomials and cross-check the prediction.
//
// Exit codes: 0 ok, 1 verdict mismatch, 2 malformed input, 3 degree outside
// the domain.

#include <chrono>
#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "locus/harness.hpp"
#include "locus/report.hpp"
#include "locus/shapiro.hpp"

namespace {

using namespace locus;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kBadInput = 2;
constexpr int kBadDegree = 3;

std::pair<std::string, std::string> split_range(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("expected lo:hi, got '" + text + "'");
  return {text.substr(0, colon), text.substr(colon + 1)};
}

template <class F>
std::int64_t micros(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
}

Report timed_report(const Polynomial& p) {
  ShapiroInstance s = build(p);
  std::optional<Classification> c;
  std::optional<ActualVerdict> a;
  std::int64_t tc = micros([&] { c = classify(s); });
  std::int64_t ta = micros([&] { a = actual_verdict(s); });
  Verdict predicted = predict_verdict(c->label);
  Report r{std::move(s), std::move(*c), predicted, *a, predicted == a->verdict};
  r.classify_us = tc;
  r.count_us = ta;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact real-root analysis of even-degree polynomials"};
  app.require_subcommand(1);

  std::string poly_text;
  bool descending = false;
  auto add_poly = [&](CLI::App* cmd) {
    cmd->add_option("polynomial", poly_text, "comma-separated rational coefficients, constant term first")
        ->required();
    cmd->add_flag("--descending", descending, "coefficients are given leading term first");
  };

  auto* classify_cmd = app.add_subcommand("classify", "print the classification report as JSON");
  add_poly(classify_cmd);
  bool no_timings = false;
  classify_cmd->add_flag("--no-timings", no_timings, "omit wall-clock timings from the report");

  auto* verify_cmd = app.add_subcommand("verify", "compare the predicted verdict with root counting");
  add_poly(verify_cmd);

  FuzzConfig fuzz;
  std::string degrees = "2:10";
  std::string strategy = "uniform";
  auto* fuzz_cmd = app.add_subcommand("fuzz", "cross-validate on a reproducible random stream");
  fuzz_cmd->add_option("--seed", fuzz.seed, "stream seed");
  fuzz_cmd->add_option("--cases", fuzz.cases, "number of cases");
  fuzz_cmd->add_option("--degrees", degrees, "even degree range lo:hi");
  fuzz_cmd->add_option("--bound", fuzz.coeff_bound, "coefficient bound");
  fuzz_cmd->add_option("--strategy", strategy, "uniform, positive or targeted");

  std::string range = "-3:3";
  std::size_t samples = 201;
  auto* plot_cmd = app.add_subcommand("plotdata", "sample gain and discriminant along the axis as CSV");
  add_poly(plot_cmd);
  plot_cmd->add_option("--range", range, "x range lo:hi");
  plot_cmd->add_option("--samples", samples, "number of grid points");

  std::string label_text;
  std::size_t budget = 20000;
  auto* example_cmd = app.add_subcommand("example", "find a polynomial in the given class");
  example_cmd->add_option("label", label_text, "class label, e.g. Gamma2322")->required();
  example_cmd->add_option("--budget", budget, "targeted cases to try");
  example_cmd->add_option("--seed", fuzz.seed, "stream seed");

  auto* coverage_cmd = app.add_subcommand("coverage", "search every class at once");
  coverage_cmd->add_option("--budget", budget, "targeted cases to try");
  coverage_cmd->add_option("--seed", fuzz.seed, "stream seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify_cmd) {
      Report r = timed_report(parse_polynomial(poly_text, descending));
      std::cout << to_json(r, !no_timings).dump(2) << '\n';
      return kOk;
    }
    if (*verify_cmd) {
      Report r = timed_report(parse_polynomial(poly_text, descending));
      std::cout << to_string(r.classification.label) << ' ' << to_string(r.predicted) << ' '
                << to_string(r.actual.verdict) << ' ' << (r.agree ? "AGREE" : "MISMATCH") << '\n';
      return r.agree ? kOk : kMismatch;
    }
    if (*fuzz_cmd) {
      auto [lo, hi] = split_range(degrees);
      try {
        fuzz.degree_lo = std::stoi(lo);
        fuzz.degree_hi = std::stoi(hi);
      } catch (const std::exception&) {
        throw ParseError("bad degree range '" + degrees + "'");
      }
      auto s = strategy_from_string(strategy);
      if (!s) throw ParseError("unknown strategy '" + strategy + "'");
      fuzz.strategy = *s;
      try {
        fuzz.validate();
      } catch (const std::invalid_argument& e) {
        throw DegreeError(e.what());
      }
      FuzzSummary summary = run_fuzz(fuzz);
      std::cout << to_json(summary).dump(2) << '\n';
      return summary.disagreements.empty() ? kOk : kMismatch;
    }
    if (*plot_cmd) {
      auto [lo, hi] = split_range(range);
      Rational a = parse_rational(lo);
      Rational b = parse_rational(hi);
      if (!(a < b) || samples < 2) throw ParseError("need lo < hi and at least 2 samples");
      ShapiroInstance s = build(parse_polynomial(poly_text, descending));
      write_plot_csv(std::cout, plot_rows(s, a, b, samples));
      return kOk;
    }
    if (*example_cmd) {
      auto label = label_from_string(label_text);
      if (!label) throw ParseError("unknown class label '" + label_text + "'");
      ClassExample e = find_class_example(*label, budget, fuzz);
      std::cout << to_json(e).dump(2) << '\n';
      return kOk;
    }
    if (*coverage_cmd) {
      Json out = Json::array();
      for (const auto& e : coverage_report(budget, fuzz)) out.push_back(to_json(e));
      std::cout << out.dump(2) << '\n';
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const DegreeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadDegree;
  }
  return kOk;
}
