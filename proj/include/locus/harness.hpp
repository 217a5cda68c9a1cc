#pragma once

// Reproducible polynomial generation and cross-validation of the predicted
// verdict against direct root counting.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "locus/polynomial.hpp"
#include "locus/real_roots.hpp"
#include "locus/shapiro.hpp"

namespace locus {

enum class Strategy { Uniform, PositiveOnly, Targeted };

inline const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::Uniform: return "uniform";
    case Strategy::PositiveOnly: return "positive";
    default: return "targeted";
  }
}

inline std::optional<Strategy> strategy_from_string(std::string_view s) {
  if (s == "uniform") return Strategy::Uniform;
  if (s == "positive" || s == "positive_only" || s == "positive-only") return Strategy::PositiveOnly;
  if (s == "targeted") return Strategy::Targeted;
  return std::nullopt;
}

struct FuzzConfig {
  std::uint64_t seed = 0;
  std::size_t cases = 100;
  int degree_lo = 2;
  int degree_hi = 10;
  int coeff_bound = 20;
  Strategy strategy = Strategy::Uniform;

  void validate() const {
    if (degree_lo < 2 || degree_hi > 32 || degree_lo > degree_hi)
      throw std::invalid_argument("degree range must satisfy 2 <= lo <= hi <= 32");
    if (degree_lo % 2 != 0 || degree_hi % 2 != 0) throw std::invalid_argument("degree range bounds must be even");
    if (coeff_bound < 1) throw std::invalid_argument("coefficient bound must be positive");
  }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// mt19937_64 is fully specified by the standard; the distributions are
/// not, so bounded draws are done here by rejection.
class CaseRng {
 public:
  CaseRng(std::uint64_t seed, std::uint64_t index) : engine_(splitmix64(seed ^ splitmix64(index + 1))) {}

  long uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
  }

 private:
  std::mt19937_64 engine_;
};

inline int draw_degree(CaseRng& rng, int lo, int hi) {
  return lo + 2 * static_cast<int>(rng.uniform(0, (hi - lo) / 2));
}

inline Polynomial uniform_poly(CaseRng& rng, int degree, long bound) {
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i < degree; ++i) c[static_cast<std::size_t>(i)] = rng.uniform(-bound, bound);
  long lead = 0;
  while (lead == 0) lead = rng.uniform(-bound, bound);
  c.back() = lead;
  return Polynomial(std::move(c));
}

/// Product of x^2 + b x + c with b^2 < 4c.
inline Polynomial positive_poly(CaseRng& rng, int degree, long bound) {
  Polynomial p = Polynomial::constant(Rational(1));
  for (int k = 0; k < degree / 2; ++k) {
    long b = rng.uniform(-bound, bound);
    long floor_quarter = (b * b) / 4;
    long c = rng.uniform(floor_quarter + 1, floor_quarter + bound);
    p = p * Polynomial{Rational(c), Rational(b), Rational(1)};
  }
  return p;
}

}  // namespace detail

/// Case `index` of the configured stream; depends only on (config, index).
inline Polynomial random_polynomial(const FuzzConfig& config, std::size_t index) {
  config.validate();
  detail::CaseRng rng(config.seed, index);
  const long bound = config.coeff_bound;
  switch (config.strategy) {
    case Strategy::Uniform:
      return detail::uniform_poly(rng, detail::draw_degree(rng, config.degree_lo, config.degree_hi), bound);
    case Strategy::PositiveOnly:
      return detail::positive_poly(rng, detail::draw_degree(rng, config.degree_lo, config.degree_hi), bound);
    case Strategy::Targeted: {
      // Escalate the coefficient bound every 64 cases and rotate generators.
      const long scaled = bound * static_cast<long>(1 + index / 64);
      const int degree = detail::draw_degree(rng, config.degree_lo, config.degree_hi);
      switch (index % 4) {
        case 0:
        case 1:
          return detail::positive_poly(rng, degree, scaled);
        case 2: {
          // Positive product nudged by a small lower-degree perturbation.
          Polynomial p = detail::positive_poly(rng, degree, scaled);
          if (degree > 2) p = p + detail::uniform_poly(rng, degree - 2, std::max(1L, scaled / 4));
          return p;
        }
        default:
          return detail::uniform_poly(rng, degree, scaled);
      }
    }
  }
  throw std::logic_error("unknown strategy");
}

struct CaseResult {
  std::size_t index = 0;
  Polynomial polynomial;
  std::optional<ClassLabel> label;
  std::optional<Verdict> predicted;
  std::optional<Verdict> actual;
  std::string error;
};

struct Disagreement {
  std::size_t index;
  Polynomial polynomial;
  std::string predicted;  // leaf verdict, or "-" if classification failed
  std::string actual;     // counted verdict, or "ERROR: ..."
  std::string label;
};

struct FuzzSummary {
  FuzzConfig config;
  std::size_t total = 0;
  std::size_t agreements = 0;
  std::vector<Disagreement> disagreements;
  std::map<ClassLabel, std::size_t> class_histogram;
  std::size_t delta_zero_count = 0;
};

inline CaseResult run_case(const Polynomial& p, std::size_t index = 0) {
  CaseResult r;
  r.index = index;
  r.polynomial = p;
  try {
    ShapiroInstance s = build(p);
    r.label = classify(s).label;
    r.predicted = predict_verdict(*r.label);
    r.actual = actual_verdict(s).verdict;
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

inline FuzzSummary run_fuzz(const FuzzConfig& config) {
  config.validate();
  FuzzSummary out;
  out.config = config;
  for (ClassLabel l : kAllLabels) out.class_histogram[l] = 0;
  for (std::size_t i = 0; i < config.cases; ++i) {
    CaseResult r = run_case(random_polynomial(config, i), i);
    ++out.total;
    if (r.label) ++out.class_histogram[*r.label];
    if (r.error.empty() && config.strategy == Strategy::PositiveOnly && count_real_roots(r.polynomial).distinct > 0)
      r.error = "positive-only case has real roots";
    if (!r.error.empty()) {
      out.disagreements.push_back({i, r.polynomial, r.predicted ? to_string(*r.predicted) : "-", "ERROR: " + r.error,
                                   r.label ? to_string(*r.label) : "-"});
    } else if (*r.actual == Verdict::DeltaZero) {
      ++out.delta_zero_count;
    } else if (*r.actual == *r.predicted) {
      ++out.agreements;
    } else {
      out.disagreements.push_back({i, r.polynomial, to_string(*r.predicted), to_string(*r.actual), to_string(*r.label)});
    }
  }
  return out;
}

struct Fixture {
  std::string name;
  Polynomial polynomial;
};

/// Hand-checked seed polynomials, one per easily reached leaf.
inline std::vector<Fixture> seeded_fixtures() {
  return {
      {"x^2-1", parse_polynomial("-1,0,1")},
      {"x^4-2x^2+2", parse_polynomial("2,0,-2,0,1")},
      {"x^4+1", parse_polynomial("1,0,0,0,1")},
      {"x^2+1", parse_polynomial("1,0,1")},
      {"(x^2+1)^2", parse_polynomial("1,0,2,0,1")},
  };
}

struct ClassExample {
  ClassLabel label;
  std::optional<Polynomial> polynomial;  // empty: NOT_FOUND within budget
  std::string source;                    // "fixture", "search", or "none"
  std::size_t tries = 0;
};

/// First polynomial landing in `label`: the seeded fixtures are tried
/// first, then `budget` cases of the targeted stream for `config`.
inline ClassExample find_class_example(ClassLabel label, std::size_t budget, FuzzConfig config) {
  for (const auto& f : seeded_fixtures()) {
    if (classify(f.polynomial).label == label) return {label, f.polynomial, "fixture", 0};
  }
  config.strategy = Strategy::Targeted;
  config.validate();
  for (std::size_t i = 0; i < budget; ++i) {
    Polynomial p = random_polynomial(config, i);
    try {
      if (classify(p).label == label) return {label, p, "search", i + 1};
    } catch (const std::exception&) {
      // Unclassifiable draws are skipped; they show up in run_fuzz instead.
    }
  }
  return {label, std::nullopt, "none", budget};
}

/// Every label's search outcome from one shared targeted stream, so the
/// cost is one classification per case rather than per label.
inline std::vector<ClassExample> coverage_report(std::size_t budget, FuzzConfig config) {
  std::map<ClassLabel, ClassExample> found;
  for (const auto& f : seeded_fixtures()) {
    ClassLabel l = classify(f.polynomial).label;
    if (!found.count(l)) found.emplace(l, ClassExample{l, f.polynomial, "fixture", 0});
  }
  config.strategy = Strategy::Targeted;
  config.validate();
  for (std::size_t i = 0; i < budget && found.size() < kAllLabels.size(); ++i) {
    Polynomial p = random_polynomial(config, i);
    try {
      ClassLabel l = classify(p).label;
      if (!found.count(l)) found.emplace(l, ClassExample{l, p, "search", i + 1});
    } catch (const std::exception&) {
    }
  }
  std::vector<ClassExample> out;
  for (ClassLabel l : kAllLabels) {
    auto it = found.find(l);
    out.push_back(it != found.end() ? it->second : ClassExample{l, std::nullopt, "none", budget});
  }
  return out;
}

}  // namespace locus
