#include <random>

#include <gtest/gtest.h>

#include "bwy/asympt.hpp"
#include "bwy/error.hpp"
#include "bwy/geometry.hpp"

using namespace bwy;

namespace {

struct Solved {
  DiffeoWord word;
  EdgeWeightSweep sweep;
  double volume;
};

Solved solve(const char* text) {
  Solved s;
  s.word = parse_word(text);
  const EpsilonSignature eps = epsilon_signature(s.word);
  const CriticalPoint cp = find_critical_point(eps);
  s.sweep = critical_to_edge_weights(cp, s.word, 3);
  s.volume = volume_at(cp, eps).volume;
  return s;
}

GrowthSeries synthetic(int n_max, auto&& f) {
  GrowthSeries s;
  for (int n = 3; n <= n_max; n += 2) s.points.push_back({n, f(static_cast<double>(n))});
  return s;
}

double fd_error(const GrowthFit& fit, std::size_t i, double volume) {
  return std::abs(4.0 * kPi * fit.slope_per_n[i] - volume);
}

}  // namespace

TEST(Asympt, SeriesContract) {
  const Solved lr = solve("LR");
  const GrowthSeries s = growth_series(lr.word, lr.sweep, 11);
  ASSERT_EQ(s.points.size(), 5u);
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    EXPECT_EQ(s.points[i].n, 3 + 2 * static_cast<int>(i));
    EXPECT_TRUE(std::isfinite(s.points[i].log_abs_trace));
  }
  EXPECT_EQ(s.word, lr.word);
}

TEST(Asympt, SeriesIncreasingForLR) {
  const Solved lr = solve("LR");
  const GrowthSeries s = growth_series(lr.word, lr.sweep, 61);
  for (std::size_t i = 1; i < s.points.size(); ++i) {
    if (s.points[i - 1].n >= 7) EXPECT_GT(s.points[i].log_abs_trace, s.points[i - 1].log_abs_trace);
  }
}

TEST(Asympt, SeriesDeterministic) {
  const Solved w = solve("LLRR");
  const GrowthSeries a = growth_series(w.word, w.sweep, 31, Exec::Parallel);
  const GrowthSeries b = growth_series(w.word, w.sweep, 31, Exec::Parallel);
  const GrowthSeries c = growth_series(w.word, w.sweep, 31, Exec::Serial);
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    EXPECT_EQ(a.points[i].log_abs_trace, b.points[i].log_abs_trace);
    EXPECT_EQ(a.points[i].log_abs_trace, c.points[i].log_abs_trace);
  }
}

TEST(Asympt, FitConstantSeries) {
  const GrowthFit fit = fit_growth(synthetic(31, [](double) { return 2.5; }), 1.0);
  EXPECT_EQ(fit.slope, 0.0);
  for (double s : fit.slope_per_n) EXPECT_EQ(s, 0.0);
}

TEST(Asympt, FitSyntheticLogCorrection) {
  const GrowthFit fit = fit_growth(synthetic(151, [](double n) { return 0.3231 * n + std::log(n); }), 0.0);
  EXPECT_NEAR(fit.slope, 0.3231, 1e-3);
  EXPECT_NEAR(fit.predicted_volume, 4.0 * kPi * fit.slope, 1e-15);
}

TEST(Asympt, FitRandomSynthetic) {
  std::mt19937 rng(60);
  std::uniform_real_distribution<double> s(0.1, 1.0);
  std::uniform_real_distribution<double> c(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double slope = s(rng);
    const double a = c(rng);
    const double b = c(rng);
    const double d = c(rng);
    const GrowthFit fit =
        fit_growth(synthetic(151, [&](double n) { return slope * n + a * std::log(n) + b + d / n; }), 0.0);
    EXPECT_NEAR(fit.slope, slope, 1e-3) << slope << " " << a << " " << b << " " << d;
  }
}

TEST(Asympt, FitNeedsSixPoints) {
  try {
    fit_growth(synthetic(11, [](double n) { return n; }), 1.0);
    FAIL() << "expected TooFewPoints";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooFewPoints);
  }
  EXPECT_NO_THROW(fit_growth(synthetic(13, [](double n) { return n; }), 1.0));
}

TEST(Asympt, GrowthMatchesVolume) {
  for (const char* word : {"LR", "(LR)^2", "LLRR"}) {
    const Solved w = solve(word);
    const GrowthFit fit = fit_growth(growth_series(w.word, w.sweep, 151), w.volume);
    EXPECT_LT(fit.relative_error, 0.05) << word;
    EXPECT_LT(fit.relative_error, 1e-3) << word;
    const std::size_t last = fit.slope_per_n.size() - 1;
    // Slope index i sits at m = 4 + 2i; m = 76 is index 36.
    EXPECT_LT(fd_error(fit, last, w.volume), fd_error(fit, 36, w.volume)) << word;
    for (std::size_t i = last - 4; i <= last; ++i) {
      EXPECT_LT(fd_error(fit, i, w.volume), fd_error(fit, i - 1, w.volume)) << word << " " << i;
    }
  }
}
