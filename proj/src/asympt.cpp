#include "bwy/asympt.hpp"

#include <cmath>

#include "bwy/error.hpp"
#include "bwy/intertwiner.hpp"

namespace bwy {

GrowthSeries growth_series(const DiffeoWord& w, const EdgeWeightSweep& hyperbolic, int n_max,
                           Exec exec) {
  if (n_max < 3 || n_max % 2 == 0) fail(ErrorKind::DomainError, "n_max must be odd and >= 3");
  GrowthSeries out;
  out.word = w;
  const int count = (n_max - 1) / 2;
  out.points.resize(static_cast<std::size_t>(count));
  auto eval = [&](int idx) {
    const int n = 3 + 2 * idx;
    const TraceValue t = trace_product(w, with_n(hyperbolic, n), n, Exec::Serial);
    out.points[static_cast<std::size_t>(idx)] = {n, t.log_abs};
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int idx = count - 1; idx >= 0; --idx) eval(idx);
  } else {
    for (int idx = 0; idx < count; ++idx) eval(idx);
  }
  return out;
}

GrowthFit fit_growth(const GrowthSeries& series, double reference_volume) {
  const auto& p = series.points;
  if (p.size() < 6) fail(ErrorKind::TooFewPoints, "need at least 6 points for a growth fit");
  GrowthFit fit;
  std::vector<double> mid;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const double dn = p[i + 1].n - p[i].n;
    fit.slope_per_n.push_back((p[i + 1].log_abs_trace - p[i].log_abs_trace) / dn);
    mid.push_back(0.5 * (p[i].n + p[i + 1].n));
  }
  // Richardson in h = 1/m through the slopes at m_max, ~m_max/2 and ~m_max/4.
  const std::size_t last = fit.slope_per_n.size() - 1;
  std::vector<std::size_t> level{last};
  for (double target = mid[last] / 2; level.size() < 3; target /= 2) {
    std::size_t best = 0;
    for (std::size_t i = 0; i < last; ++i) {
      if (std::abs(mid[i] - target) < std::abs(mid[best] - target)) best = i;
    }
    if (best == level.back()) break;
    level.push_back(best);
  }
  std::vector<double> h;
  std::vector<double> t;
  for (std::size_t i : level) {
    h.push_back(1.0 / mid[i]);
    t.push_back(fit.slope_per_n[i]);
  }
  for (std::size_t k = 1; k < t.size(); ++k) {
    for (std::size_t i = 0; i + k < t.size(); ++i) {
      t[i] = (h[i] * t[i + 1] - h[i + k] * t[i]) / (h[i] - h[i + k]);
    }
  }
  fit.slope = t[0];
  fit.predicted_volume = 4.0 * kPi * fit.slope;
  fit.relative_error =
      reference_volume > 0 ? std::abs(fit.predicted_volume - reference_volume) / reference_volume : 0.0;
  return fit;
}

}  // namespace bwy
