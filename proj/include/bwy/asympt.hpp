#pragma once

#include <vector>

#include "bwy/sweep.hpp"
#include "bwy/types.hpp"
#include "bwy/word.hpp"

namespace bwy {

struct GrowthPoint {
  int n;
  double log_abs_trace;
};

struct GrowthSeries {
  DiffeoWord word;
  std::vector<GrowthPoint> points;
};

struct GrowthFit {
  double slope = 0.0;
  std::vector<double> slope_per_n;  // slope_per_n[i] uses points i and i+1
  double predicted_volume = 0.0;
  double relative_error = 0.0;
};

// Points n = 3, 5, ..., n_max from the hyperbolic sweep (twist exponents per n).
GrowthSeries growth_series(const DiffeoWord& w, const EdgeWeightSweep& hyperbolic, int n_max,
                           Exec exec = Exec::Parallel);

GrowthFit fit_growth(const GrowthSeries& series, double reference_volume);

}  // namespace bwy
