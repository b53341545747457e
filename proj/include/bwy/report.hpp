#pragma once

#include <string>

#include <json.hpp>

#include "bwy/asympt.hpp"
#include "bwy/geometry.hpp"
#include "bwy/intertwiner.hpp"
#include "bwy/sweep.hpp"
#include "bwy/word.hpp"

namespace bwy {

inline constexpr const char* kSchema = "bwy/1";

nlohmann::json complex_json(cplx z);

nlohmann::json volume_json(const DiffeoWord& w, const CriticalPoint& cp, const VolumeReport& r);
nlohmann::json trace_json(const DiffeoWord& w, int n, const TraceValue& t);
nlohmann::json sweep_json(const DiffeoWord& w, const EdgeWeightSweep& s);
nlohmann::json fit_json(const GrowthSeries& series, const GrowthFit& fit, double volume);

// Header n,log_abs,slope_n,predicted_volume and one row per point.
std::string fit_csv(const GrowthSeries& series, const GrowthFit& fit);

}  // namespace bwy
