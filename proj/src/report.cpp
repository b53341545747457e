#include "bwy/report.hpp"

#include <cstdio>
#include <sstream>

namespace bwy {

using nlohmann::json;

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json volume_json(const DiffeoWord& w, const CriticalPoint& cp, const VolumeReport& r) {
  json alpha = json::array();
  for (Eigen::Index k = 0; k < cp.alpha.size(); ++k) alpha.push_back(complex_json(cp.alpha[k]));
  return {{"schema", kSchema},
          {"command", "volume"},
          {"word", render(w)},
          {"alpha", alpha},
          {"residual", cp.residual},
          {"volume", r.volume},
          {"per_tet", r.per_tet},
          {"hessdet", complex_json(r.hessdet)},
          {"im_f", r.im_f},
          {"hypothesis", r.satisfies_hypothesis}};
}

json trace_json(const DiffeoWord& w, int n, const TraceValue& t) {
  return {{"schema", kSchema},
          {"command", "trace"},
          {"word", render(w)},
          {"n", n},
          {"re", t.value.real()},
          {"im", t.value.imag()},
          {"abs", std::abs(t.value)},
          {"log_abs", t.log_abs},
          {"lost_digits", t.lost_digits}};
}

json sweep_json(const DiffeoWord& w, const EdgeWeightSweep& s) {
  json steps = json::array();
  for (std::size_t k = 0; k < s.steps.size(); ++k) {
    const SweepStep& st = s.steps[k];
    steps.push_back({{"k", k},
                     {"move", k == 0 ? "" : (s.moves[k - 1] == Letter::L ? "L" : "R")},
                     {"A", complex_json(st.A)},
                     {"B", complex_json(st.B)},
                     {"U", complex_json(st.U)},
                     {"V", complex_json(st.V)},
                     {"U_hat", complex_json(st.U_hat)},
                     {"V_hat", complex_json(st.V_hat)},
                     {"a", complex_json(st.a)},
                     {"b", complex_json(st.b)}});
  }
  return {{"schema", kSchema},
          {"command", "sweep"},
          {"word", render(w)},
          {"n", s.n},
          {"steps", steps},
          {"l_hat1", s.l_hat1},
          {"l_hat2", s.l_hat2},
          {"l1", s.l1},
          {"l2", s.l2},
          {"periodicity_residual", s.periodicity_residual},
          {"winding_residual", s.winding_residual}};
}

json fit_json(const GrowthSeries& series, const GrowthFit& fit, double volume) {
  json pts = json::array();
  for (std::size_t i = 0; i < series.points.size(); ++i) {
    json row = {{"n", series.points[i].n}, {"log_abs", series.points[i].log_abs_trace}};
    if (i > 0) {
      row["slope_n"] = fit.slope_per_n[i - 1];
      row["predicted_volume"] = 4.0 * kPi * fit.slope_per_n[i - 1];
    }
    pts.push_back(row);
  }
  return {{"schema", kSchema},
          {"command", "fit"},
          {"word", render(series.word)},
          {"points", pts},
          {"slope", fit.slope},
          {"predicted_volume", fit.predicted_volume},
          {"volume", volume},
          {"relative_error", fit.relative_error}};
}

std::string fit_csv(const GrowthSeries& series, const GrowthFit& fit) {
  std::ostringstream os;
  os << "n,log_abs,slope_n,predicted_volume\n";
  char buf[128];
  for (std::size_t i = 0; i < series.points.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%d,%.12g", series.points[i].n, series.points[i].log_abs_trace);
    os << buf;
    if (i > 0) {
      const double s = fit.slope_per_n[i - 1];
      std::snprintf(buf, sizeof buf, ",%.12g,%.12g", s, 4.0 * kPi * s);
      os << buf;
    } else {
      os << ",,";
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace bwy
