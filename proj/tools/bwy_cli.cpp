// bwy: quantum intertwiner traces and mapping-torus volumes for four-puncture sphere words.
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bwy/asympt.hpp"
#include "bwy/cf_rep.hpp"
#include "bwy/error.hpp"
#include "bwy/geometry.hpp"
#include "bwy/intertwiner.hpp"
#include "bwy/report.hpp"
#include "bwy/sweep.hpp"
#include "bwy/word.hpp"

namespace {

using nlohmann::json;

struct RunConfig {
  std::string command;
  std::string word;
  int n = 0;
  int n_max = 151;
  bool oracle = false;
  bool deterministic = false;
  unsigned seed = 12345;
  std::string format;
  double newton_tol = 1e-12;
  double oracle_tol = 1e-8;
  std::string out;
};

int exit_code(bwy::ErrorKind kind) {
  using bwy::ErrorKind;
  switch (kind) {
    case ErrorKind::EmptyWord:
    case ErrorKind::MissingLetter:
    case ErrorKind::SyntaxError:
    case ErrorKind::DomainError:
    case ErrorKind::TooFewPoints:
    case ErrorKind::Overflow:
      return 3;
    default:
      return 2;
  }
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

bwy::NewtonOptions newton_opts(const RunConfig& cfg) {
  bwy::NewtonOptions o;
  o.tol = cfg.newton_tol;
  o.seed = cfg.seed;
  return o;
}

void check_n(int n) {
  if (n < 3 || n % 2 == 0) bwy::fail(bwy::ErrorKind::DomainError, "n must be odd and >= 3, got " + std::to_string(n));
}

struct Pipeline {
  bwy::DiffeoWord word;
  bwy::EpsilonSignature eps;
  bwy::CriticalPoint cp;
};

Pipeline solve(const RunConfig& cfg) {
  Pipeline p;
  p.word = bwy::parse_word(cfg.word);
  p.eps = bwy::epsilon_signature(p.word);
  p.cp = bwy::find_critical_point(p.eps, std::nullopt, newton_opts(cfg));
  return p;
}

int cmd_volume(const RunConfig& cfg, std::ostream& os) {
  const Pipeline p = solve(cfg);
  const bwy::VolumeReport r = bwy::volume_at(p.cp, p.eps);
  os << bwy::volume_json(p.word, p.cp, r).dump(2) << '\n';
  return 0;
}

int cmd_trace(const RunConfig& cfg, std::ostream& os) {
  check_n(cfg.n);
  const Pipeline p = solve(cfg);
  const bwy::EdgeWeightSweep s = bwy::critical_to_edge_weights(p.cp, p.word, cfg.n);
  const bwy::Exec exec = cfg.deterministic ? bwy::Exec::Serial : bwy::Exec::Parallel;
  const bwy::TraceValue t = bwy::trace_product(p.word, s, cfg.n, exec);
  json j = bwy::trace_json(p.word, cfg.n, t);
  if (cfg.oracle) {
    const bwy::TraceValue o = bwy::trace_sum_formula(p.word, s, cfg.n, exec);
    j["oracle"] = {{"abs", std::abs(o.value)}, {"log_abs", o.log_abs}};
    j["discrepancy"] = std::abs(std::abs(o.value) - std::abs(t.value)) / std::abs(t.value);
  }
  os << j.dump(2) << '\n';
  return 0;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& os) {
  const int n = cfg.n == 0 ? 3 : cfg.n;
  check_n(n);
  const Pipeline p = solve(cfg);
  const bwy::EdgeWeightSweep s = bwy::critical_to_edge_weights(p.cp, p.word, n);
  os << bwy::sweep_json(p.word, s).dump(2) << '\n';
  return 0;
}

int cmd_fit(const RunConfig& cfg, std::ostream& os) {
  check_n(cfg.n_max);
  const Pipeline p = solve(cfg);
  const double volume = bwy::volume_at(p.cp, p.eps).volume;
  const bwy::EdgeWeightSweep s = bwy::critical_to_edge_weights(p.cp, p.word, 3);
  const bwy::Exec exec = cfg.deterministic ? bwy::Exec::Serial : bwy::Exec::Parallel;
  const bwy::GrowthSeries series = bwy::growth_series(p.word, s, cfg.n_max, exec);
  const bwy::GrowthFit fit = bwy::fit_growth(series, volume);
  if (cfg.format == "json") {
    os << bwy::fit_json(series, fit, volume).dump(2) << '\n';
  } else {
    os << bwy::fit_csv(series, fit);
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& os) {
  const int n = cfg.n == 0 ? 5 : cfg.n;
  check_n(n);
  const Pipeline p = solve(cfg);
  const bwy::EdgeWeightSweep s = bwy::critical_to_edge_weights(p.cp, p.word, n);
  double relations = 0.0;
  double central = 0.0;
  double dependent = 0.0;
  double conjugation = 0.0;
  double transport = 0.0;
  for (int k = 0; k < p.word.k0(); ++k) {
    const bwy::StepRep here = bwy::rep_params_at_step(s, k, n);
    const bwy::StepRep next = bwy::rep_params_at_step(s, k + 1, n);
    const bwy::GeneratorMatrices g = bwy::build_standard_rep(here.params);
    relations = std::max(relations, bwy::check_relations(g, here.params.root));
    for (double r : bwy::central_residuals(g, here.params)) central = std::max(central, r);
    for (double r : bwy::dependent_edge_residuals(g, here.params)) dependent = std::max(dependent, r);
    const bwy::Letter move = p.word.letters[static_cast<std::size_t>(k)];
    const bwy::Transported t{next.params, next.u, next.v, next.u_hat, next.v_hat};
    conjugation = std::max(conjugation, bwy::conjugation_residual(here.params, move, t));
    const bwy::Transported direct = bwy::transport_params(here.params, move);
    const double dx = std::abs(std::pow(direct.next.x, n) - std::pow(next.params.x, n));
    const double dy = std::abs(std::pow(direct.next.y, n) - std::pow(next.params.y, n));
    transport = std::max(transport, (dx + dy) / (1.0 + std::abs(std::pow(next.params.y, n))));
  }

  const bwy::CVector g = bwy::grad_f(p.cp.alpha, p.eps);
  double grad_fd = 0.0;
  const double h = 1e-5;
  for (Eigen::Index k = 0; k < p.cp.alpha.size(); ++k) {
    bwy::CVector a = p.cp.alpha;
    bwy::CVector b = p.cp.alpha;
    a[k] += h;
    b[k] -= h;
    const bwy::cplx fd = (bwy::potential_f(a, p.eps) - bwy::potential_f(b, p.eps)) / (2 * h);
    grad_fd = std::max(grad_fd, std::abs(fd - g[k]) / std::max(1.0, std::abs(g[k])));
  }
  const bwy::VolumeReport vol = bwy::volume_at(p.cp, p.eps);

  json res = {{"relations", relations},
              {"central", central},
              {"dependent_edges", dependent},
              {"conjugation", conjugation},
              {"transport", transport},
              {"gradient_fd", grad_fd},
              {"critical_residual", p.cp.residual},
              {"periodicity", s.periodicity_residual},
              {"volume_vs_im_f", std::abs(vol.volume - vol.im_f)}};
  if (std::pow(static_cast<double>(n), p.word.k0()) <= 1e6) {
    const bwy::Exec exec = cfg.deterministic ? bwy::Exec::Serial : bwy::Exec::Parallel;
    const double a = std::abs(bwy::trace_product(p.word, s, n, exec).value);
    const double b = std::abs(bwy::trace_sum_formula(p.word, s, n, exec).value);
    res["trace_oracle"] = std::abs(a - b) / a;
  }
  bool pass = true;
  for (const auto& [key, val] : res.items()) pass = pass && val.get<double>() <= cfg.oracle_tol;
  os << json{{"schema", bwy::kSchema},
             {"command", "verify"},
             {"word", bwy::render(p.word)},
             {"n", n},
             {"tolerance", cfg.oracle_tol},
             {"residuals", res},
             {"pass", pass}}
            .dump(2)
     << '\n';
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum intertwiner traces and hyperbolic volumes for four-puncture sphere words"};
  RunConfig cfg;
  app.set_config("--config", "", "TOML/INI file with option defaults (flags win)");
  app.add_option("--n", cfg.n, "odd root-of-unity order");
  app.add_option("--n-max", cfg.n_max, "largest odd n for fit")->capture_default_str();
  app.add_flag("--oracle", cfg.oracle, "also evaluate the closed-form sum");
  app.add_flag("--deterministic", cfg.deterministic, "fixed summation order");
  app.add_option("--seed", cfg.seed, "seed for Newton restarts")->capture_default_str();
  app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--newton-tol", cfg.newton_tol, "gradient tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--oracle-tol", cfg.oracle_tol, "verify tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--out", cfg.out, "output path (default stdout)");
  app.require_subcommand(1);
  app.fallthrough();

  const std::pair<const char*, const char*> commands[] = {
      {"volume", "critical point and volume"},
      {"trace", "intertwiner trace at --n"},
      {"sweep", "edge-weight sweep table"},
      {"fit", "growth series up to --n-max and slope fit"},
      {"verify", "residual suite at --n"}};
  for (const auto& [name, desc] : commands) {
    CLI::App* sc = app.add_subcommand(name, desc);
    sc->add_option("word", cfg.word, "word such as LR, L^2R^2 or (LR)^3")->required();
    sc->callback([&cfg, n = std::string(name)] { cfg.command = n; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    Output out(cfg.out);
    std::ostream& os = out.stream();
    os.precision(17);
    if (cfg.command == "volume") return cmd_volume(cfg, os);
    if (cfg.command == "trace") return cmd_trace(cfg, os);
    if (cfg.command == "sweep") return cmd_sweep(cfg, os);
    if (cfg.command == "fit") return cmd_fit(cfg, os);
    return cmd_verify(cfg, os);
  } catch (const bwy::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
