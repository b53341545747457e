#include "bwy/intertwiner.hpp"

#include <cmath>

#include "bwy/error.hpp"
#include "bwy/kernels.hpp"

namespace bwy {
namespace {

void check_root(cplx u, cplx v, const QRoot& root) {
  const int n = root.n();
  const cplx target = 1.0 + std::pow(u, n);
  if (std::abs(target) < 1e-12 * (1.0 + std::abs(target - 1.0))) fail(ErrorKind::SingularU, "u^n = -1");
  if (std::abs(std::pow(v, n) - target) > 1e-10 * std::max(1.0, std::abs(target))) {
    fail(ErrorKind::DomainError, "v^n != 1 + u^n");
  }
}

// QDL(u,v|j) QDL(u_hat,v_hat|j) by label, and log of the normalization.
std::vector<cplx> column_weights(const StepData& st, const QRoot& root, double& log_norm) {
  const auto a = qdl_table(st.u, st.v, root);
  const auto b = qdl_table(st.u_hat, st.v_hat, root);
  std::vector<cplx> w(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) w[j] = a[j] * b[j];
  log_norm = -0.5 * std::log(static_cast<double>(root.n())) - dq_log_modulus_root(st.u, st.v, root) -
             dq_log_modulus_root(st.u_hat, st.v_hat, root);
  return w;
}

}  // namespace

long long lambda_exponent(Letter move, long long i, long long j) {
  if (move == Letter::L) return (j * j - i * i + 4 * i * j + i - j) / 2;
  return (3 * j * j + i * i - 4 * i * j + i - j) / 2;
}

IntertwinerMatrix lambda_matrix(Letter move, cplx u, cplx v, cplx u_hat, cplx v_hat,
                                const QRoot& root, Exec exec) {
  check_root(u, v, root);
  check_root(u_hat, v_hat, root);
  double log_norm = 0.0;
  const auto w = column_weights({move, u, v, u_hat, v_hat}, root, log_norm);
  IntertwinerMatrix out;
  out.kind = move == Letter::L ? MatrixKind::L : MatrixKind::R;
  out.normalization = std::exp(log_norm);
  if (exec == Exec::Parallel) {
    kernels::assemble_lambda_omp(out.entries, move, w, out.normalization, root);
  } else {
    kernels::assemble_lambda_serial(out.entries, move, w, out.normalization, root);
  }
  return out;
}

IntertwinerMatrix twist_matrix(long long l1, long long l2, const QRoot& root) {
  const int n = root.n();
  IntertwinerMatrix out;
  out.kind = MatrixKind::Twist;
  out.entries = CMatrix::Zero(n, n);
  for (long long j = 1; j <= n; ++j) {
    const long long i = root.mod(j + l1 - 1);
    out.entries(i, j - 1) = root.pow(-2 * j * l2 - j * l1);
  }
  return out;
}

std::vector<StepData> step_data(const EdgeWeightSweep& s, int n) {
  std::vector<StepData> out;
  out.reserve(static_cast<std::size_t>(s.k0()));
  for (int k = 1; k <= s.k0(); ++k) {
    const StepRep r = rep_params_at_step(s, k, n);
    out.push_back({s.moves[static_cast<std::size_t>(k - 1)], r.u, r.v, r.u_hat, r.v_hat});
  }
  return out;
}

TraceValue trace_product(const std::vector<StepData>& steps, long long l_hat1, long long l_hat2,
                         const QRoot& root, Exec exec) {
  const int n = root.n();
  CMatrix prod;
  double log_norms = std::log(static_cast<double>(n));
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const StepData& st = steps[k];
    const IntertwinerMatrix lam = lambda_matrix(st.move, st.u, st.v, st.u_hat, st.v_hat, root, exec);
    log_norms += std::log(norm_inf(lam.entries));
    if (k == 0) {
      prod = lam.entries;
    } else {
      prod = prod * lam.entries;
    }
  }
  const long long l1 = twist_exponent(l_hat1, n);
  const long long l2 = twist_exponent(l_hat2, n);
  cplx tr = 0.0;
  for (long long j = 1; j <= n; ++j) {
    tr += prod(j - 1, root.mod(j + l1 - 1)) * root.pow(-2 * j * l2 - j * l1);
  }
  const double log_abs = std::log(std::abs(tr));
  return {tr, log_abs, std::max(0.0, (log_norms - log_abs) / std::log(10.0))};
}

TraceValue trace_product(const DiffeoWord& w, const EdgeWeightSweep& s, int n, Exec exec) {
  if (w.letters != s.moves) fail(ErrorKind::DomainError, "sweep does not belong to word");
  return trace_product(step_data(s, n), s.l_hat1, s.l_hat2, QRoot(n), exec);
}

TraceValue trace_sum_formula(const std::vector<StepData>& steps, long long l_hat1,
                             long long l_hat2, const QRoot& root, Exec exec) {
  const double terms = std::pow(static_cast<double>(root.n()), static_cast<double>(steps.size()));
  if (terms > 1e8) fail(ErrorKind::Overflow, "n^k0 exceeds 1e8 terms");
  kernels::SumInput in;
  in.l_hat1 = l_hat1;
  in.l_hat2 = l_hat2;
  double log_scale = 0.0;
  for (const StepData& st : steps) {
    check_root(st.u, st.v, root);
    check_root(st.u_hat, st.v_hat, root);
    double ln = 0.0;
    in.weights.push_back(column_weights(st, root, ln));
    in.eps.push_back(st.move == Letter::L ? -1 : 1);
    log_scale += ln;
  }
  const cplx s = exec == Exec::Parallel ? kernels::multi_index_sum_omp(in, root)
                                        : kernels::multi_index_sum_serial(in, root);
  return {s * std::exp(log_scale), std::log(std::abs(s)) + log_scale};
}

TraceValue trace_sum_formula(const DiffeoWord& w, const EdgeWeightSweep& s, int n, Exec exec) {
  if (w.letters != s.moves) fail(ErrorKind::DomainError, "sweep does not belong to word");
  return trace_sum_formula(step_data(s, n), s.l_hat1, s.l_hat2, QRoot(n), exec);
}

double conjugation_residual(const RepParams& params, Letter move, const Transported& t) {
  const QRoot& root = params.root;
  const GeneratorMatrices rho = build_standard_rep(params);
  const GeneratorMatrices img = apply_iso(rho, move, root);
  const GeneratorMatrices next = build_standard_rep(t.next);
  const IntertwinerMatrix lam =
      lambda_matrix(move, t.u, t.v, t.u_hat, t.v_hat, root, Exec::Serial);
  const double nl = norm_inf(lam.entries);
  double worst = 0.0;
  for (int g = 1; g <= 6; ++g) {
    const CMatrix diff = img[g] * lam.entries - lam.entries * next[g];
    worst = std::max(worst, norm_inf(diff) / (nl * norm_inf(next[g])));
  }
  return worst;
}

double conjugation_residual(const RepParams& params, Letter move) {
  return conjugation_residual(params, move, transport_params(params, move));
}

}  // namespace bwy
