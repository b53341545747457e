#include "bwy/sweep.hpp"

#include <cmath>

#include "bwy/error.hpp"

namespace bwy {
namespace {

std::array<cplx, 4> permute(const std::array<cplx, 4>& t, Letter move) {
  if (move == Letter::L) return {t[3], t[1], t[2], t[0]};
  return {t[1], t[0], t[2], t[3]};
}

bool hits_minus_one(cplx log_value) {
  const cplx e = std::exp(log_value);
  return std::abs(1.0 + e) < 1e-12 * (1.0 + std::abs(e));
}

}  // namespace

long long twist_exponent(long long l_hat, int n) {
  const long long inv2 = ((static_cast<long long>(n) - 1) * (n - 1) / 2) % n;
  long long r = (l_hat % n) * inv2 % n;
  return r < 0 ? r + n : r;
}

EdgeWeightSweep run_sweep(const DiffeoWord& w, LogLifted A0, LogLifted B0,
                          const std::array<cplx, 4>& theta, int n, SweepOptions opts) {
  if (n < 3 || n % 2 == 0) fail(ErrorKind::DomainError, "n must be odd and >= 3");
  EdgeWeightSweep s;
  s.theta = theta;
  s.moves = w.letters;
  s.n = n;

  SweepStep first{};
  first.A = A0.log;
  first.B = B0.log;
  first.a = std::exp(first.A);
  first.b = std::exp(first.B);
  first.theta = theta;
  s.steps.push_back(first);

  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    const SweepStep& prev = s.steps.back();
    const auto& t = prev.theta;
    SweepStep cur{};
    if (w.letters[k] == Letter::L) {
      cur.A = -prev.B;
      cur.U = -cur.A;
      cur.U_hat = cur.U + (t[2] + t[3] - t[0] - t[1]) / 2.0;
    } else {
      cur.A = -t[0] + prev.A + prev.B;
      cur.U = -cur.A;
      cur.U_hat = cur.U + (t[1] + t[2] - t[0] - t[3]) / 2.0;
    }
    if (hits_minus_one(cur.U) || hits_minus_one(cur.U_hat)) {
      fail(ErrorKind::DegenerateEdge, "edge weight -1 at step " + std::to_string(k + 1));
    }
    cur.V = std::log(1.0 + std::exp(cur.U));
    cur.V_hat = std::log(1.0 + std::exp(cur.U_hat));
    if (w.letters[k] == Letter::L) {
      cur.B = cur.V + cur.V_hat + (t[1] + t[3] - t[0] - t[2]) / 2.0 + prev.A;
    } else {
      cur.B = cur.V + cur.V_hat + prev.B;
    }
    cur.a = std::exp(cur.A);
    cur.b = std::exp(cur.B);
    cur.theta = permute(t, w.letters[k]);
    s.steps.push_back(cur);
  }

  const SweepStep& last = s.steps.back();
  s.periodicity_residual = std::abs(last.a - first.a) + std::abs(last.b - first.b);
  const cplx w1 = (first.A - last.A) / (2.0 * kPi * kI);
  const cplx w2 = (first.B - last.B) / (2.0 * kPi * kI);
  s.l_hat1 = std::llround(w1.real());
  s.l_hat2 = std::llround(w2.real());
  s.winding_residual = std::max(std::abs(w1 - static_cast<double>(s.l_hat1)),
                                std::abs(w2 - static_cast<double>(s.l_hat2)));
  s.l1 = twist_exponent(s.l_hat1, n);
  s.l2 = twist_exponent(s.l_hat2, n);
  if (opts.require_periodic &&
      (s.periodicity_residual > opts.periodic_tol || s.winding_residual > opts.periodic_tol)) {
    fail(ErrorKind::NonPeriodic,
         "sweep not periodic, residual " + std::to_string(s.periodicity_residual));
  }
  return s;
}

EdgeWeightSweep with_n(EdgeWeightSweep s, int n) {
  if (n < 3 || n % 2 == 0) fail(ErrorKind::DomainError, "n must be odd and >= 3");
  s.n = n;
  s.l1 = twist_exponent(s.l_hat1, n);
  s.l2 = twist_exponent(s.l_hat2, n);
  return s;
}

StepRep rep_params_at_step(const EdgeWeightSweep& s, int k, int n) {
  if (k < 0 || k > s.k0()) fail(ErrorKind::DomainError, "step index out of range");
  const double dn = n;
  const SweepStep& st = s.steps[static_cast<std::size_t>(k)];
  StepRep out;
  out.params.root = QRoot(n);
  out.params.x = std::exp(st.A / dn);
  out.params.y = std::exp(st.B / dn);
  cplx sum = 0.0;
  for (int j = 0; j < 4; ++j) {
    out.params.p[static_cast<std::size_t>(j)] = std::exp(st.theta[static_cast<std::size_t>(j)] / dn);
    sum += st.theta[static_cast<std::size_t>(j)];
  }
  out.params.h = std::exp(sum / (2.0 * dn));
  const cplx q = out.params.root.q();
  out.u = q * std::exp(st.U / dn);
  out.v = std::exp(st.V / dn);
  out.u_hat = q * std::exp(st.U_hat / dn);
  out.v_hat = std::exp(st.V_hat / dn);
  return out;
}

}  // namespace bwy
