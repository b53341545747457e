#include "bwy/geometry.hpp"

#include <cmath>
#include <random>

#include "bwy/dilog.hpp"
#include "bwy/error.hpp"

namespace bwy {
namespace {

void check_size(const CVector& alpha, const EpsilonSignature& eps) {
  if (alpha.size() != eps.size() || eps.size() < 2) fail(ErrorKind::DomainError, "alpha and word length differ");
}

cplx log_one_plus(cplx e) {
  const cplx w = 1.0 + e;
  if (w.real() <= 0.0 && std::abs(w.imag()) <= 1e-15 * (1.0 + std::abs(w))) {
    fail(ErrorKind::BranchCut, "1 + e^{-2i alpha} on the negative real axis");
  }
  return std::log(w);
}

bool in_canonical_region(const CVector& a) {
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    if (!(a[k].real() > 0.0 && a[k].real() < kPi / 2)) return false;
  }
  return true;
}

struct NewtonRun {
  CVector alpha;
  double residual;
  int iterations;
  bool converged;
};

NewtonRun newton(const EpsilonSignature& eps, CVector a, const NewtonOptions& opts) {
  NewtonRun run{a, 0.0, 0, false};
  try {
    CVector g = grad_f(a, eps);
    double res = g.cwiseAbs().maxCoeff();
    for (int it = 0; it < opts.max_iter; ++it) {
      run.iterations = it;
      if (res <= opts.tol) {
        run = {a, res, it, true};
        return run;
      }
      const CVector step = hess_f(a, eps).partialPivLu().solve(g);
      double t = 1.0;
      bool moved = false;
      for (int back = 0; back < 30; ++back) {
        const CVector trial = a - t * step;
        if (trial.allFinite()) {
          try {
            const CVector gt = grad_f(trial, eps);
            const double rt = gt.cwiseAbs().maxCoeff();
            if (rt < res || back == 29) {
              a = trial;
              g = gt;
              res = rt;
              moved = true;
              break;
            }
          } catch (const Error&) {
          }
        }
        t *= 0.5;
      }
      if (!moved || !std::isfinite(res)) break;
    }
    run = {a, res, opts.max_iter, res <= opts.tol};
  } catch (const Error&) {
    run.converged = false;
  }
  return run;
}

}  // namespace

CVector k_map(const CVector& alpha, const EpsilonSignature& eps) {
  check_size(alpha, eps);
  const int k0 = eps.size();
  CVector K(k0);
  for (int k = 0; k < k0; ++k) {
    const double ek = eps.at(k);
    const double ek1 = eps.at(k + 1);
    K[k] = ((ek + ek1 + 2.0) / 2.0) * alpha[k] - ek1 * alpha[(k + 1) % k0] - ek * alpha[(k + k0 - 1) % k0];
  }
  return K;
}

cplx l_map(const CVector& alpha, long long l_hat1, long long l_hat2) {
  return -static_cast<double>(l_hat2) * alpha[alpha.size() - 1] - static_cast<double>(l_hat1) * alpha[0];
}

cplx potential_f(const CVector& alpha, const EpsilonSignature& eps) {
  check_size(alpha, eps);
  cplx f = eps.size() * kPi * kPi / 6.0;
  for (Eigen::Index k = 0; k < alpha.size(); ++k) {
    const double re = alpha[k].real();
    if (!(re > -kPi / 2 && re < 3 * kPi / 2)) fail(ErrorKind::DomainError, "alpha outside the holomorphy strip");
    f += 2.0 * li2(-std::exp(-2.0 * kI * alpha[k]));
  }
  return f - 2.0 * k_map(alpha, eps).cwiseProduct(alpha).sum();
}

CVector grad_f(const CVector& alpha, const EpsilonSignature& eps) {
  check_size(alpha, eps);
  const int k0 = eps.size();
  CVector g(k0);
  for (int k = 0; k < k0; ++k) {
    const double ek = eps.at(k);
    const double ek1 = eps.at(k + 1);
    g[k] = 4.0 * kI * log_one_plus(std::exp(-2.0 * kI * alpha[k])) - 2.0 * (ek + ek1 + 2.0) * alpha[k] +
           4.0 * ek * alpha[(k + k0 - 1) % k0] + 4.0 * ek1 * alpha[(k + 1) % k0];
  }
  return g;
}

CMatrix hess_f(const CVector& alpha, const EpsilonSignature& eps) {
  check_size(alpha, eps);
  const int k0 = eps.size();
  CMatrix H = CMatrix::Zero(k0, k0);
  for (int k = 0; k < k0; ++k) {
    const double ek = eps.at(k);
    const double ek1 = eps.at(k + 1);
    const cplx e = std::exp(-2.0 * kI * alpha[k]);
    log_one_plus(e);
    H(k, k) += 8.0 * e / (1.0 + e) - 2.0 * (ek + ek1 + 2.0);
    H(k, (k + k0 - 1) % k0) += 4.0 * ek;
    H(k, (k + 1) % k0) += 4.0 * ek1;
  }
  return H;
}

CriticalPoint find_critical_point(const EpsilonSignature& eps, std::optional<CVector> guess,
                                  NewtonOptions opts) {
  const int k0 = eps.size();
  CVector start = guess.value_or(CVector::Constant(k0, cplx(kPi / 3, 0.0)));
  if (start.size() != k0) fail(ErrorKind::DomainError, "initial guess has wrong length");
  std::mt19937 rng(opts.seed);
  std::uniform_real_distribution<double> re(0.1, kPi / 2 - 0.1);
  std::uniform_real_distribution<double> im(-1.0, 1.0);
  bool out_of_region = false;
  for (int attempt = 0; attempt <= opts.restarts; ++attempt) {
    if (attempt > 0) {
      for (int k = 0; k < k0; ++k) start[k] = {re(rng), im(rng)};
    }
    const NewtonRun run = newton(eps, start, opts);
    if (!run.converged) continue;
    if (!in_canonical_region(run.alpha)) {
      out_of_region = true;
      continue;
    }
    CriticalPoint cp;
    cp.alpha = run.alpha;
    cp.residual = run.residual;
    cp.region.assign(static_cast<std::size_t>(k0), 0);
    cp.iterations = run.iterations;
    cp.restarts = attempt;
    return cp;
  }
  if (out_of_region) fail(ErrorKind::OutOfRegion, "critical point outside Re alpha in (0, pi/2)");
  fail(ErrorKind::NoConvergence, "Newton did not converge after restarts");
}

EdgeWeightSweep critical_to_edge_weights(const CriticalPoint& cp, const DiffeoWord& w, int n) {
  const int k0 = w.k0();
  if (cp.alpha.size() != k0) fail(ErrorKind::DomainError, "critical point does not match word");
  const cplx a1 = cp.alpha[0];
  const cplx ak = cp.alpha[k0 - 1];
  const cplx A0 = 2.0 * kI * ak;
  const cplx B0 = w.letters.front() == Letter::L ? -2.0 * kI * a1 : 2.0 * kI * (a1 - ak);
  SweepOptions opts;
  opts.require_periodic = true;
  return run_sweep(w, LogLifted::from_log(A0), LogLifted::from_log(B0), {}, n, opts);
}

VolumeReport volume_at(const CriticalPoint& cp, const EpsilonSignature& eps) {
  check_size(cp.alpha, eps);
  VolumeReport r;
  for (Eigen::Index k = 0; k < cp.alpha.size(); ++k) {
    const cplx z = -std::exp(-2.0 * kI * cp.alpha[k]);
    if (std::abs(z) < 1e-14 || std::abs(z - 1.0) < 1e-14) fail(ErrorKind::DegenerateShape, "degenerate tetrahedron shape");
    r.per_tet.push_back(2.0 * bloch_wigner(z));
    r.volume += r.per_tet.back();
  }
  r.hessdet = hess_f(cp.alpha, eps).determinant();
  r.im_f = potential_f(cp.alpha, eps).imag();
  r.satisfies_hypothesis = r.volume > 2.0 * (eps.size() - 1) * kV3;
  return r;
}

namespace {

cplx i_pow_n(int n) { return n % 4 == 1 ? kI : -kI; }

struct StepLogs {
  cplx U, U_hat, V, V_hat;
};

std::vector<StepLogs> step_logs(const EdgeWeightSweep& s) {
  std::vector<StepLogs> out;
  for (int k = 1; k <= s.k0(); ++k) {
    const SweepStep& st = s.steps[static_cast<std::size_t>(k)];
    out.push_back({st.U, st.U_hat, st.V, st.V_hat});
  }
  return out;
}

// g~_n on I^1, without the I^2 factor.
cplx g_tilde(cplx alpha, const StepLogs& l) {
  const cplx base = (1.0 + std::exp(-2.0 * kI * alpha)) / 2.0;
  const cplx power = 1.0 - (l.U + l.U_hat) / (4.0 * kPi * kI);
  return std::exp(power * std::log(base)) * std::exp(-alpha * (l.V + l.V_hat) / (2.0 * kPi));
}

cplx i2_factor(const StepLogs& l, int n) {
  const cplx in = i_pow_n(n);
  return (1.0 - in * std::exp(l.U / 2.0)) * (1.0 - in * std::exp(l.U_hat / 2.0));
}

void check_gsum_inputs(const CriticalPoint& cp, const EdgeWeightSweep& s, int n) {
  if (cp.alpha.size() != s.k0()) fail(ErrorKind::DomainError, "critical point does not match sweep");
  if (n < 3 || n % 2 == 0) fail(ErrorKind::DomainError, "n must be odd and >= 3");
}

}  // namespace

cplx gsum_at(const CriticalPoint& cp, const EdgeWeightSweep& s, int n) {
  check_gsum_inputs(cp, s, n);
  const auto logs = step_logs(s);
  const int k0 = s.k0();
  cplx prefactor = std::exp(kI * l_map(cp.alpha, s.l_hat1, s.l_hat2));
  std::vector<double> sign(static_cast<std::size_t>(k0), 1.0);
  if (s.l_hat1 % 2 != 0) sign.front() = -sign.front();
  if (s.l_hat2 % 2 != 0) sign.back() = -sign.back();
  cplx corners = 1.0;
  for (int k = 0; k < k0; ++k) {
    const StepLogs& l = logs[static_cast<std::size_t>(k)];
    prefactor *= g_tilde(cp.alpha[k], l);
    const cplx c = i2_factor(l, n) * std::exp(-(l.V + l.V_hat) / 2.0);
    corners *= 1.0 + sign[static_cast<std::size_t>(k)] * c;
  }
  return prefactor * corners;
}

cplx gsum_brute(const CriticalPoint& cp, const EdgeWeightSweep& s, int n) {
  check_gsum_inputs(cp, s, n);
  const auto logs = step_logs(s);
  const int k0 = s.k0();
  cplx total = 0.0;
  for (unsigned mask = 0; mask < (1u << k0); ++mask) {
    CVector a = cp.alpha;
    cplx term = 1.0;
    for (int k = 0; k < k0; ++k) {
      if (mask & (1u << k)) {
        a[k] += kPi;
        term *= i2_factor(logs[static_cast<std::size_t>(k)], n);
      }
      term *= g_tilde(a[k], logs[static_cast<std::size_t>(k)]);
    }
    total += std::exp(kI * l_map(a, s.l_hat1, s.l_hat2)) * term;
  }
  return total;
}

}  // namespace bwy
