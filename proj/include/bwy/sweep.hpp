#pragma once

#include <array>
#include <vector>

#include "bwy/cf_rep.hpp"
#include "bwy/types.hpp"
#include "bwy/word.hpp"

namespace bwy {

struct LogLifted {
  cplx value;
  cplx log;

  static LogLifted from_log(cplx l) { return {std::exp(l), l}; }
};

struct SweepStep {
  cplx A, B;
  // Logs of the step into this one; zero at k = 0.
  cplx U, V, U_hat, V_hat;
  cplx a, b;
  std::array<cplx, 4> theta;
};

struct EdgeWeightSweep {
  std::vector<SweepStep> steps;  // k = 0..k0
  std::vector<Letter> moves;     // moves[k-1] leads into step k
  std::array<cplx, 4> theta;
  long long l_hat1 = 0;
  long long l_hat2 = 0;
  double winding_residual = 0.0;
  double periodicity_residual = 0.0;
  int n = 3;
  long long l1 = 0;
  long long l2 = 0;

  int k0() const { return static_cast<int>(moves.size()); }
};

struct StepRep {
  RepParams params;
  cplx u, v, u_hat, v_hat;
};

// l = l_hat (n-1)^2/2 mod n.
long long twist_exponent(long long l_hat, int n);

struct SweepOptions {
  bool require_periodic = false;
  double periodic_tol = 1e-9;
};

EdgeWeightSweep run_sweep(const DiffeoWord& w, LogLifted A0, LogLifted B0,
                          const std::array<cplx, 4>& theta, int n, SweepOptions opts = {});

// Same sweep with the twist exponents recomputed for another odd n.
EdgeWeightSweep with_n(EdgeWeightSweep s, int n);

StepRep rep_params_at_step(const EdgeWeightSweep& s, int k, int n);

}  // namespace bwy
