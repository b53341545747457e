#pragma once

#include <optional>
#include <vector>

#include "bwy/sweep.hpp"
#include "bwy/types.hpp"
#include "bwy/word.hpp"

namespace bwy {

struct CriticalPoint {
  CVector alpha;
  double residual = 0.0;
  std::vector<int> region;
  int iterations = 0;
  int restarts = 0;
};

struct VolumeReport {
  double volume = 0.0;
  std::vector<double> per_tet;
  cplx hessdet;
  double im_f = 0.0;
  bool satisfies_hypothesis = false;
};

cplx potential_f(const CVector& alpha, const EpsilonSignature& eps);
CVector k_map(const CVector& alpha, const EpsilonSignature& eps);
cplx l_map(const CVector& alpha, long long l_hat1, long long l_hat2);
CVector grad_f(const CVector& alpha, const EpsilonSignature& eps);
CMatrix hess_f(const CVector& alpha, const EpsilonSignature& eps);

struct NewtonOptions {
  double tol = 1e-12;
  int max_iter = 100;
  int restarts = 20;
  unsigned seed = 12345;
};

CriticalPoint find_critical_point(const EpsilonSignature& eps,
                                  std::optional<CVector> guess = std::nullopt,
                                  NewtonOptions opts = {});

EdgeWeightSweep critical_to_edge_weights(const CriticalPoint& cp, const DiffeoWord& w, int n);

VolumeReport volume_at(const CriticalPoint& cp, const EpsilonSignature& eps);

// Sum over corners J in {0,1}^k0 of g_n(alpha + pi J).
cplx gsum_at(const CriticalPoint& cp, const EdgeWeightSweep& s, int n);
cplx gsum_brute(const CriticalPoint& cp, const EdgeWeightSweep& s, int n);

}  // namespace bwy
