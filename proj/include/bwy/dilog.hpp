#pragma once

#include <vector>

#include "bwy/types.hpp"

namespace bwy {

class QRoot {
 public:
  explicit QRoot(int n);

  int n() const { return n_; }
  cplx q() const { return powers_[1 % n_]; }
  // q^e for any integer e, read from an exact table.
  cplx pow(long long e) const { return powers_[static_cast<std::size_t>(mod(e))]; }
  long long mod(long long e) const {
    const long long r = e % n_;
    return r < 0 ? r + n_ : r;
  }
  // Inverse of 2 mod n, i.e. (n-1)^2/2 mod n.
  long long half() const { return (n_ + 1) / 2; }

 private:
  int n_;
  std::vector<cplx> powers_;
};

// T_0 = 2, T_1 = x, T_{m+1} = x T_m - T_{m-1}.
cplx chebyshev_eval(int m, cplx x);

// Principal branch; on the cut (1, inf) the value is the limit from below.
cplx li2(cplx z);

double bloch_wigner(cplx z);

double lobachevsky(double theta);

// v^{-j} prod_{k=1}^{j} (1 + u q^{-2k})
cplx qdl_discrete(cplx u, cplx v, int j, const QRoot& root);

// QDL(u,v|j) for j = 0..n, built by prefix products.
std::vector<cplx> qdl_table(cplx u, cplx v, const QRoot& root);

// |D^q(u)|^{1/n} with D^q(u) = prod_{j=1}^{n} QDL(u,v|j), accumulated in logs.
double dq_modulus_root(cplx u, cplx v, const QRoot& root);
double dq_log_modulus_root(cplx u, cplx v, const QRoot& root);

// Large-n limit of |D^q(u) D^q(u_hat)|^{1/n}; n_mod_4 must be 1 or 3.
double dq_limit_modulus(cplx A, cplx A_hat, int n_mod_4);

}  // namespace bwy
