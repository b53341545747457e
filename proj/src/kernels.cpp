#include "bwy/kernels.hpp"

#include "bwy/error.hpp"
#include "bwy/intertwiner.hpp"

namespace bwy::kernels {

void assemble_lambda_serial(CMatrix& out, Letter move, const std::vector<cplx>& w, double scale,
                            const QRoot& root) {
  const int n = root.n();
  out.resize(n, n);
  for (int sj = 0; sj < n; ++sj) {
    const long long j = sj + 1;
    const cplx wj = w[static_cast<std::size_t>(j)] * scale;
    for (int si = 0; si < n; ++si) out(si, sj) = root.pow(lambda_exponent(move, si + 1, j)) * wj;
  }
}

void assemble_lambda_omp(CMatrix& out, Letter move, const std::vector<cplx>& w, double scale,
                         const QRoot& root) {
  const int n = root.n();
  out.resize(n, n);
#pragma omp parallel for schedule(static)
  for (int sj = 0; sj < n; ++sj) {
    const long long j = sj + 1;
    const cplx wj = w[static_cast<std::size_t>(j)] * scale;
    for (int si = 0; si < n; ++si) out(si, sj) = root.pow(lambda_exponent(move, si + 1, j)) * wj;
  }
}

long long sum_exponent(const SumInput& in, const std::vector<long long>& idx) {
  const std::size_t k0 = idx.size();
  long long two_p = 0;
  for (std::size_t k = 0; k < k0; ++k) {
    const long long a = idx[k];
    const long long b = idx[(k + k0 - 1) % k0];
    two_p += 2 * a * a + in.eps[k] * (a * a + b * b - 4 * a * b);
  }
  const long long e1 = in.eps[0];
  two_p += -2 * idx[k0 - 1] * in.l_hat2 + 2 * e1 * idx[0] * in.l_hat1 - (1 + e1) * idx[k0 - 1] * in.l_hat1;
  return two_p / 2;
}

namespace {

// Odometer over labels 1..n for positions 1..k0-1 with the first label fixed.
cplx slice_sum(const SumInput& in, const QRoot& root, long long first) {
  const std::size_t k0 = in.eps.size();
  const long long n = root.n();
  std::vector<long long> idx(k0, 1);
  idx[0] = first;
  cplx total = 0.0;
  while (true) {
    cplx term = root.pow(sum_exponent(in, idx));
    for (std::size_t k = 0; k < k0; ++k) term *= in.weights[k][static_cast<std::size_t>(idx[k])];
    total += term;
    std::size_t pos = 1;
    while (pos < k0 && idx[pos] == n) idx[pos++] = 1;
    if (pos >= k0) break;
    ++idx[pos];
  }
  return total;
}

}  // namespace

cplx multi_index_sum_serial(const SumInput& in, const QRoot& root) {
  cplx total = 0.0;
  for (long long first = 1; first <= root.n(); ++first) total += slice_sum(in, root, first);
  return total;
}

cplx multi_index_sum_omp(const SumInput& in, const QRoot& root) {
  double re = 0.0;
  double im = 0.0;
  const int n = root.n();
#pragma omp parallel for schedule(dynamic) reduction(+ : re, im)
  for (int first = 1; first <= n; ++first) {
    const cplx s = slice_sum(in, root, first);
    re += s.real();
    im += s.imag();
  }
  return {re, im};
}

}  // namespace bwy::kernels
