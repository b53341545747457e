#pragma once

#include <vector>

#include "bwy/dilog.hpp"
#include "bwy/types.hpp"
#include "bwy/word.hpp"

namespace bwy::kernels {

// Entry (i,j) = q^{e(i,j)} w[j] * scale, labels 1..n; w[j] indexed by label.
void assemble_lambda_serial(CMatrix& out, Letter move, const std::vector<cplx>& w, double scale,
                            const QRoot& root);
void assemble_lambda_omp(CMatrix& out, Letter move, const std::vector<cplx>& w, double scale,
                         const QRoot& root);

struct SumInput {
  std::vector<int> eps;
  std::vector<std::vector<cplx>> weights;  // weights[k][label], labels 1..n
  long long l_hat1 = 0;
  long long l_hat2 = 0;
};

long long sum_exponent(const SumInput& in, const std::vector<long long>& idx);

cplx multi_index_sum_serial(const SumInput& in, const QRoot& root);
cplx multi_index_sum_omp(const SumInput& in, const QRoot& root);

}  // namespace bwy::kernels
