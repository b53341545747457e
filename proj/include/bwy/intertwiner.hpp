#pragma once

#include <vector>

#include "bwy/cf_rep.hpp"
#include "bwy/sweep.hpp"
#include "bwy/types.hpp"
#include "bwy/word.hpp"

namespace bwy {

enum class MatrixKind { L, R, Twist, Product };

struct IntertwinerMatrix {
  CMatrix entries;
  MatrixKind kind = MatrixKind::Product;
  double normalization = 1.0;
};

// Integer exponent of q in the (i,j) entry, labels 1..n.
long long lambda_exponent(Letter move, long long i, long long j);

IntertwinerMatrix lambda_matrix(Letter move, cplx u, cplx v, cplx u_hat, cplx v_hat,
                                const QRoot& root, Exec exec = Exec::Parallel);

IntertwinerMatrix twist_matrix(long long l1, long long l2, const QRoot& root);

struct StepData {
  Letter move;
  cplx u, v, u_hat, v_hat;
};

std::vector<StepData> step_data(const EdgeWeightSweep& s, int n);

struct TraceValue {
  cplx value;
  double log_abs;
  // log10(n prod |Lambda_k| / |tr|); near 16 the double result is noise.
  double lost_digits = 0.0;
};

TraceValue trace_product(const std::vector<StepData>& steps, long long l_hat1, long long l_hat2,
                         const QRoot& root, Exec exec = Exec::Parallel);
TraceValue trace_product(const DiffeoWord& w, const EdgeWeightSweep& s, int n,
                         Exec exec = Exec::Parallel);

// Closed-form multi-index sum; throws Overflow when n^k0 > 1e8.
TraceValue trace_sum_formula(const std::vector<StepData>& steps, long long l_hat1,
                             long long l_hat2, const QRoot& root, Exec exec = Exec::Parallel);
TraceValue trace_sum_formula(const DiffeoWord& w, const EdgeWeightSweep& s, int n,
                             Exec exec = Exec::Parallel);

double conjugation_residual(const RepParams& params, Letter move);
double conjugation_residual(const RepParams& params, Letter move, const Transported& t);

}  // namespace bwy
