#include <random>

#include <gtest/gtest.h>

#include "bwy/kernels.hpp"
#include "oracles.hpp"

using namespace bwy;

namespace {

kernels::SumInput random_input(const char* word, int n, std::mt19937& rng) {
  kernels::SumInput in;
  for (Letter m : parse_word(word).letters) {
    in.eps.push_back(m == Letter::L ? -1 : 1);
    std::vector<cplx> w(static_cast<std::size_t>(n + 1));
    for (auto& x : w) x = oracle::random_nonzero(rng);
    w[0] = w[static_cast<std::size_t>(n)];
    in.weights.push_back(w);
  }
  in.l_hat1 = static_cast<long long>(rng() % 5) - 2;
  in.l_hat2 = static_cast<long long>(rng() % 5) - 2;
  return in;
}

}  // namespace

TEST(Kernels, AssemblySerialMatchesParallel) {
  std::mt19937 rng(50);
  for (int n : {3, 11, 41}) {
    const QRoot root(n);
    std::vector<cplx> w(static_cast<std::size_t>(n + 1));
    for (auto& x : w) x = oracle::random_nonzero(rng);
    for (Letter m : {Letter::L, Letter::R}) {
      CMatrix a;
      CMatrix b;
      kernels::assemble_lambda_serial(a, m, w, 0.7, root);
      kernels::assemble_lambda_omp(b, m, w, 0.7, root);
      EXPECT_EQ(a, b);
    }
  }
}

TEST(Kernels, SumExponentIsPeriodic) {
  std::mt19937 rng(51);
  const int n = 7;
  const kernels::SumInput in = random_input("LLRLR", n, rng);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<long long> idx(5);
    for (auto& i : idx) i = 1 + static_cast<long long>(rng() % n);
    const long long base = kernels::sum_exponent(in, idx);
    const std::size_t pos = rng() % 5;
    idx[pos] += n;
    EXPECT_EQ((((kernels::sum_exponent(in, idx) - base) % n) + n) % n, 0);
  }
}

TEST(Kernels, SumSerialMatchesParallel) {
  std::mt19937 rng(52);
  for (int n : {3, 5, 9}) {
    const QRoot root(n);
    for (const char* word : {"LR", "LLR", "LRRL"}) {
      const kernels::SumInput in = random_input(word, n, rng);
      const cplx a = kernels::multi_index_sum_serial(in, root);
      const cplx b = kernels::multi_index_sum_omp(in, root);
      EXPECT_LE(std::abs(a - b), 1e-12 * std::abs(a)) << word << " " << n;
    }
  }
}

TEST(Kernels, SumMatchesDirectLoops) {
  std::mt19937 rng(53);
  const int n = 5;
  const QRoot root(n);
  const kernels::SumInput in = random_input("LRR", n, rng);
  cplx direct = 0.0;
  for (long long i = 1; i <= n; ++i) {
    for (long long j = 1; j <= n; ++j) {
      for (long long k = 1; k <= n; ++k) {
        const std::vector<long long> idx{i, j, k};
        direct += root.pow(kernels::sum_exponent(in, idx)) * in.weights[0][i] * in.weights[1][j] *
                  in.weights[2][k];
      }
    }
  }
  EXPECT_LE(std::abs(kernels::multi_index_sum_serial(in, root) - direct), 1e-12 * std::abs(direct));
}
