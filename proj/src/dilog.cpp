#include "bwy/dilog.hpp"

#include <array>
#include <cmath>

#include "bwy/error.hpp"

namespace bwy {
namespace {

constexpr double kZeta2 = kPi * kPi / 6.0;
constexpr int kBernoulliTerms = 44;

// c[k] = B_k / (k+1)!, with B_1 = -1/2 and zeros at odd k > 1.
const std::array<double, kBernoulliTerms>& bernoulli_coeffs() {
  static const std::array<double, kBernoulliTerms> c = [] {
    std::array<double, kBernoulliTerms> out{};
    out[0] = 1.0;
    out[1] = -0.25;
    for (int k = 2; k < kBernoulliTerms; k += 2) {
      const int s = k;
      constexpr int K = 1000;
      long double zeta = 0.0L;
      for (int j = K; j >= 1; --j) zeta += std::pow(static_cast<long double>(j), -s);
      const long double Kl = K;
      zeta += std::pow(Kl, 1 - s) / (s - 1) - std::pow(Kl, -s) / 2 +
              s * std::pow(Kl, -s - 1) / 12;
      const long double sign = (k / 2) % 2 == 1 ? 1.0L : -1.0L;
      const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
      out[static_cast<std::size_t>(k)] =
          static_cast<double>(sign * 2.0L * zeta / ((k + 1) * std::pow(two_pi, k)));
    }
    return out;
  }();
  return c;
}

// |w| <= 1 and Re w <= 1/2.
cplx li2_core(cplx w) {
  if (std::abs(w) <= 0.5) {
    cplx sum = 0.0;
    cplx term = w;
    for (int k = 1; k < 200; ++k) {
      const cplx add = term / static_cast<double>(k * k);
      sum += add;
      if (std::abs(add) < 1e-18 * std::abs(sum)) break;
      term *= w;
    }
    return sum;
  }
  const cplx u = -std::log(1.0 - w);
  const auto& c = bernoulli_coeffs();
  cplx sum = 0.0;
  cplx up = u;
  for (int k = 0; k < kBernoulliTerms; ++k) {
    sum += c[static_cast<std::size_t>(k)] * up;
    up *= u;
  }
  return sum;
}

cplx li2_unit(cplx z) {
  if (z.real() > 0.5) {
    return -li2_core(1.0 - z) + kZeta2 - std::log(z) * std::log(1.0 - z);
  }
  return li2_core(z);
}

}  // namespace

QRoot::QRoot(int n) : n_(n) {
  if (n < 3 || n % 2 == 0) fail(ErrorKind::DomainError, "n must be odd and >= 3, got " + std::to_string(n));
  powers_.resize(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) {
    const double t = 2.0 * kPi * e / n;
    powers_[static_cast<std::size_t>(e)] = {std::cos(t), std::sin(t)};
  }
}

cplx chebyshev_eval(int m, cplx x) {
  if (m < 0) fail(ErrorKind::DomainError, "negative Chebyshev degree");
  cplx prev = 2.0;
  if (m == 0) return prev;
  cplx cur = x;
  for (int k = 1; k < m; ++k) {
    const cplx next = x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

cplx li2(cplx z) {
  if (z == cplx(0.0)) return 0.0;
  if (z == cplx(1.0)) return kZeta2;
  if (z.imag() == 0.0 && z.real() > 1.0) z = cplx(z.real(), -0.0);
  if (std::abs(z) > 1.0) {
    const cplx lg = std::log(-z);
    return -li2_unit(1.0 / z) - kZeta2 - 0.5 * lg * lg;
  }
  return li2_unit(z);
}

double bloch_wigner(cplx z) {
  if (z == cplx(0.0) || z == cplx(1.0)) fail(ErrorKind::DomainError, "Bloch-Wigner undefined at 0 and 1");
  if (z.imag() == 0.0) return 0.0;
  return li2(z).imag() + std::arg(1.0 - z) * std::log(std::abs(z));
}

double lobachevsky(double theta) {
  double t = std::fmod(theta, kPi);
  if (t < 0) t += kPi;
  if (t == 0.0) return 0.0;
  return 0.5 * bloch_wigner(std::polar(1.0, 2.0 * t));
}

cplx qdl_discrete(cplx u, cplx v, int j, const QRoot& root) {
  if (v == cplx(0.0)) fail(ErrorKind::ZeroV, "v = 0 in QDL");
  if (j < 0) fail(ErrorKind::DomainError, "QDL index must be >= 0");
  cplx out = 1.0;
  const cplx vinv = 1.0 / v;
  for (int k = 1; k <= j; ++k) out *= (1.0 + u * root.pow(-2LL * k)) * vinv;
  return out;
}

std::vector<cplx> qdl_table(cplx u, cplx v, const QRoot& root) {
  if (v == cplx(0.0)) fail(ErrorKind::ZeroV, "v = 0 in QDL");
  const int n = root.n();
  std::vector<cplx> t(static_cast<std::size_t>(n) + 1);
  t[0] = 1.0;
  const cplx vinv = 1.0 / v;
  for (int j = 1; j <= n; ++j) {
    t[static_cast<std::size_t>(j)] = t[static_cast<std::size_t>(j) - 1] * (1.0 + u * root.pow(-2LL * j)) * vinv;
  }
  return t;
}

double dq_log_modulus_root(cplx u, cplx v, const QRoot& root) {
  if (v == cplx(0.0)) fail(ErrorKind::ZeroV, "v = 0 in D^q");
  const int n = root.n();
  const double scale = 1.0 + std::abs(u);
  const double log_v = std::log(std::abs(v));
  double running = 0.0;
  double total = 0.0;
  for (int j = 1; j <= n; ++j) {
    const double f = std::abs(1.0 + u * root.pow(-2LL * j));
    if (f < 1e-14 * scale) fail(ErrorKind::SingularU, "u^n = -1");
    running += std::log(f);
    total += running - j * log_v;
  }
  return total / n;
}

double dq_modulus_root(cplx u, cplx v, const QRoot& root) {
  return std::exp(dq_log_modulus_root(u, v, root));
}

double dq_limit_modulus(cplx A, cplx A_hat, int n_mod_4) {
  if (n_mod_4 != 1 && n_mod_4 != 3) fail(ErrorKind::DomainError, "n mod 4 must be 1 or 3");
  auto f = [n_mod_4](cplx z) { return n_mod_4 == 1 ? std::cosh(z) : std::sinh(z); };
  const cplx ipi = kI * kPi;
  const cplx num = f((A - ipi) / 4.0) * f((A_hat - ipi) / 4.0);
  const cplx den = f((A + ipi) / 4.0) * f((A_hat + ipi) / 4.0);
  if (std::abs(den) < 1e-300) fail(ErrorKind::DomainError, "vanishing denominator in D^q limit");
  return std::pow(2.0, -(A.imag() + A_hat.imag()) / (4.0 * kPi)) * std::pow(std::abs(num / den), 0.25);
}

}  // namespace bwy
