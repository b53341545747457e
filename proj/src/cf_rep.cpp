#include "bwy/cf_rep.hpp"

#include <cmath>

#include "bwy/error.hpp"

namespace bwy {
namespace {

// Diagonal: w_i -> c q^{2i} w_i.
CMatrix diag_gen(const QRoot& r, cplx c, int sign) {
  const int n = r.n();
  CMatrix m = CMatrix::Zero(n, n);
  for (int s = 0; s < n; ++s) m(s, s) = sign > 0 ? c * r.pow(2LL * (s + 1)) : r.pow(-2LL * (s + 1)) / c;
  return m;
}

// Raising: w_i -> c q^{-i} w_{i+1}; inverse w_{i+1} -> q^{i}/c w_i.
CMatrix raise_gen(const QRoot& r, cplx c, bool inverse) {
  const int n = r.n();
  CMatrix m = CMatrix::Zero(n, n);
  for (int s = 0; s < n; ++s) {
    const long long i = s + 1;
    const int up = (s + 1) % n;
    if (inverse) {
      m(s, up) = r.pow(i) / c;
    } else {
      m(up, s) = c * r.pow(-i);
    }
  }
  return m;
}

// Lowering: w_i -> c q^{-i} w_{i-1}; inverse w_{i-1} -> q^{i}/c w_i.
CMatrix lower_gen(const QRoot& r, cplx c, bool inverse) {
  const int n = r.n();
  CMatrix m = CMatrix::Zero(n, n);
  for (int s = 0; s < n; ++s) {
    const long long i = s + 1;
    const int down = (s + n - 1) % n;
    if (inverse) {
      m(s, down) = r.pow(i) / c;
    } else {
      m(down, s) = c * r.pow(-i);
    }
  }
  return m;
}

CMatrix checked_inverse(const CMatrix& m, const char* what) {
  Eigen::PartialPivLU<CMatrix> lu(m);
  const double rc = lu.rcond();
  if (!(rc > 1e-12)) fail(ErrorKind::SingularFactor, std::string("ill-conditioned factor ") + what);
  return lu.inverse();
}

bool near_minus_one(cplx z) { return std::abs(1.0 + z) < 1e-12 * (1.0 + std::abs(z)); }

}  // namespace

const std::array<Relation, 12>& cf_relations() {
  static const std::array<Relation, 12> rel{{{1, 2, 1},
                                             {1, 3, -1},
                                             {1, 5, 1},
                                             {1, 6, -1},
                                             {2, 3, 1},
                                             {2, 4, -1},
                                             {2, 6, 1},
                                             {3, 4, 1},
                                             {3, 5, -1},
                                             {4, 5, 1},
                                             {4, 6, -1},
                                             {5, 6, 1}}};
  return rel;
}

GeneratorMatrices build_standard_rep(const RepParams& prm) {
  const QRoot& r = prm.root;
  const auto& p = prm.p;
  const cplx x = prm.x;
  const cplx y = prm.y;
  const cplx h = prm.h;
  const cplx c3 = p[0] / (x * y);
  const cplx c4 = x * p[3] * p[1] / h;
  const cplx c5 = y * h / (p[0] * p[1]);
  const cplx c6 = h / (p[3] * x * y);

  GeneratorMatrices g;
  g.gen[0] = diag_gen(r, x, 1);
  g.inv[0] = diag_gen(r, x, -1);
  g.gen[1] = raise_gen(r, y, false);
  g.inv[1] = raise_gen(r, y, true);
  g.gen[2] = lower_gen(r, c3, false);
  g.inv[2] = lower_gen(r, c3, true);
  g.gen[3] = diag_gen(r, c4, 1);
  g.inv[3] = diag_gen(r, c4, -1);
  g.gen[4] = raise_gen(r, c5, false);
  g.inv[4] = raise_gen(r, c5, true);
  g.gen[5] = lower_gen(r, c6, false);
  g.inv[5] = lower_gen(r, c6, true);
  return g;
}

double check_relations(const GeneratorMatrices& g, const QRoot& root) {
  double worst = 0.0;
  for (const Relation& rel : cf_relations()) {
    const CMatrix lhs = g[rel.i] * g[rel.j];
    const CMatrix rhs = root.pow(2LL * rel.sigma) * (g[rel.j] * g[rel.i]);
    worst = std::max(worst, norm_inf(lhs - rhs) / norm_inf(lhs));
  }
  return worst;
}

std::array<double, 5> central_residuals(const GeneratorMatrices& g, const RepParams& prm) {
  const QRoot& r = prm.root;
  const int n = r.n();
  const CMatrix id = CMatrix::Identity(n, n);
  auto rel = [&](const CMatrix& m, cplx c) { return norm_inf(m - c * id) / std::abs(c); };
  const CMatrix all = g[1] * g[2] * g[3] * g[4] * g[5] * g[6];
  return {rel(r.pow(-1) * g[1] * g[2] * g[3], prm.p[0]),
          rel(r.pow(1) * g[2] * g[4] * g[6], prm.p[1]),
          rel(r.pow(-1) * g[1] * g[5] * g[6], prm.p[2]),
          rel(r.pow(-1) * g[3] * g[4] * g[5], prm.p[3]),
          rel(r.pow(-2) * all, prm.h)};
}

std::array<double, 4> dependent_edge_residuals(const GeneratorMatrices& g, const RepParams& prm) {
  const QRoot& r = prm.root;
  const auto& p = prm.p;
  const cplx h = prm.h;
  const CMatrix& i1 = g.inv[0];
  const CMatrix& i2 = g.inv[1];
  auto rel = [](const CMatrix& a, const CMatrix& b) { return norm_inf(a - b) / norm_inf(a); };
  return {rel(g[3], r.pow(1) * p[0] * (i2 * i1)),
          rel(g[4], (p[3] * p[1] / h) * g[1]),
          rel(g[5], (h / (p[0] * p[1])) * g[2]),
          rel(g[6], r.pow(1) * (h / p[3]) * (i2 * i1))};
}

GeneratorMatrices apply_iso(const GeneratorMatrices& g, Letter move, const QRoot& root) {
  const int n = root.n();
  const cplx q = root.q();
  const CMatrix id = CMatrix::Identity(n, n);
  // L pairs (X2, X5) and shuffles (X4, X1, X3, X6); R pairs (X3, X6) and shuffles (X2, X5, X4, X1).
  const bool left = move == Letter::L;
  const int a = left ? 2 : 3;
  const int b = left ? 5 : 6;
  const std::array<int, 4> src = left ? std::array<int, 4>{4, 1, 3, 6} : std::array<int, 4>{2, 5, 4, 1};
  auto gi = [&](int k) -> const CMatrix& { return g.gen[static_cast<std::size_t>(k - 1)]; };
  auto ii = [&](int k) -> const CMatrix& { return g.inv[static_cast<std::size_t>(k - 1)]; };

  const CMatrix plus_a = id + q * gi(a);
  const CMatrix plus_b = id + q * gi(b);
  const CMatrix plus_ainv = id + q * ii(a);
  const CMatrix plus_binv = id + q * ii(b);
  const CMatrix inv_plus_a = checked_inverse(plus_a, "1 + qX");
  const CMatrix inv_plus_b = checked_inverse(plus_b, "1 + qX");
  const CMatrix inv_plus_ainv = checked_inverse(plus_ainv, "1 + qX^-1");
  const CMatrix inv_plus_binv = checked_inverse(plus_binv, "1 + qX^-1");

  const CMatrix up = plus_a * plus_b;
  const CMatrix up_inv = inv_plus_b * inv_plus_a;
  const CMatrix down = inv_plus_ainv * inv_plus_binv;
  const CMatrix down_inv = plus_binv * plus_ainv;

  GeneratorMatrices out;
  out.gen[0] = ii(a);
  out.inv[0] = gi(a);
  out.gen[1] = up * gi(src[0]);
  out.inv[1] = ii(src[0]) * up_inv;
  out.gen[2] = down * gi(src[2]);
  out.inv[2] = ii(src[2]) * down_inv;
  out.gen[3] = ii(b);
  out.inv[3] = gi(b);
  out.gen[4] = up * gi(src[1]);
  out.inv[4] = ii(src[1]) * up_inv;
  out.gen[5] = down * gi(src[3]);
  out.inv[5] = ii(src[3]) * down_inv;
  return out;
}

Transported transport_params(const RepParams& prm, Letter move) {
  const QRoot& r = prm.root;
  const int n = r.n();
  const auto& p = prm.p;
  const cplx x = prm.x;
  const cplx y = prm.y;
  const cplx h = prm.h;
  const cplx q = r.q();

  Transported t;
  t.next = prm;
  if (move == Letter::L) {
    t.u = q * y;
    t.u_hat = q * h / (p[0] * p[1]) * y;
  } else {
    t.u = q * p[0] / (x * y);
    t.u_hat = q * h / (p[3] * x * y);
  }
  const cplx un = std::pow(t.u, n);
  const cplx uhn = std::pow(t.u_hat, n);
  if (near_minus_one(un) || near_minus_one(uhn)) {
    fail(ErrorKind::DegenerateWeight, "edge weight hits -1 in transport");
  }
  t.v = std::exp(std::log(1.0 + un) / static_cast<double>(n));
  t.v_hat = std::exp(std::log(1.0 + uhn) / static_cast<double>(n));

  if (move == Letter::L) {
    t.next.x = 1.0 / y;
    t.next.y = t.v * t.v_hat * p[1] * p[3] / h * x;
    t.next.p = {p[3], p[1], p[2], p[0]};
  } else {
    t.next.x = x * y / p[0];
    t.next.y = t.v * t.v_hat * y;
    t.next.p = {p[1], p[0], p[2], p[3]};
  }
  return t;
}

}  // namespace bwy
