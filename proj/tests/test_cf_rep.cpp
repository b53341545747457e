#include <random>

#include <gtest/gtest.h>

#include "bwy/cf_rep.hpp"
#include "bwy/error.hpp"
#include "oracles.hpp"

using namespace bwy;

namespace {

RepParams random_params(int n, std::mt19937& rng, bool unit) {
  RepParams p;
  p.root = QRoot(n);
  p.x = unit ? oracle::random_unit(rng) : oracle::random_nonzero(rng);
  p.y = unit ? oracle::random_unit(rng) : oracle::random_nonzero(rng);
  for (auto& pj : p.p) pj = oracle::random_nonzero(rng);
  p.h = std::sqrt(p.p[0] * p.p[1] * p.p[2] * p.p[3]);
  return p;
}

double rel(const CMatrix& a, const CMatrix& b) { return norm_inf(a - b) / norm_inf(b); }

}  // namespace

TEST(CfRep, TrivialParamsN3) {
  RepParams p;
  const GeneratorMatrices g = build_standard_rep(p);
  const cplx q = p.root.q();
  CMatrix expect = CMatrix::Zero(3, 3);
  expect(0, 0) = q * q;
  expect(1, 1) = std::pow(q, 4);
  expect(2, 2) = 1.0;
  EXPECT_LE(norm_inf(g[1] - expect), 1e-14);
  EXPECT_LE(norm_inf(g[1] * g[1] * g[1] - CMatrix::Identity(3, 3)), 1e-14);
  EXPECT_LE(norm_inf(std::conj(q) * g[1] * g[2] * g[3] - CMatrix::Identity(3, 3)), 1e-14);
}

TEST(CfRep, StructureMatchesBasisAction) {
  std::mt19937 rng(10);
  const RepParams p = random_params(5, rng, false);
  const GeneratorMatrices g = build_standard_rep(p);
  const QRoot& r = p.root;
  for (int i = 1; i <= 5; ++i) {
    const int s = i - 1;
    EXPECT_NEAR(std::abs(g[2]((s + 1) % 5, s) - p.y * r.pow(-i)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(g[3]((s + 4) % 5, s) - p.p[0] / (p.x * p.y) * r.pow(-i)), 0.0, 1e-13);
    EXPECT_NEAR(std::abs(g[6]((s + 4) % 5, s) - r.pow(-i) / (p.x * p.y) * p.h / p.p[3]), 0.0, 1e-13);
  }
  for (int k = 0; k < 6; ++k) {
    EXPECT_LE(norm_inf(g.gen[k] * g.inv[k] - CMatrix::Identity(5, 5)), 1e-13);
  }
}

TEST(CfRep, NthPowersAreScalar) {
  std::mt19937 rng(11);
  for (int n : {3, 5, 7}) {
    const RepParams p = random_params(n, rng, false);
    const GeneratorMatrices g = build_standard_rep(p);
    CMatrix m1 = CMatrix::Identity(n, n);
    CMatrix m2 = CMatrix::Identity(n, n);
    for (int k = 0; k < n; ++k) {
      m1 = m1 * g[1];
      m2 = m2 * g[2];
    }
    EXPECT_LE(rel(m1, std::pow(p.x, n) * CMatrix::Identity(n, n)), 1e-12);
    EXPECT_LE(rel(m2, std::pow(p.y, n) * CMatrix::Identity(n, n)), 1e-12);
  }
}

TEST(CfRep, RelationsCentralAndDependent) {
  std::mt19937 rng(12);
  for (int n = 3; n <= 15; n += 2) {
    for (bool unit : {true, false}) {
      const RepParams p = random_params(n, rng, unit);
      const GeneratorMatrices g = build_standard_rep(p);
      EXPECT_LE(check_relations(g, p.root), 1e-12);
      for (double r : central_residuals(g, p)) EXPECT_LE(r, 1e-11);
      for (double r : dependent_edge_residuals(g, p)) EXPECT_LE(r, 1e-11);
    }
  }
}

TEST(CfRep, RelationCheckIsSensitive) {
  std::mt19937 rng(13);
  const RepParams p = random_params(5, rng, true);
  GeneratorMatrices g = build_standard_rep(p);
  g.gen[1] += 1e-3 * CMatrix::Ones(5, 5);
  EXPECT_GE(check_relations(g, p.root), 1e-4);
}

TEST(CfRep, IsoImages) {
  std::mt19937 rng(14);
  const RepParams p = random_params(5, rng, false);
  const GeneratorMatrices g = build_standard_rep(p);
  const GeneratorMatrices l = apply_iso(g, Letter::L, p.root);
  const GeneratorMatrices r = apply_iso(g, Letter::R, p.root);
  EXPECT_LE(rel(l[1], g.inv[1]), 1e-14);
  EXPECT_LE(rel(l[4], g.inv[4]), 1e-14);
  EXPECT_LE(rel(r[1], g.inv[2]), 1e-14);
  EXPECT_LE(rel(r[4], g.inv[5]), 1e-14);
  const CMatrix id = CMatrix::Identity(5, 5);
  const cplx q = p.root.q();
  EXPECT_LE(rel(l[2], (id + q * g[2]) * (id + q * g[5]) * g[4]), 1e-14);
  for (int k = 0; k < 6; ++k) {
    EXPECT_LE(norm_inf(l.gen[k] * l.inv[k] - id), 1e-10);
    EXPECT_LE(norm_inf(r.gen[k] * r.inv[k] - id), 1e-10);
  }
}

TEST(CfRep, IsoPreservesRelations) {
  RepParams trivial;
  const GeneratorMatrices g = build_standard_rep(trivial);
  EXPECT_LE(check_relations(apply_iso(g, Letter::L, trivial.root), trivial.root), 1e-11);
  EXPECT_LE(check_relations(apply_iso(g, Letter::R, trivial.root), trivial.root), 1e-11);
  std::mt19937 rng(15);
  for (int n : {5, 7, 9}) {
    const RepParams p = random_params(n, rng, false);
    const GeneratorMatrices h = build_standard_rep(p);
    EXPECT_LE(check_relations(apply_iso(h, Letter::L, p.root), p.root), 1e-10);
    EXPECT_LE(check_relations(apply_iso(h, Letter::R, p.root), p.root), 1e-10);
  }
}

TEST(CfRep, IsoSingularFactor) {
  RepParams p;
  p.root = QRoot(3);
  // y chosen so that q y q^{-i} = -1 for i = 1: 1 + q X2 is singular.
  p.y = -1.0;
  const GeneratorMatrices g = build_standard_rep(p);
  try {
    apply_iso(g, Letter::L, p.root);
    FAIL() << "expected SingularFactor";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularFactor);
  }
}

TEST(CfRep, TransportExamples) {
  std::mt19937 rng(16);
  RepParams p;
  p.root = QRoot(5);
  p.x = oracle::random_nonzero(rng);
  p.y = oracle::random_nonzero(rng);
  const Transported l = transport_params(p, Letter::L);
  EXPECT_NEAR(std::abs(l.next.x - 1.0 / p.y), 0.0, 1e-14);
  for (const cplx& pj : l.next.p) EXPECT_EQ(pj, cplx(1.0));
  const Transported r = transport_params(p, Letter::R);
  EXPECT_NEAR(std::abs(r.next.x - p.x * p.y), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(r.next.y - r.v * r.v_hat * p.y), 0.0, 1e-14);

  const RepParams w = random_params(7, rng, false);
  for (Letter m : {Letter::L, Letter::R}) {
    const Transported t = transport_params(w, m);
    EXPECT_EQ(t.next.p[2], w.p[2]);
    EXPECT_EQ(t.next.h, w.h);
    EXPECT_LE(std::abs(std::pow(t.v, 7) - (1.0 + std::pow(t.u, 7))), 1e-12 * std::abs(std::pow(t.v, 7)));
    EXPECT_LE(std::abs(std::pow(t.v_hat, 7) - (1.0 + std::pow(t.u_hat, 7))),
              1e-12 * std::abs(std::pow(t.v_hat, 7)));
  }
  const Transported tl = transport_params(w, Letter::L);
  EXPECT_EQ(tl.next.p[0], w.p[3]);
  EXPECT_EQ(tl.next.p[3], w.p[0]);
  const Transported tr = transport_params(w, Letter::R);
  EXPECT_EQ(tr.next.p[0], w.p[1]);
  EXPECT_EQ(tr.next.p[1], w.p[0]);
}

TEST(CfRep, TransportDegenerate) {
  RepParams p;
  p.root = QRoot(5);
  p.y = std::polar(1.0, kPi / 5);
  try {
    transport_params(p, Letter::L);
    FAIL() << "expected DegenerateWeight";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateWeight);
  }
}
