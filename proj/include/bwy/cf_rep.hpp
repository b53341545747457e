#pragma once

#include <array>

#include "bwy/dilog.hpp"
#include "bwy/types.hpp"
#include "bwy/word.hpp"

namespace bwy {

struct RepParams {
  cplx x{1.0};
  cplx y{1.0};
  std::array<cplx, 4> p{cplx{1.0}, cplx{1.0}, cplx{1.0}, cplx{1.0}};
  cplx h{1.0};
  QRoot root{3};

  int n() const { return root.n(); }
};

// gen[g-1] = rho(X_g), inv[g-1] = rho(X_g)^{-1}. Basis label i = 1..n sits in slot i-1.
struct GeneratorMatrices {
  std::array<CMatrix, 6> gen;
  std::array<CMatrix, 6> inv;

  const CMatrix& operator[](int g) const { return gen[static_cast<std::size_t>(g - 1)]; }
};

struct Relation {
  int i;
  int j;
  int sigma;  // X_i X_j = q^{2 sigma} X_j X_i
};

const std::array<Relation, 12>& cf_relations();

GeneratorMatrices build_standard_rep(const RepParams& params);

// Max over the twelve relations of |M_i M_j - q^{2s} M_j M_i| / |M_i M_j|.
double check_relations(const GeneratorMatrices& g, const QRoot& root);

// P1, P2, P3, P4, H against their scalars.
std::array<double, 5> central_residuals(const GeneratorMatrices& g, const RepParams& params);

// X3, X4, X5, X6 rebuilt from X1, X2 and the central scalars.
std::array<double, 4> dependent_edge_residuals(const GeneratorMatrices& g, const RepParams& params);

// Images of the six generators under the left or right isomorphism.
GeneratorMatrices apply_iso(const GeneratorMatrices& g, Letter move, const QRoot& root);

struct Transported {
  RepParams next;
  cplx u, v, u_hat, v_hat;
};

Transported transport_params(const RepParams& params, Letter move);

}  // namespace bwy
