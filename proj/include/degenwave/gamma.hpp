#ifndef DEGENWAVE_GAMMA_HPP
#define DEGENWAVE_GAMMA_HPP

#include "degenwave/linalg.hpp"

// Dirac gamma matrices in the standard (Dirac) representation, metric
// signature (+,-,-,-):
//
//   g0 = diag(1, 1, -1, -1),   gk = [[0, sigma_k], [-sigma_k, 0]]
//
// plus the combination deg = g0 + i g1 g2 g3 used by the degeneracy
// conditions.  All entries are exact values in {0, +-1, +-i}.

namespace degenwave {

struct GammaSet {
  Mat4c g0, g1, g2, g3;
  Mat4c deg;  // g0 + i g1 g2 g3; note deg*deg == 0 (rank 2)

  // frequently used products
  Mat4c g0g1g2;  // for the kappa_1 bilinear ratio
  Mat4c g0g2g3;  // for the kappa_3 bilinear ratio
  Mat4c g2g3;    // spin x
  Mat4c g3g1;    // spin y
  Mat4c g1g2;    // spin z

  const Mat4c& operator[](int mu) const {
    switch (mu) {
      case 0: return g0;
      case 1: return g1;
      case 2: return g2;
      case 3: return g3;
      default: throw std::out_of_range("gamma index");
    }
  }
};

// Builds the full set once; thread safe after first call.
const GammaSet& gammas();

// psi^dagger M psi (conjugate transpose on the left)
cplx bilinear_dagger(const Mat4c& m, const Spinor4& psi);

// psi^T M psi (plain transpose, no conjugation)
cplx bilinear_transpose(const Mat4c& m, const Spinor4& psi);

}  // namespace degenwave

#endif
