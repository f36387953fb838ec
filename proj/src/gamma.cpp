#include "degenwave/gamma.hpp"

namespace degenwave {

namespace {

constexpr cplx one{1.0, 0.0};
constexpr cplx im{0.0, 1.0};

GammaSet build() {
  GammaSet g;

  // g0 = diag(1, 1, -1, -1)
  g.g0(0, 0) = one;
  g.g0(1, 1) = one;
  g.g0(2, 2) = -one;
  g.g0(3, 3) = -one;

  // sigma_1 = [[0,1],[1,0]]
  g.g1(0, 3) = one;
  g.g1(1, 2) = one;
  g.g1(2, 1) = -one;
  g.g1(3, 0) = -one;

  // sigma_2 = [[0,-i],[i,0]]
  g.g2(0, 3) = -im;
  g.g2(1, 2) = im;
  g.g2(2, 1) = im;
  g.g2(3, 0) = -im;

  // sigma_3 = [[1,0],[0,-1]]
  g.g3(0, 2) = one;
  g.g3(1, 3) = -one;
  g.g3(2, 0) = -one;
  g.g3(3, 1) = one;

  g.deg = g.g0 + im * (g.g1 * g.g2 * g.g3);

  g.g0g1g2 = g.g0 * g.g1 * g.g2;
  g.g0g2g3 = g.g0 * g.g2 * g.g3;
  g.g2g3 = g.g2 * g.g3;
  g.g3g1 = g.g3 * g.g1;
  g.g1g2 = g.g1 * g.g2;

  return g;
}

}  // namespace

const GammaSet& gammas() {
  static const GammaSet g = build();
  return g;
}

cplx bilinear_dagger(const Mat4c& m, const Spinor4& psi) {
  const Spinor4 mp = m * psi;
  cplx s(0.0, 0.0);
  for (int i = 0; i < 4; ++i) s += std::conj(psi[i]) * mp[i];
  return s;
}

cplx bilinear_transpose(const Mat4c& m, const Spinor4& psi) {
  const Spinor4 mp = m * psi;
  cplx s(0.0, 0.0);
  for (int i = 0; i < 4; ++i) s += psi[i] * mp[i];
  return s;
}

}  // namespace degenwave
