#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "degenwave/gamma.hpp"
#include "helpers.hpp"

using namespace degenwave;

namespace {

Mat4c anticommutator(const Mat4c& a, const Mat4c& b) { return a * b + b * a; }

}  // namespace

TEST_CASE("Clifford anticommutation is exact") {
  const GammaSet& gm = gammas();
  const double eta[4] = {1.0, -1.0, -1.0, -1.0};
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      Mat4c want = Mat4c::zero();
      if (mu == nu) want = cplx(2.0 * eta[mu], 0.0) * Mat4c::identity();
      CHECK((anticommutator(gm[mu], gm[nu]) - want).max_abs() == 0.0);
    }
  }
  // spot checks
  CHECK((gm.g0 * gm.g0 - Mat4c::identity()).max_abs() == 0.0);
  CHECK((gm.g1 * gm.g1 + Mat4c::identity()).max_abs() == 0.0);
  CHECK(anticommutator(gm.g0, gm.g1).max_abs() == 0.0);
}

TEST_CASE("degeneracy operator has the expected block structure") {
  const GammaSet& gm = gammas();
  // g0 + i g1 g2 g3 = [[I, I], [-I, -I]] in 2x2 blocks
  Mat4c want;
  const double rows[4][4] = {
      {1, 0, 1, 0}, {0, 1, 0, 1}, {-1, 0, -1, 0}, {0, -1, 0, -1}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) want(i, j) = cplx(rows[i][j], 0.0);
  CHECK((gm.deg - want).max_abs() == 0.0);
}

TEST_CASE("degeneracy operator squares to zero, not to the identity") {
  const GammaSet& gm = gammas();
  const Mat4c sq = gm.deg * gm.deg;
  CHECK(sq.max_abs() == 0.0);
  // consequence of deg = g0 (I + g5) with g5 anticommuting with g0; holds in
  // any representation, so no nonzero multiple of I can appear
  CHECK((sq - Mat4c::identity()).max_abs() == 1.0);
}

TEST_CASE("mat_apply basics") {
  Spinor4 v;
  v[0] = {1.0, 0.0};
  v[1] = {0.5, -2.0};
  v[2] = {0.0, 1.0};
  v[3] = {-3.0, 0.25};

  const Spinor4 id = Mat4c::identity() * v;
  for (int i = 0; i < 4; ++i) CHECK(id[i] == v[i]);

  const Spinor4 zero = Mat4c::zero() * v;
  for (int i = 0; i < 4; ++i) CHECK(zero[i] == cplx(0.0, 0.0));

  Spinor4 e0;
  e0[0] = {1.0, 0.0};
  const Spinor4 g0e0 = gammas().g0 * e0;
  CHECK(g0e0[0] == cplx(1.0, 0.0));
  CHECK(g0e0[1] == cplx(0.0, 0.0));
  CHECK(g0e0[2] == cplx(0.0, 0.0));
  CHECK(g0e0[3] == cplx(0.0, 0.0));
}

TEST_CASE("bilinear forms") {
  Spinor4 e0;
  e0[0] = {1.0, 0.0};
  CHECK(bilinear_dagger(Mat4c::identity(), e0) == cplx(1.0, 0.0));

  Spinor4 ei;
  ei[1] = {0.0, 1.0};
  CHECK(bilinear_dagger(Mat4c::identity(), ei) == cplx(1.0, 0.0));

  Spinor4 v1i;  // (1, i, 0, 0): 1 + i^2 = 0 under the transpose form
  v1i[0] = {1.0, 0.0};
  v1i[1] = {0.0, 1.0};
  CHECK(bilinear_transpose(Mat4c::identity(), v1i) == cplx(0.0, 0.0));
  CHECK(bilinear_transpose(Mat4c::identity(), e0) == cplx(1.0, 0.0));
}

TEST_CASE("degeneracy bilinears on the solution family") {
  using namespace dwtest;
  const ValidatedParams p = p0();
  const GammaSet& gm = gammas();
  DetRng rng(11);
  for (int i = 0; i < 100; ++i) {
    const Event e = random_event(rng);
    const Spinor4 psi = spinor(p, ScalarField{}, e);
    const double n2 = psi.norm() * psi.norm();
    CHECK(std::abs(bilinear_dagger(gm.deg, psi)) < 1e-12 * n2);
    CHECK(std::abs(bilinear_transpose(gm.g2, psi)) > 0.05 * n2);
  }
  // |psi^T g2 psi| = 2 |c1|^2 |sin(a-b)| = sqrt(2) at the canonical point
  const Spinor4 psi = spinor(p, ScalarField{}, Event{});
  CHECK(std::abs(bilinear_transpose(gm.g2, psi)) ==
        doctest::Approx(1.4142135623730951).epsilon(1e-14));
}

TEST_CASE("dagger bilinear is real and nonnegative for the identity") {
  using namespace dwtest;
  DetRng rng(12);
  for (int i = 0; i < 200; ++i) {
    Spinor4 v;
    for (int k = 0; k < 4; ++k) v[k] = {rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    const cplx n = bilinear_dagger(Mat4c::identity(), v);
    CHECK(n.imag() == 0.0);
    CHECK(n.real() >= 0.0);
  }
}

TEST_CASE("dagger bilinear is real for Hermitian spin products") {
  using namespace dwtest;
  const GammaSet& gm = gammas();
  const cplx i_unit{0.0, 1.0};
  const Mat4c herm[3] = {i_unit * gm.g2g3, i_unit * gm.g3g1, i_unit * gm.g1g2};
  DetRng rng(13);
  for (int i = 0; i < 100; ++i) {
    Spinor4 v;
    for (int k = 0; k < 4; ++k) v[k] = {rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    const double scale = v.norm() * v.norm();
    for (const Mat4c& m : herm) {
      CHECK(std::abs(bilinear_dagger(m, v).imag()) < 1e-14 * scale);
    }
  }
}
