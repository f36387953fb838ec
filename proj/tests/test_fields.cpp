#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "degenwave/fields.hpp"
#include "helpers.hpp"

using namespace degenwave;
using dwtest::kPi;

TEST_CASE("evaluation of the primitives") {
  const Event e{2.0, 5.0, 5.0, 5.0};
  CHECK(ScalarField::constant(3.0)(e) == 3.0);
  CHECK(ScalarField::linear(1.0, 0.0, 0.0, 0.0)(e) == 2.0);
  const ScalarField s = ScalarField::sinusoid(1.0, 0.0, 0.0, 0.0, 0.0, kPi / 2.0);
  CHECK(s(Event{0.0, 1.0, 2.0, 3.0}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(ScalarField{}(e) == 0.0);
}

TEST_CASE("analytic gradients of the primitives") {
  const Event e{0.7, -1.2, 3.0, 0.1};
  const Grad4 gc = ScalarField::constant(5.0).gradient(e);
  CHECK(gc.dt == 0.0);
  CHECK(gc.dx == 0.0);
  CHECK(gc.dy == 0.0);
  CHECK(gc.dz == 0.0);

  const Grad4 gl = ScalarField::linear(1.0, 2.0, 3.0, 4.0).gradient(e);
  CHECK(gl.dt == 1.0);
  CHECK(gl.dx == 2.0);
  CHECK(gl.dy == 3.0);
  CHECK(gl.dz == 4.0);

  const Grad4 gs = ScalarField::sinusoid(1.0, 1.0, 0.0, 0.0, 0.0, 0.0)
                       .gradient(Event{0.0, 2.0, 2.0, 2.0});
  CHECK(gs.dt == doctest::Approx(1.0).epsilon(1e-15));  // cos(0)
}

TEST_CASE("central differences on the primitives") {
  const Event e{0.3, 0.4, -0.5, 0.6};
  const Grad4 g = fd_grad(ScalarField::linear(1.0, 2.0, 3.0, 4.0), e, 1e-3);
  CHECK(g.dt == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(g.dx == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(g.dy == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(g.dz == doctest::Approx(4.0).epsilon(1e-12));

  const Grad4 gs = fd_grad(ScalarField::sinusoid(1.0, 1.0, 0.0, 0.0, 0.0, 0.0),
                           Event{0.0, 0.0, 0.0, 0.0}, 1e-4);
  CHECK(std::abs(gs.dt - 1.0) < 1e-8);

  const Grad4 gz = fd_grad(ScalarField::constant(7.0), e, 0.37);
  CHECK(gz.dt == 0.0);
  CHECK(gz.dx == 0.0);
  CHECK(gz.dy == 0.0);
  CHECK(gz.dz == 0.0);

  CHECK_THROWS_AS(fd_grad(ScalarField::constant(1.0), e, 0.0), std::invalid_argument);
}

TEST_CASE("gradient oracle: second-order convergence over random compositions") {
  using namespace dwtest;
  DetRng rng(21);
  double worst3 = 0.0, worst4 = 0.0;
  for (int i = 0; i < 1000; ++i) {
    // always include a sinusoid so the third derivative is nonzero
    ScalarField f = random_sinusoid(rng);
    f += random_field(rng, 2);
    const Event e = random_event(rng);
    const Grad4 exact = f.gradient(e);
    for (const double step : {1e-3, 1e-4}) {
      const Grad4 fd = fd_grad(f, e, step);
      double err = 0.0;
      for (int mu = 0; mu < 4; ++mu) err = std::max(err, std::abs(exact[mu] - fd[mu]));
      // C step^2 with C from the exact third-derivative bound
      double c = 0.0;
      for (int mu = 0; mu < 4; ++mu) c = std::max(c, f.partial_bound(mu, 3));
      CHECK(err <= std::max(c, 1.0) / 6.0 * step * step + 1e-11);
      if (step == 1e-3) worst3 = std::max(worst3, err);
      if (step == 1e-4) worst4 = std::max(worst4, err);
    }
  }
  // shrinking the step by 10 shrinks the worst error by ~100
  const double ratio = worst3 / worst4;
  CHECK(ratio > 50.0);
  CHECK(ratio < 200.0);
}

TEST_CASE("gradient of a sum is the sum of gradients, exactly") {
  using namespace dwtest;
  DetRng rng(22);
  for (int i = 0; i < 200; ++i) {
    const ScalarField a = random_field(rng, 2);
    const ScalarField b = random_field(rng, 2);
    const ScalarField sum = a + b;
    const Event e = random_event(rng);
    const Grad4 gs = sum.gradient(e);
    const Grad4 ga = a.gradient(e);
    const Grad4 gb = b.gradient(e);
    // term iteration order is identical, so this holds bitwise
    for (int mu = 0; mu < 4; ++mu) CHECK(gs[mu] == ga[mu] + gb[mu]);
    CHECK(sum(e) == a(e) + b(e));
  }
}

TEST_CASE("exact derivative fields match the gradient") {
  using namespace dwtest;
  DetRng rng(23);
  for (int i = 0; i < 200; ++i) {
    const ScalarField f = random_field(rng, 3);
    const Event e = random_event(rng);
    const Grad4 g = f.gradient(e);
    for (int mu = 0; mu < 4; ++mu) {
      const double v = f.partial(mu)(e);
      CHECK(std::abs(v - g[mu]) < 1e-14 * (1.0 + std::abs(g[mu])));
    }
  }
}

TEST_CASE("derivative bounds dominate the actual derivatives") {
  using namespace dwtest;
  DetRng rng(24);
  for (int i = 0; i < 200; ++i) {
    const ScalarField f = random_field(rng, 3);
    const Event e = random_event(rng);
    const Grad4 g = f.gradient(e);
    for (int mu = 0; mu < 4; ++mu) {
      CHECK(std::abs(g[mu]) <= f.partial_bound(mu, 1) + 1e-12);
    }
  }
}

TEST_CASE("scalar multiplication scales values and gradients") {
  using namespace dwtest;
  DetRng rng(25);
  const ScalarField f = random_field(rng, 3);
  const ScalarField f3 = -2.5 * f;
  for (int i = 0; i < 50; ++i) {
    const Event e = random_event(rng);
    CHECK(f3(e) == doctest::Approx(-2.5 * f(e)).epsilon(1e-14));
  }
}
