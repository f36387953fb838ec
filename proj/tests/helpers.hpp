#ifndef DEGENWAVE_TESTS_HELPERS_HPP
#define DEGENWAVE_TESTS_HELPERS_HPP

#include <cmath>
#include <numbers>

#include "degenwave/fields.hpp"
#include "degenwave/solutions.hpp"
#include "degenwave/util.hpp"

// Shared fixtures: the canonical parameter point used across the tests
// (alpha = pi/3, beta = pi/12, m = 1, c1 = 1, q = 1) and bounded random
// sampling of parameters/fields/events.

namespace dwtest {

using namespace degenwave;

inline constexpr double kPi = std::numbers::pi;

inline ValidatedParams p0(cplx c1 = cplx(1.0, 0.0), double mass = 1.0) {
  DegenerateParams p;
  p.alpha = kPi / 3.0;
  p.beta = kPi / 12.0;
  p.mass = mass;
  p.c1 = c1;
  return validate_params(p);
}

inline Event random_event(DetRng& rng, double box = 5.0) {
  return {rng.uniform(-box, box), rng.uniform(-box, box), rng.uniform(-box, box),
          rng.uniform(-box, box)};
}

struct SamplerBounds {
  double min_gap = 0.6;   // |cos 2a - cos 2b|
  double min_cos = 0.15;  // |cos(a+b)|
  double min_sin = 0.15;  // |sin(a-b)|
  double mass_lo = 0.3;
  double mass_hi = 1.0;
};

// Keeps omega_d and the csc/sec prefactors moderate so finite-difference
// truncation stays well inside the stated tolerances.
inline ValidatedParams random_valid_params(DetRng& rng, SamplerBounds b = {}) {
  for (;;) {
    DegenerateParams p;
    p.alpha = rng.uniform(-3.0, 3.0);
    p.beta = rng.uniform(-3.0, 3.0);
    p.mass = rng.uniform(b.mass_lo, b.mass_hi);
    p.c1 = cplx(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
    if (std::abs(p.c1) < 0.3) continue;
    const AngleMargins m = angle_margins(p.alpha, p.beta);
    if (m.cos2_gap < b.min_gap || m.cos_sum < b.min_cos || m.sin_diff < b.min_sin) continue;
    return validate_params(p);
  }
}

// Sum of 1..max_terms primitives with |A|, |k| <= 1.
inline ScalarField random_field(DetRng& rng, int max_terms = 3) {
  ScalarField f;
  const int n = rng.uniform_int(1, max_terms);
  for (int i = 0; i < n; ++i) {
    switch (rng.uniform_int(0, 2)) {
      case 0:
        f += ScalarField::constant(rng.uniform(-2.0, 2.0));
        break;
      case 1:
        f += ScalarField::linear(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                                 rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        break;
      default:
        f += ScalarField::sinusoid(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                                   rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                                   rng.uniform(-1.0, 1.0), rng.uniform(0.0, 2.0 * kPi));
        break;
    }
  }
  return f;
}

inline ScalarField random_sinusoid(DetRng& rng) {
  return ScalarField::sinusoid(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                               rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                               rng.uniform(-1.0, 1.0), rng.uniform(0.0, 2.0 * kPi));
}

}  // namespace dwtest

#endif
