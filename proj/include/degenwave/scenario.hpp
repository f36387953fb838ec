#ifndef DEGENWAVE_SCENARIO_HPP
#define DEGENWAVE_SCENARIO_HPP

#include <cstdint>
#include <string>

#include "degenwave/fields.hpp"
#include "degenwave/solutions.hpp"

// Scenario files: flat "key = value" text with dotted section keys.
//
//   params.alpha = 1.0471975511965976
//   params.beta  = 0.26179938779914941
//   params.mass  = 1
//   h.kind = sinusoid
//   h.A = 0.5
//   h.k = [1, 0, 0, 0.25]
//   h.phase = 0
//   g.kind = sum
//   g.n = 2
//   g.0.kind = constant
//   g.0.value = 1
//   g.1.kind = linear
//   g.1.k = [0, 1, 0, 0]
//
// Unknown keys are rejected with a diagnostic naming the key.  Sums are
// capped at 8 primitives.

namespace degenwave {

struct GridSpec {
  double t_min = 0.0, t_max = 0.0;
  int n_t = 1;
  double z_min = 0.0, z_max = 0.0;
  int n_z = 1;
  double x = 0.0, y = 0.0;
};

struct Tolerances {
  double algebraic = 1e-10;     // exact algebraic identities in double precision
  double exact = 1e-12;         // identities expected at rounding level
  double residual = 1e-9;       // analytic Dirac residual, normalized by |psi|
  double fd_rel = 1e-6;         // finite-difference vs closed form, relative
  double fd_step = 1e-4;        // central-difference step
  double angle = 1e-9;          // angular deviation for colinearity
  double rel_identity = 1e-9;   // relative error on closed-form identities
};

struct Scenario {
  DegenerateParams params;
  ScalarField h, g, s;
  GridSpec grid;
  std::uint64_t seed = 42;
  long sample_events = 1000;
  Tolerances tol;
  double mass_corruption = 0.0;  // residual-only mass shift (test hook)
  std::string report_path;
  std::string csv_path;
};

// Parse and validate; throws ScenarioError with the offending key in the
// message.  Parameter validation failures surface as ScenarioError naming
// params.alpha/params.beta.
Scenario parse_scenario_text(const std::string& text);
Scenario parse_scenario_file(const std::string& path);

// Canonical text form; parse(serialize(s)) reproduces s exactly.
std::string serialize_scenario(const Scenario& s);

// %.17g formatting used for all scenario/CSV numeric output.
std::string format_full(double v);

}  // namespace degenwave

#endif
