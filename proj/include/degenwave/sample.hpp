#ifndef DEGENWAVE_SAMPLE_HPP
#define DEGENWAVE_SAMPLE_HPP

#include <string>
#include <vector>

#include "degenwave/scenario.hpp"

// Grid sampling of one scenario: phase, potential, fields, spin and
// residual per grid point, exported as CSV.

namespace degenwave {

struct SampleRow {
  double t, x, y, z;
  double d;
  double a0, a1, a2, a3;          // potential_family components
  double ex, ey, ez, bx, by, bz;  // closed-form total fields
  double sx_spin, sy_spin, sz_spin;
  double sz_poynting;             // (1/4pi)(E x B)_z of the total fields
  double residual_norm;           // analytic Dirac residual at the point
};

// Row-major grid: t outer, z inner; x and y fixed by the scenario.
std::vector<SampleRow> sample_grid(const Scenario& sc);

// Fixed header; numbers at full double precision (17 significant digits).
extern const char* const kSampleCsvHeader;

std::string sample_csv(const Scenario& sc);

}  // namespace degenwave

#endif
