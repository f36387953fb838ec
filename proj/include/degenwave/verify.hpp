#ifndef DEGENWAVE_VERIFY_HPP
#define DEGENWAVE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "degenwave/electromagnetics.hpp"
#include "degenwave/scenario.hpp"
#include "degenwave/solutions.hpp"

// Certification engine: plugs constructed spinors and potentials into the
// Dirac equation and checks every closed-form identity of the solution
// family, emitting a structured report.

namespace degenwave {

// Spin projection expectations in units of |c1|^2 (hbar = 1).
struct SpinExpectation {
  double sx = 0.0, sy = 0.0, sz = 0.0;
};

// Bilinear path: S_k = (i/2) psi^dag (gamma gamma) psi.
SpinExpectation spin_expectation(const Spinor4& psi);

// Closed path: (|c1|^2/2) ((sin2a+sin2b) cos d, (sin2a+sin2b) sin d, cos2a+cos2b).
SpinExpectation spin_closed(const ValidatedParams& p, const Event& e);

struct DegeneracyBilinears {
  cplx c_gamma;   // psi^dag (g0 + i g1 g2 g3) psi; vanishes on the family
  cplx c_charge;  // psi^T g2 psi; bounded away from zero on the family
};

DegeneracyBilinears degeneracy_check(const Spinor4& psi);

enum class Colinearity { Parallel, Antiparallel };

struct SyncResult {
  double angle_deviation;  // planar angle between (S_x,S_y) and (B_x,B_y), mod pi
  Colinearity colinearity;
};

// Throws DegenerateDirectionError when either planar vector is below 1e-12.
SyncResult sync_check(const ValidatedParams& p, const Event& e);

enum class DerivativeMode { Analytic, FiniteDifference };

struct ResidualResult {
  Spinor4 residual;
  double norm;
};

// R = i gamma^mu d_mu psi + b_mu gamma^mu psi - (m + mass_delta) psi for an
// arbitrary potential value b at the event.  mass_delta shifts only the mass
// term (fault-injection hook; the residual is exactly linear in it).
ResidualResult dirac_residual_with(const ValidatedParams& p, const ScalarField& h,
                                   const FourPotential& b, const Event& e, DerivativeMode mode,
                                   double fd_step = 1e-4, double mass_delta = 0.0);

// Same with b = potential_family(p, h, g, s, e).
ResidualResult dirac_residual(const ValidatedParams& p, const ScalarField& h,
                              const ScalarField& g, const ScalarField& s, const Event& e,
                              DerivativeMode mode, double fd_step = 1e-4,
                              double mass_delta = 0.0);

// Truncation-plus-rounding budgets for central differences of the spinor,
// from exact third-derivative bounds of the phase.  Used as tolerances for
// the finite-difference cross checks.
double fd_gradient_budget(const ValidatedParams& p, const ScalarField& h, double step);
double fd_residual_budget(const ValidatedParams& p, const ScalarField& h, double step);

struct CheckRecord {
  std::string name;
  long samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string notes;
};

struct VerificationReport {
  int schema_version = 1;
  Scenario scenario;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;

  int total() const { return static_cast<int>(checks.size()); }
  int passed() const;
  int failed() const { return total() - passed(); }
  bool all_pass() const { return failed() == 0; }

  // Deterministic JSON payload: identical (scenario, seed, tolerances) give
  // byte-identical output.
  std::string to_json() const;
};

// Runs the full check suite for one scenario.  Individual check failures are
// recorded, never thrown; scenario-level problems (invalid parameters) throw
// before any check runs.
VerificationReport run_suite(const Scenario& sc);

}  // namespace degenwave

#endif
