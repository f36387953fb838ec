#ifndef DEGENWAVE_SOLUTIONS_HPP
#define DEGENWAVE_SOLUTIONS_HPP

#include <array>

#include "degenwave/fields.hpp"
#include "degenwave/gamma.hpp"
#include "degenwave/linalg.hpp"

// The degenerate spinor family
//
//   Psi = c1 exp(i h) (cos a, sin a e^{id}, cos b, sin b e^{id})^T
//   d   = 4 m [t - z cos(a+b)] / (cos 2a - cos 2b) = omega_d t - k_d z
//
// together with the 4-potentials that make it solve the Dirac equation,
// the null vector kappa generating the full degeneracy family
// b_mu = a_mu + s kappa_mu, and the zero-potential special cases.
//
// Validity requires cos 2a != cos 2b, cos(a+b) != 0, sin(a-b) != 0;
// all csc/sec evaluations happen only behind validate_params.

namespace degenwave {

struct DegenerateParams {
  double alpha = 0.0;  // radians
  double beta = 0.0;   // radians
  double mass = 1.0;   // natural units, >= 0 (massless allowed)
  cplx c1{1.0, 0.0};   // arbitrary complex amplitude
  double charge = 1.0; // q; potentials are reported charge-scaled (a_mu = q A_mu)
};

// Margins of the three validity constraints, as distances from zero of the
// relevant trig expressions.
struct AngleMargins {
  double cos2_gap;  // |cos 2a - cos 2b|
  double cos_sum;   // |cos(a+b)|
  double sin_diff;  // |sin(a-b)|
};

AngleMargins angle_margins(double alpha, double beta);

inline constexpr double kDefaultParamMargin = 1e-9;

// Witness type: the constructors below only accept parameters that went
// through validate_params.
class ValidatedParams {
 public:
  double alpha() const { return p_.alpha; }
  double beta() const { return p_.beta; }
  double mass() const { return p_.mass; }
  cplx c1() const { return p_.c1; }
  double charge() const { return p_.charge; }
  const DegenerateParams& raw() const { return p_; }

 private:
  friend ValidatedParams validate_params(const DegenerateParams&, double);
  explicit ValidatedParams(const DegenerateParams& p) : p_(p) {}
  DegenerateParams p_;
};

// Throws ParamDegenerateError naming the violated condition when any margin
// falls below eps_param.  Also rejects nonfinite inputs and charge == 0.
ValidatedParams validate_params(const DegenerateParams& p,
                                double eps_param = kDefaultParamMargin);

struct FourPotential {
  double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;

  double operator[](int mu) const {
    switch (mu) {
      case 0: return a0;
      case 1: return a1;
      case 2: return a2;
      default: return a3;
    }
  }
};

inline FourPotential operator+(const FourPotential& a, const FourPotential& b) {
  return {a.a0 + b.a0, a.a1 + b.a1, a.a2 + b.a2, a.a3 + b.a3};
}
inline FourPotential operator-(const FourPotential& a, const FourPotential& b) {
  return {a.a0 - b.a0, a.a1 - b.a1, a.a2 - b.a2, a.a3 - b.a3};
}

// Null direction of the degeneracy family; k0 == 1 by construction and
// k0^2 - k1^2 - k2^2 - k3^2 == 0 up to rounding.
struct KappaVector {
  double k0 = 1.0, k1 = 0.0, k2 = 0.0, k3 = 0.0;

  double operator[](int mu) const {
    switch (mu) {
      case 0: return k0;
      case 1: return k1;
      case 2: return k2;
      default: return k3;
    }
  }
  double minkowski_norm() const { return k0 * k0 - k1 * k1 - k2 * k2 - k3 * k3; }
};

// Plane-phase coefficients of d: d(e) = omega * e.t - wavenumber * e.z.
struct Dispersion {
  double omega;       // 4m / (cos 2a - cos 2b)
  double wavenumber;  // omega * cos(a+b)
};

Dispersion dispersion(const ValidatedParams& p);

// d evaluated as omega t - k z (bit-identical to the Dispersion coefficients).
double phase_d(const ValidatedParams& p, const Event& e);

// Psi at an event for phase field h.
Spinor4 spinor(const ValidatedParams& p, const ScalarField& h, const Event& e);

// Analytic d_mu Psi, mu = 0..3.
std::array<Spinor4, 4> spinor_gradient(const ValidatedParams& p, const ScalarField& h,
                                       const Event& e);

// The two-function potential family (arbitrary h and g).  The time
// component carries the sign fixed by gauge consistency: shifting h by a
// function chi shifts every component by d_mu chi, and the zero-potential
// limit of special_spinor is reproduced exactly.
FourPotential potential_general(const ValidatedParams& p, const ScalarField& h,
                                const ScalarField& g, const Event& e);

// Same family at g = dh/dz; equals potential_general there pointwise.
FourPotential potential_simplified(const ValidatedParams& p, const ScalarField& h,
                                   const Event& e);

// kappa from the closed form (1, -sin(a+b) cos d, -sin(a+b) sin d, -cos(a+b)).
KappaVector kappa(const ValidatedParams& p, const Event& e);

// kappa from bilinear ratios of psi (transpose bilinears over psi^T g2 psi);
// agrees with the closed form for any spinor of the family.
KappaVector kappa_bilinear(const Spinor4& psi);

// b_mu = potential_general + s * kappa componentwise.
FourPotential potential_family(const ValidatedParams& p, const ScalarField& h,
                               const ScalarField& g, const ScalarField& s, const Event& e);

// dh/dt that, together with grad h = 0 spatially and cos(alpha) = 0 or
// cos(beta) = 0, drives potential_simplified to zero:
//   -m (sin 2a + sin 2b) / (sin 2a - sin 2b)
// Throws ParamDegenerateError when |sin 2a - sin 2b| < eps_param.
double zero_potential_h_slope(const ValidatedParams& p,
                              double eps_param = kDefaultParamMargin);

enum class ZeroPotentialBranch {
  AlphaHalfPi,  // cos(alpha) = 0: Psi = c1 e^{+imt} (0, e^{id}, cos b, sin b e^{id})
  BetaHalfPi,   // cos(beta)  = 0: Psi = c1 e^{-imt} (cos a, sin a e^{id}, 0, e^{id})
};

// Free-particle spinors of the family (zero 4-potential and field).
// Requires the branch angle to be an odd multiple of pi/2.
Spinor4 special_spinor(ZeroPotentialBranch branch, const ValidatedParams& p, const Event& e);

// Solves cos 2a - cos 2b = 2/n for beta in [0, pi/2] (principal branch),
// then validates the resulting pair.  Throws NoSolutionError when the
// arccos argument leaves [-1, 1], ParamDegenerateError when the pair fails
// validation.
double resonance_beta(int n, double alpha, double eps_param = kDefaultParamMargin);

}  // namespace degenwave

#endif
