#ifndef DEGENWAVE_ELECTROMAGNETICS_HPP
#define DEGENWAVE_ELECTROMAGNETICS_HPP

#include "degenwave/fields.hpp"
#include "degenwave/linalg.hpp"
#include "degenwave/solutions.hpp"

// Electromagnetic fields of the solution family.
//
// All field functions work in the charge-scaled convention: the potential
// components a_mu = q A_mu define U = a_0 and A = -(a_1, a_2, a_3), so the
// returned E and B are q times the physical fields and are independent of
// the charge stored in the parameters.  Use physical() to rescale.
// Poynting flux uses the Gaussian-units factor 1/(4 pi).

namespace degenwave {

struct EMField {
  Vec3 E, B;
};

inline EMField operator+(const EMField& a, const EMField& b) {
  return {a.E + b.E, a.B + b.B};
}
inline EMField operator-(const EMField& a, const EMField& b) {
  return {a.E - b.E, a.B - b.B};
}

inline EMField physical(const EMField& f, double charge) {
  return {(1.0 / charge) * f.E, (1.0 / charge) * f.B};
}

// Closed-form fields of the simplified potential (any h; h drops out):
//   E =  4 m^2 cos a cos b csc^2(a-b) csc(a+b) sec(a+b) (-sin d, cos d, 0)
//   B = -4 m^2 cos a cos b csc^2(a-b) csc(a+b)          ( cos d, sin d, 0)
EMField em_closed(const ValidatedParams& p, const Event& e);

// E = -grad U - dA/dt and B = curl A by central differences of
// potential_family; independent oracle for the closed forms.
EMField em_from_potential(const ValidatedParams& p, const ScalarField& h, const ScalarField& g,
                          const ScalarField& s, const Event& e, double step = 1e-4);

// Fields contributed by the kappa-direction potential s_q * kappa alone.
EMField em_s_fields(const ValidatedParams& p, const ScalarField& s_q, const Event& e);

// Total fields for constant s = sigma_q:
//   E =  2 m csc(a-b) [2 m cos a cos b csc(a-b) csc(a+b) sec(a+b) + sigma] (-sin d, cos d, 0)
//   B = -2 m csc(a-b) [2 m cos a cos b csc(a-b) csc(a+b) + sigma cos(a+b)] ( cos d, sin d, 0)
EMField em_constant_s(const ValidatedParams& p, double sigma_q, const Event& e);

// Closed-form total fields of potential_family for arbitrary h, g, s.
// Uses the identity that the g-freedom is a kappa shift with density
// sec(a+b) (dh/dz - g), so the total is em_closed plus em_s_fields at the
// effective density s + sec(a+b) (dh/dz - g).
EMField em_total(const ValidatedParams& p, const ScalarField& h, const ScalarField& g,
                 const ScalarField& s, const Event& e);

// Poynting vector (1/4pi) E x B of the closed-form fields; event
// independent and z directed:
//   S_z = (4 m^4 / pi) cos^2 a cos^2 b csc^4(a-b) csc^2(a+b) sec(a+b)
Vec3 poynting(const ValidatedParams& p);

// (1/4pi) E x B of arbitrary fields.
Vec3 poynting_of(const EMField& f);

struct WaveDescriptor {
  double omega_d = 0.0;           // 4m / (cos 2a - cos 2b)
  double k_d = 0.0;               // omega_d cos(a+b)
  double v_ph = 0.0;              // omega_d / k_d = sec(a+b); |v_ph| >= 1
  double f_si = 0.0;              // Hz, filled when an SI mass is supplied
  double photon_energy_si = 0.0;  // eV, likewise
};

// Natural-unit members always; SI members filled from mass_si_kg when > 0
// (denominator taken from the parameter angles).
WaveDescriptor wave_descriptor(const ValidatedParams& p, double mass_si_kg = 0.0);

struct SiConversion {
  double f_si_hz;
  double photon_energy_ev;
};

// f = (4 m c^2 / h) / denom and the corresponding photon energy h |f|.
// Throws DomainError for nonpositive mass or |denom| below eps.
SiConversion si_convert(double mass_si_kg, double denom, double eps = 1e-9);

namespace constants {
// SI-2019 defined values
inline constexpr double speed_of_light = 299792458.0;        // m/s
inline constexpr double planck_h = 6.62607015e-34;           // J s
inline constexpr double electron_volt = 1.602176634e-19;     // J
// CODATA 2018 particle masses
inline constexpr double electron_mass_kg = 9.1093837015e-31;
inline constexpr double proton_mass_kg = 1.67262192369e-27;
inline constexpr double muon_mass_kg = 1.883531627e-28;
}  // namespace constants

}  // namespace degenwave

#endif
