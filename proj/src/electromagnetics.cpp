#include "degenwave/electromagnetics.hpp"

#include <cmath>
#include <numbers>

#include "degenwave/errors.hpp"

namespace degenwave {

EMField em_closed(const ValidatedParams& p, const Event& e) {
  const double a = p.alpha(), b = p.beta(), m = p.mass();
  const double d = phase_d(p, e);
  const double csc_d = 1.0 / std::sin(a - b);
  const double pref = 4.0 * m * m * std::cos(a) * std::cos(b) * csc_d * csc_d /
                      std::sin(a + b);
  const double sec = 1.0 / std::cos(a + b);
  EMField f;
  f.E = {-pref * sec * std::sin(d), pref * sec * std::cos(d), 0.0};
  f.B = {-pref * std::cos(d), -pref * std::sin(d), 0.0};
  return f;
}

EMField em_from_potential(const ValidatedParams& p, const ScalarField& h, const ScalarField& g,
                          const ScalarField& s, const Event& e, double step) {
  if (!(step > 0.0)) throw DomainError("em_from_potential: step must be positive");
  // central difference of potential component `comp` along direction mu
  const auto pd = [&](int mu, int comp) {
    const FourPotential plus = potential_family(p, h, g, s, e.shifted(mu, step));
    const FourPotential minus = potential_family(p, h, g, s, e.shifted(mu, -step));
    return (plus[comp] - minus[comp]) / (2.0 * step);
  };
  // U = a0, A = -(a1, a2, a3)
  EMField f;
  f.E = {-pd(1, 0) + pd(0, 1), -pd(2, 0) + pd(0, 2), -pd(3, 0) + pd(0, 3)};
  f.B = {-pd(2, 3) + pd(3, 2), -pd(3, 1) + pd(1, 3), -pd(1, 2) + pd(2, 1)};
  return f;
}

EMField em_s_fields(const ValidatedParams& p, const ScalarField& s_q, const Event& e) {
  const double a = p.alpha(), b = p.beta(), m = p.mass();
  const double d = phase_d(p, e);
  const double sv = s_q(e);
  const Grad4 sg = s_q.gradient(e);
  const double ss = std::sin(a + b), cs = std::cos(a + b);
  const double csc_d = 1.0 / std::sin(a - b);
  const double cd = std::cos(d), sd = std::sin(d);
  EMField f;
  f.E = {-(2.0 * m * sv * csc_d * sd + ss * cd * sg.dt + sg.dx),
         (2.0 * m * sv * csc_d * cd - ss * sd * sg.dt - sg.dy),
         -(cs * sg.dt + sg.dz)};
  f.B = {-(ss * sd * sg.dz + cs * (2.0 * m * sv * csc_d * cd - sg.dy)),
         (ss * cd * sg.dz - cs * (2.0 * m * sv * csc_d * sd + sg.dx)),
         ss * (-cd * sg.dy + sd * sg.dx)};
  return f;
}

EMField em_constant_s(const ValidatedParams& p, double sigma_q, const Event& e) {
  const double a = p.alpha(), b = p.beta(), m = p.mass();
  const double d = phase_d(p, e);
  const double ss = std::sin(a + b), cs = std::cos(a + b);
  const double csc_d = 1.0 / std::sin(a - b);
  // inner circular prefactors; the B inner term carries one csc(a-b) so that
  // sigma_q -> 0 reduces exactly to em_closed
  const double e_inner = 2.0 * m * std::cos(a) * std::cos(b) * csc_d / ss / cs + sigma_q;
  const double b_inner = 2.0 * m * std::cos(a) * std::cos(b) * csc_d / ss + sigma_q * cs;
  const double e_amp = 2.0 * m * csc_d * e_inner;
  const double b_amp = -2.0 * m * csc_d * b_inner;
  EMField f;
  f.E = {-e_amp * std::sin(d), e_amp * std::cos(d), 0.0};
  f.B = {b_amp * std::cos(d), b_amp * std::sin(d), 0.0};
  return f;
}

EMField em_total(const ValidatedParams& p, const ScalarField& h, const ScalarField& g,
                 const ScalarField& s, const Event& e) {
  const double sec = 1.0 / std::cos(p.alpha() + p.beta());
  ScalarField s_eff = s + sec * (h.d_dz() + (-1.0) * g);
  return em_closed(p, e) + em_s_fields(p, s_eff, e);
}

Vec3 poynting(const ValidatedParams& p) {
  const double a = p.alpha(), b = p.beta(), m = p.mass();
  const double csc_d = 1.0 / std::sin(a - b);
  const double csc_s = 1.0 / std::sin(a + b);
  const double sec_s = 1.0 / std::cos(a + b);
  const double ca = std::cos(a), cb = std::cos(b);
  const double s_z = 4.0 * m * m * m * m / std::numbers::pi * ca * ca * cb * cb * csc_d *
                     csc_d * csc_d * csc_d * csc_s * csc_s * sec_s;
  return {0.0, 0.0, s_z};
}

Vec3 poynting_of(const EMField& f) {
  return (1.0 / (4.0 * std::numbers::pi)) * cross(f.E, f.B);
}

WaveDescriptor wave_descriptor(const ValidatedParams& p, double mass_si_kg) {
  const Dispersion w = dispersion(p);
  WaveDescriptor out;
  out.omega_d = w.omega;
  out.k_d = w.wavenumber;
  out.v_ph = 1.0 / std::cos(p.alpha() + p.beta());
  if (mass_si_kg > 0.0) {
    const double denom = std::cos(2.0 * p.alpha()) - std::cos(2.0 * p.beta());
    const SiConversion si = si_convert(mass_si_kg, denom);
    out.f_si = si.f_si_hz;
    out.photon_energy_si = si.photon_energy_ev;
  }
  return out;
}

SiConversion si_convert(double mass_si_kg, double denom, double eps) {
  if (!(mass_si_kg > 0.0)) throw DomainError("si_convert: mass must be positive");
  if (std::abs(denom) < eps) throw DomainError("si_convert: denominator too close to zero");
  const double c = constants::speed_of_light;
  const double f = (4.0 * mass_si_kg * c * c / constants::planck_h) / denom;
  return {f, constants::planck_h * std::abs(f) / constants::electron_volt};
}

}  // namespace degenwave
