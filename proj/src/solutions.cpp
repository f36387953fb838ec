#include "degenwave/solutions.hpp"

#include <cmath>

#include "degenwave/errors.hpp"

namespace degenwave {

namespace {

bool finite(double v) { return std::isfinite(v); }

// exp(i phi) without going through std::exp(cplx)
cplx cis(double phi) { return {std::cos(phi), std::sin(phi)}; }

}  // namespace

AngleMargins angle_margins(double alpha, double beta) {
  return {std::abs(std::cos(2.0 * alpha) - std::cos(2.0 * beta)),
          std::abs(std::cos(alpha + beta)), std::abs(std::sin(alpha - beta))};
}

ValidatedParams validate_params(const DegenerateParams& p, double eps_param) {
  if (!finite(p.alpha) || !finite(p.beta) || !finite(p.mass) || !finite(p.charge) ||
      !finite(p.c1.real()) || !finite(p.c1.imag())) {
    throw DomainError("validate_params: nonfinite parameter");
  }
  if (p.mass < 0.0) throw DomainError("validate_params: mass must be >= 0");
  if (p.charge == 0.0) throw DomainError("validate_params: charge must be nonzero");

  const AngleMargins m = angle_margins(p.alpha, p.beta);
  if (m.cos2_gap < eps_param)
    throw ParamDegenerateError("cos(2*alpha) = cos(2*beta)", m.cos2_gap);
  if (m.cos_sum < eps_param)
    throw ParamDegenerateError("alpha + beta = pi/2 + n*pi", m.cos_sum);
  if (m.sin_diff < eps_param)
    throw ParamDegenerateError("alpha - beta = n*pi", m.sin_diff);
  return ValidatedParams(p);
}

Dispersion dispersion(const ValidatedParams& p) {
  const double den = std::cos(2.0 * p.alpha()) - std::cos(2.0 * p.beta());
  const double omega = 4.0 * p.mass() / den;
  return {omega, omega * std::cos(p.alpha() + p.beta())};
}

double phase_d(const ValidatedParams& p, const Event& e) {
  const Dispersion w = dispersion(p);
  return w.omega * e.t - w.wavenumber * e.z;
}

Spinor4 spinor(const ValidatedParams& p, const ScalarField& h, const Event& e) {
  const double d = phase_d(p, e);
  const cplx amp = p.c1() * cis(h(e));
  const cplx eid = cis(d);
  Spinor4 s;
  s[0] = amp * std::cos(p.alpha());
  s[1] = amp * std::sin(p.alpha()) * eid;
  s[2] = amp * std::cos(p.beta());
  s[3] = amp * std::sin(p.beta()) * eid;
  return s;
}

std::array<Spinor4, 4> spinor_gradient(const ValidatedParams& p, const ScalarField& h,
                                       const Event& e) {
  const Dispersion w = dispersion(p);
  const double dd[4] = {w.omega, 0.0, 0.0, -w.wavenumber};  // d_mu d
  const Grad4 hg = h.gradient(e);
  const double d = phase_d(p, e);
  const cplx amp = p.c1() * cis(h(e));
  const cplx eid = cis(d);
  const cplx i_unit{0.0, 1.0};

  Spinor4 u;
  u[0] = std::cos(p.alpha());
  u[1] = std::sin(p.alpha()) * eid;
  u[2] = std::cos(p.beta());
  u[3] = std::sin(p.beta()) * eid;

  Spinor4 du;  // du/dd
  du[1] = i_unit * std::sin(p.alpha()) * eid;
  du[3] = i_unit * std::sin(p.beta()) * eid;

  std::array<Spinor4, 4> out;
  for (int mu = 0; mu < 4; ++mu) {
    out[static_cast<std::size_t>(mu)] = amp * ((i_unit * hg[mu]) * u + dd[mu] * du);
  }
  return out;
}

FourPotential potential_general(const ValidatedParams& p, const ScalarField& h,
                                const ScalarField& g, const Event& e) {
  const double a = p.alpha(), b = p.beta(), m = p.mass();
  const double den = std::cos(2.0 * a) - std::cos(2.0 * b);
  const double d = phase_d(p, e);
  const Grad4 hg = h.gradient(e);
  const double gv = g(e);
  const double big_g = hg.dz - gv;  // (dh/dz - g)
  const double sum = a + b, diff = a - b;

  FourPotential out;
  out.a0 = -std::tan(sum) *
           (2.0 * std::sin(diff) * big_g + (std::sin(2.0 * a) - std::sin(2.0 * b)) * hg.dt +
            m * (std::sin(2.0 * a) + std::sin(2.0 * b))) /
           den;
  out.a1 = -(1.0 / std::cos(sum)) * std::cos(d) *
               (std::sin(sum) * big_g + 2.0 * m * std::cos(a) * std::cos(b) / std::sin(diff)) +
           hg.dx;
  out.a2 = 0.5 / std::sin(diff) / std::cos(sum) * std::sin(d) *
               (den * big_g - 4.0 * m * std::cos(a) * std::cos(b)) +
           hg.dy;
  out.a3 = gv;
  return out;
}

FourPotential potential_simplified(const ValidatedParams& p, const ScalarField& h,
                                   const Event& e) {
  const double a = p.alpha(), b = p.beta(), m = p.mass();
  const double den = std::cos(2.0 * a) - std::cos(2.0 * b);
  const double d = phase_d(p, e);
  const Grad4 hg = h.gradient(e);
  const double sum = a + b, diff = a - b;
  const double circ = 2.0 * m * std::cos(a) * std::cos(b) / std::sin(diff) / std::cos(sum);

  FourPotential out;
  out.a0 = -std::tan(sum) *
           ((std::sin(2.0 * a) - std::sin(2.0 * b)) * hg.dt +
            m * (std::sin(2.0 * a) + std::sin(2.0 * b))) /
           den;
  out.a1 = -circ * std::cos(d) + hg.dx;
  out.a2 = -circ * std::sin(d) + hg.dy;
  out.a3 = hg.dz;
  return out;
}

KappaVector kappa(const ValidatedParams& p, const Event& e) {
  const double d = phase_d(p, e);
  const double s = std::sin(p.alpha() + p.beta());
  const double c = std::cos(p.alpha() + p.beta());
  return {1.0, -s * std::cos(d), -s * std::sin(d), -c};
}

KappaVector kappa_bilinear(const Spinor4& psi) {
  const GammaSet& gm = gammas();
  const cplx den = bilinear_transpose(gm.g2, psi);
  const cplx k1 = -bilinear_transpose(gm.g0g1g2, psi) / den;
  const cplx k2 = -bilinear_transpose(gm.g0, psi) / den;
  const cplx k3 = bilinear_transpose(gm.g0g2g3, psi) / den;
  return {1.0, k1.real(), k2.real(), k3.real()};
}

FourPotential potential_family(const ValidatedParams& p, const ScalarField& h,
                               const ScalarField& g, const ScalarField& s, const Event& e) {
  FourPotential out = potential_general(p, h, g, e);
  if (!s.is_zero()) {
    const double sv = s(e);
    const KappaVector k = kappa(p, e);
    out.a0 += sv * k.k0;
    out.a1 += sv * k.k1;
    out.a2 += sv * k.k2;
    out.a3 += sv * k.k3;
  }
  return out;
}

double zero_potential_h_slope(const ValidatedParams& p, double eps_param) {
  const double s2a = std::sin(2.0 * p.alpha());
  const double s2b = std::sin(2.0 * p.beta());
  if (std::abs(s2a - s2b) < eps_param)
    throw ParamDegenerateError("sin(2*alpha) = sin(2*beta)", std::abs(s2a - s2b));
  return -p.mass() * (s2a + s2b) / (s2a - s2b);
}

Spinor4 special_spinor(ZeroPotentialBranch branch, const ValidatedParams& p, const Event& e) {
  const double d = phase_d(p, e);
  const cplx eid = cis(d);
  Spinor4 s;
  if (branch == ZeroPotentialBranch::AlphaHalfPi) {
    if (std::abs(std::cos(p.alpha())) > 1e-12)
      throw DomainError("special_spinor: alpha must be an odd multiple of pi/2");
    const cplx amp = p.c1() * cis(p.mass() * e.t);
    s[0] = 0.0;
    s[1] = amp * eid;
    s[2] = amp * std::cos(p.beta());
    s[3] = amp * std::sin(p.beta()) * eid;
  } else {
    if (std::abs(std::cos(p.beta())) > 1e-12)
      throw DomainError("special_spinor: beta must be an odd multiple of pi/2");
    const cplx amp = p.c1() * cis(-p.mass() * e.t);
    s[0] = amp * std::cos(p.alpha());
    s[1] = amp * std::sin(p.alpha()) * eid;
    s[2] = 0.0;
    s[3] = amp * eid;
  }
  return s;
}

double resonance_beta(int n, double alpha, double eps_param) {
  if (n < 1) throw DomainError("resonance_beta: n must be >= 1");
  const double arg = std::cos(2.0 * alpha) - 2.0 / static_cast<double>(n);
  if (arg < -1.0 || arg > 1.0)
    throw NoSolutionError("resonance_beta: cos(2*alpha) - 2/n outside [-1, 1]");
  const double beta = 0.5 * std::acos(arg);
  DegenerateParams probe;
  probe.alpha = alpha;
  probe.beta = beta;
  validate_params(probe, eps_param);  // throws ParamDegenerateError if the pair is singular
  return beta;
}

}  // namespace degenwave
