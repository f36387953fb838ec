#include "degenwave/fields.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace degenwave {

ScalarField ScalarField::constant(double c) {
  ScalarField f;
  Term t;
  t.kind = Term::Kind::Constant;
  t.value = c;
  f.terms_.push_back(t);
  return f;
}

ScalarField ScalarField::linear(double kt, double kx, double ky, double kz) {
  ScalarField f;
  Term t;
  t.kind = Term::Kind::Linear;
  t.kt = kt;
  t.kx = kx;
  t.ky = ky;
  t.kz = kz;
  f.terms_.push_back(t);
  return f;
}

ScalarField ScalarField::sinusoid(double amplitude, double kt, double kx, double ky, double kz,
                                  double phase) {
  ScalarField f;
  Term t;
  t.kind = Term::Kind::Sinusoid;
  t.amplitude = amplitude;
  t.kt = kt;
  t.kx = kx;
  t.ky = ky;
  t.kz = kz;
  t.phase = phase;
  f.terms_.push_back(t);
  return f;
}

double ScalarField::operator()(const Event& e) const {
  double v = 0.0;
  for (const Term& t : terms_) {
    switch (t.kind) {
      case Term::Kind::Constant:
        v += t.value;
        break;
      case Term::Kind::Linear:
        v += t.kt * e.t + t.kx * e.x + t.ky * e.y + t.kz * e.z;
        break;
      case Term::Kind::Sinusoid:
        v += t.amplitude * std::sin(t.kt * e.t + t.kx * e.x + t.ky * e.y + t.kz * e.z + t.phase);
        break;
    }
  }
  return v;
}

Grad4 ScalarField::gradient(const Event& e) const {
  Grad4 g;
  for (const Term& t : terms_) {
    switch (t.kind) {
      case Term::Kind::Constant:
        break;
      case Term::Kind::Linear:
        g.dt += t.kt;
        g.dx += t.kx;
        g.dy += t.ky;
        g.dz += t.kz;
        break;
      case Term::Kind::Sinusoid: {
        const double c =
            t.amplitude * std::cos(t.kt * e.t + t.kx * e.x + t.ky * e.y + t.kz * e.z + t.phase);
        g.dt += t.kt * c;
        g.dx += t.kx * c;
        g.dy += t.ky * c;
        g.dz += t.kz * c;
        break;
      }
    }
  }
  return g;
}

ScalarField ScalarField::partial(int mu) const {
  if (mu < 0 || mu > 3) throw std::out_of_range("ScalarField::partial: mu out of range");
  ScalarField out;
  for (const Term& t : terms_) {
    switch (t.kind) {
      case Term::Kind::Constant:
        break;
      case Term::Kind::Linear: {
        const double k = t.wave(mu);
        if (k != 0.0) out += constant(k);
        break;
      }
      case Term::Kind::Sinusoid: {
        const double k = t.wave(mu);
        if (k != 0.0) {
          // d/dmu A sin(k.e + p) = A k sin(k.e + p + pi/2)
          out += sinusoid(t.amplitude * k, t.kt, t.kx, t.ky, t.kz,
                          t.phase + std::numbers::pi / 2.0);
        }
        break;
      }
    }
  }
  return out;
}

double ScalarField::partial_bound(int mu, int order) const {
  double b = 0.0;
  for (const Term& t : terms_) {
    switch (t.kind) {
      case Term::Kind::Constant:
        break;
      case Term::Kind::Linear:
        if (order == 1) b += std::abs(t.wave(mu));
        break;
      case Term::Kind::Sinusoid:
        b += std::abs(t.amplitude) * std::pow(std::abs(t.wave(mu)), order);
        break;
    }
  }
  return b;
}

ScalarField& ScalarField::operator+=(const ScalarField& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

ScalarField operator*(double s, ScalarField f) {
  for (auto& t : f.terms_) {
    switch (t.kind) {
      case ScalarField::Term::Kind::Constant:
        t.value *= s;
        break;
      case ScalarField::Term::Kind::Linear:
        t.kt *= s;
        t.kx *= s;
        t.ky *= s;
        t.kz *= s;
        break;
      case ScalarField::Term::Kind::Sinusoid:
        t.amplitude *= s;
        break;
    }
  }
  return f;
}

Grad4 fd_grad(const ScalarField& f, const Event& e, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("fd_grad: step must be positive");
  Grad4 g;
  double* out[4] = {&g.dt, &g.dx, &g.dy, &g.dz};
  for (int mu = 0; mu < 4; ++mu) {
    *out[mu] = (f(e.shifted(mu, step)) - f(e.shifted(mu, -step))) / (2.0 * step);
  }
  return g;
}

}  // namespace degenwave
