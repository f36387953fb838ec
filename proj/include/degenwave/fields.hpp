#ifndef DEGENWAVE_FIELDS_HPP
#define DEGENWAVE_FIELDS_HPP

#include <vector>

// Real scalar functions of spacetime from a closed family
//
//   constant(c)
//   linear(k):      k_t t + k_x x + k_y y + k_z z
//   sinusoid(A,k,p): A sin(k_t t + k_x x + k_y y + k_z z + p)
//
// and finite sums of these.  The family is closed under partial
// differentiation, so values and gradients are exact closed-form
// evaluations; a central-difference gradient is provided as an
// independent oracle.

namespace degenwave {

// Spacetime point in natural units (hbar = c = 1); index order (t,x,y,z)
// matches mu = 0..3.
struct Event {
  double t = 0.0, x = 0.0, y = 0.0, z = 0.0;

  double operator[](int mu) const {
    switch (mu) {
      case 0: return t;
      case 1: return x;
      case 2: return y;
      default: return z;
    }
  }
  Event shifted(int mu, double delta) const {
    Event e = *this;
    switch (mu) {
      case 0: e.t += delta; break;
      case 1: e.x += delta; break;
      case 2: e.y += delta; break;
      default: e.z += delta; break;
    }
    return e;
  }
};

struct Grad4 {
  double dt = 0.0, dx = 0.0, dy = 0.0, dz = 0.0;

  double operator[](int mu) const {
    switch (mu) {
      case 0: return dt;
      case 1: return dx;
      case 2: return dy;
      default: return dz;
    }
  }
};

class ScalarField {
 public:
  struct Term {
    enum class Kind { Constant, Linear, Sinusoid };
    Kind kind = Kind::Constant;
    double value = 0.0;                              // Constant
    double kt = 0.0, kx = 0.0, ky = 0.0, kz = 0.0;   // Linear / Sinusoid wave vector
    double amplitude = 0.0;                          // Sinusoid
    double phase = 0.0;                              // Sinusoid

    double wave(int mu) const {
      switch (mu) {
        case 0: return kt;
        case 1: return kx;
        case 2: return ky;
        default: return kz;
      }
    }
  };

  ScalarField() = default;  // identically zero

  static ScalarField constant(double c);
  static ScalarField linear(double kt, double kx, double ky, double kz);
  static ScalarField sinusoid(double amplitude, double kt, double kx, double ky, double kz,
                              double phase);

  double operator()(const Event& e) const;
  Grad4 gradient(const Event& e) const;

  // Exact partial-derivative fields (the family is closed under d/dmu).
  ScalarField partial(int mu) const;
  ScalarField d_dt() const { return partial(0); }
  ScalarField d_dx() const { return partial(1); }
  ScalarField d_dy() const { return partial(2); }
  ScalarField d_dz() const { return partial(3); }

  // Upper bound on |d^order f / d(x_mu)^order| over all events (order >= 1).
  // Used to budget central-difference truncation errors.
  double partial_bound(int mu, int order) const;

  ScalarField& operator+=(const ScalarField& other);
  friend ScalarField operator+(ScalarField a, const ScalarField& b) {
    a += b;
    return a;
  }
  friend ScalarField operator*(double s, ScalarField f);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

 private:
  std::vector<Term> terms_;
};

// Central-difference gradient (f(e + step e_mu) - f(e - step e_mu)) / (2 step);
// independent oracle for ScalarField::gradient.
Grad4 fd_grad(const ScalarField& f, const Event& e, double step);

}  // namespace degenwave

#endif
