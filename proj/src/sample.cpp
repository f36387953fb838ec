#include "degenwave/sample.hpp"

#include <sstream>

#include "degenwave/electromagnetics.hpp"
#include "degenwave/verify.hpp"

namespace degenwave {

const char* const kSampleCsvHeader =
    "t,x,y,z,d,a0,a1,a2,a3,Ex,Ey,Ez,Bx,By,Bz,Sx_spin,Sy_spin,Sz_spin,Sz_poynting,"
    "residual_norm";

std::vector<SampleRow> sample_grid(const Scenario& sc) {
  const ValidatedParams p = validate_params(sc.params);
  const GridSpec& g = sc.grid;

  std::vector<SampleRow> rows;
  rows.reserve(static_cast<std::size_t>(g.n_t) * static_cast<std::size_t>(g.n_z));
  for (int it = 0; it < g.n_t; ++it) {
    const double t =
        (g.n_t == 1) ? g.t_min : g.t_min + (g.t_max - g.t_min) * it / (g.n_t - 1);
    for (int iz = 0; iz < g.n_z; ++iz) {
      const double z =
          (g.n_z == 1) ? g.z_min : g.z_min + (g.z_max - g.z_min) * iz / (g.n_z - 1);
      const Event e{t, g.x, g.y, z};

      SampleRow r{};
      r.t = t;
      r.x = g.x;
      r.y = g.y;
      r.z = z;
      r.d = phase_d(p, e);
      const FourPotential a = potential_family(p, sc.h, sc.g, sc.s, e);
      r.a0 = a.a0;
      r.a1 = a.a1;
      r.a2 = a.a2;
      r.a3 = a.a3;
      const EMField f = em_total(p, sc.h, sc.g, sc.s, e);
      r.ex = f.E.x;
      r.ey = f.E.y;
      r.ez = f.E.z;
      r.bx = f.B.x;
      r.by = f.B.y;
      r.bz = f.B.z;
      const SpinExpectation s = spin_closed(p, e);
      r.sx_spin = s.sx;
      r.sy_spin = s.sy;
      r.sz_spin = s.sz;
      r.sz_poynting = poynting_of(f).z;
      r.residual_norm =
          dirac_residual_with(p, sc.h, a, e, DerivativeMode::Analytic, 0.0, sc.mass_corruption)
              .norm;
      rows.push_back(r);
    }
  }
  return rows;
}

std::string sample_csv(const Scenario& sc) {
  const std::vector<SampleRow> rows = sample_grid(sc);
  std::ostringstream os;
  os << kSampleCsvHeader << "\n";
  for (const SampleRow& r : rows) {
    const double vals[] = {r.t,  r.x,  r.y,  r.z,  r.d,       r.a0,      r.a1,
                           r.a2, r.a3, r.ex, r.ey, r.ez,      r.bx,      r.by,
                           r.bz, r.sx_spin, r.sy_spin, r.sz_spin, r.sz_poynting,
                           r.residual_norm};
    bool first = true;
    for (double v : vals) {
      if (!first) os << ",";
      os << format_full(v);
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace degenwave
