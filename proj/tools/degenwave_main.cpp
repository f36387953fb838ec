// degenwave CLI: scenario verification, grid sampling, frequency and
// resonance tables.
//
// exit codes: 0 success / all checks pass
//             1 check failure or no solution
//             2 input error
//             3 I/O error

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "degenwave/electromagnetics.hpp"
#include "degenwave/errors.hpp"
#include "degenwave/sample.hpp"
#include "degenwave/scenario.hpp"
#include "degenwave/verify.hpp"

namespace {

using namespace degenwave;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitIoError = 3;

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) return false;
  out << content;
  return static_cast<bool>(out);
}

struct GlobalOpts {
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::optional<double> step;
  std::string out;
};

int run_verify(const std::string& scenario_path, const GlobalOpts& opts) {
  Scenario sc;
  try {
    sc = parse_scenario_file(scenario_path);
  } catch (const ScenarioError& e) {
    std::cerr << "scenario error: " << e.what() << "\n";
    return kExitInputError;
  }
  if (opts.seed) sc.seed = *opts.seed;
  if (opts.tol) sc.tol.residual = *opts.tol;
  if (opts.step) sc.tol.fd_step = *opts.step;

  const VerificationReport rep = run_suite(sc);
  const std::string json = rep.to_json();

  const std::string out_path = !opts.out.empty() ? opts.out : sc.report_path;
  if (!out_path.empty()) {
    if (!write_file(out_path, json + "\n")) {
      std::cerr << "cannot write report: " << out_path << "\n";
      return kExitIoError;
    }
  } else {
    std::cout << json << "\n";
  }

  for (const CheckRecord& c : rep.checks) {
    std::cerr << (c.pass ? "pass" : "FAIL") << "  " << c.name << "  max " << c.max_residual
              << " tol " << c.tolerance << "\n";
  }
  std::cerr << rep.passed() << "/" << rep.total() << " checks passed\n";
  return rep.all_pass() ? kExitOk : kExitCheckFailure;
}

int run_sample(const std::string& scenario_path, const GlobalOpts& opts) {
  Scenario sc;
  try {
    sc = parse_scenario_file(scenario_path);
  } catch (const ScenarioError& e) {
    std::cerr << "scenario error: " << e.what() << "\n";
    return kExitInputError;
  }
  const std::string csv = sample_csv(sc);
  const std::string out_path = !opts.out.empty() ? opts.out : sc.csv_path;
  if (!out_path.empty()) {
    if (!write_file(out_path, csv)) {
      std::cerr << "cannot write csv: " << out_path << "\n";
      return kExitIoError;
    }
  } else {
    std::cout << csv;
  }
  return kExitOk;
}

int run_freq(const std::string& particle, double mass_kg, double denom, int n_pairs) {
  double mass = mass_kg;
  std::string label = particle;
  if (!particle.empty()) {
    if (particle == "electron") {
      mass = constants::electron_mass_kg;
    } else if (particle == "proton") {
      mass = constants::proton_mass_kg;
    } else if (particle == "muon") {
      mass = constants::muon_mass_kg;
    } else {
      std::cerr << "unknown particle '" << particle << "' (electron|proton|muon)\n";
      return kExitInputError;
    }
  } else {
    label = "custom";
  }
  if (!(mass > 0.0)) {
    std::cerr << "mass must be positive\n";
    return kExitInputError;
  }

  double d = denom;
  if (n_pairs > 0) d = 2.0 / n_pairs;
  if (d == 0.0) {
    std::cerr << "denominator must be nonzero\n";
    return kExitInputError;
  }

  try {
    const SiConversion si = si_convert(mass, d);
    std::cout << "particle: " << label << " (m = " << format_full(mass) << " kg)\n";
    std::cout << "denom = " << format_full(d) << "\n";
    std::cout << "f_d = " << format_full(si.f_si_hz) << " Hz\n";
    if (si.photon_energy_ev >= 1e9) {
      std::cout << "photon energy = " << format_full(si.photon_energy_ev / 1e9) << " GeV\n";
    } else {
      std::cout << "photon energy = " << format_full(si.photon_energy_ev / 1e6) << " MeV\n";
    }
    if (n_pairs > 0) {
      const double mc2_ev =
          mass * constants::speed_of_light * constants::speed_of_light /
          constants::electron_volt;
      std::cout << "n x 2 m c^2 = " << format_full(n_pairs * 2.0 * mc2_ev / 1e6) << " MeV\n";
    }
  } catch (const DomainError& e) {
    std::cerr << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}

int run_resonance(int n, double alpha) {
  try {
    const double beta = resonance_beta(n, alpha);
    const AngleMargins m = angle_margins(alpha, beta);
    DegenerateParams raw;
    raw.alpha = alpha;
    raw.beta = beta;
    raw.mass = 1.0;
    const ValidatedParams p = validate_params(raw);
    const WaveDescriptor w = wave_descriptor(p);
    std::cout << "beta = " << format_full(beta) << " rad\n";
    std::cout << "margins: |cos2a-cos2b| = " << format_full(m.cos2_gap)
              << ", |cos(a+b)| = " << format_full(m.cos_sum)
              << ", |sin(a-b)| = " << format_full(m.sin_diff) << "\n";
    std::cout << "omega_d = " << format_full(w.omega_d) << " (units of m), k_d = "
              << format_full(w.k_d) << ", v_ph = " << format_full(w.v_ph) << "\n";
    return kExitOk;
  } catch (const NoSolutionError& e) {
    std::cerr << e.what() << "\n";
    return kExitCheckFailure;
  } catch (const ParamDegenerateError& e) {
    std::cerr << e.what() << "\n";
    return kExitCheckFailure;
  } catch (const DomainError& e) {
    std::cerr << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"degenerate wave-like Dirac solutions: construction and certification"};
  app.require_subcommand(1);

  GlobalOpts opts;
  app.add_option("--seed", opts.seed, "override the scenario seed");
  app.add_option("--tol", opts.tol, "override the residual tolerance");
  app.add_option("--step", opts.step, "override the finite-difference step");
  app.add_option("--out", opts.out, "output path (report/csv)");

  std::string verify_path;
  CLI::App* verify = app.add_subcommand("verify", "run the certification suite on a scenario");
  verify->add_option("scenario", verify_path, "scenario file")->required();

  std::string sample_path;
  CLI::App* sample = app.add_subcommand("sample", "export a (t, z) grid as CSV");
  sample->add_option("scenario", sample_path, "scenario file")->required();

  std::string particle;
  double mass_kg = 0.0;
  double denom = 1.0;
  int n_pairs = 0;
  CLI::App* freq = app.add_subcommand("freq", "oscillation frequency and photon energy");
  freq->add_option("--particle", particle, "electron|proton|muon");
  freq->add_option("--mass-kg", mass_kg, "custom mass in kg");
  freq->add_option("--denom", denom, "cos(2a) - cos(2b) value");
  freq->add_option("--n", n_pairs, "pair count: denom = 2/n");

  int res_n = 1;
  double res_alpha = 0.0;
  CLI::App* resonance = app.add_subcommand("resonance", "solve cos(2a) - cos(2b) = 2/n");
  resonance->add_option("--n", res_n, "pair count, >= 1")->required();
  resonance->add_option("--alpha", res_alpha, "alpha in radians")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInputError;
  }

  if (verify->parsed()) return run_verify(verify_path, opts);
  if (sample->parsed()) return run_sample(sample_path, opts);
  if (freq->parsed()) return run_freq(particle, mass_kg, denom, n_pairs);
  if (resonance->parsed()) return run_resonance(res_n, res_alpha);
  return kExitInputError;
}
