#include "degenwave/scenario.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "degenwave/errors.hpp"

namespace degenwave {

namespace {

constexpr int kMaxFieldTerms = 8;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing characters");
    return x;
  } catch (const std::exception&) {
    throw ScenarioError(key + ": expected a number, got '" + v + "'");
  }
}

long parse_long(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const long x = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing characters");
    return x;
  } catch (const std::exception&) {
    throw ScenarioError(key + ": expected an integer, got '" + v + "'");
  }
}

std::vector<double> parse_list(const std::string& key, const std::string& v) {
  const std::string t = trim(v);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw ScenarioError(key + ": expected a [..] list, got '" + v + "'");
  std::vector<double> out;
  std::string item;
  std::stringstream ss(t.substr(1, t.size() - 2));
  while (std::getline(ss, item, ',')) out.push_back(parse_double(key, trim(item)));
  return out;
}

// key/value store with consumed-tracking so unknown keys can be reported
class KvStore {
 public:
  void insert(const std::string& key, const std::string& value, int line) {
    if (kv_.count(key)) throw ScenarioError(key + ": duplicate key (line " +
                                            std::to_string(line) + ")");
    kv_[key] = value;
  }
  bool has(const std::string& key) const { return kv_.count(key) != 0; }
  std::string take(const std::string& key) {
    consumed_.insert({key, true});
    return kv_.at(key);
  }
  double take_double(const std::string& key, double fallback) {
    if (!has(key)) return fallback;
    return parse_double(key, take(key));
  }
  long take_long(const std::string& key, long fallback) {
    if (!has(key)) return fallback;
    return parse_long(key, take(key));
  }
  std::string take_string(const std::string& key, const std::string& fallback) {
    if (!has(key)) return fallback;
    return take(key);
  }
  void reject_unconsumed() const {
    for (const auto& [k, v] : kv_) {
      if (!consumed_.count(k)) throw ScenarioError(k + ": unknown key");
    }
  }

 private:
  std::map<std::string, std::string> kv_;
  std::map<std::string, bool> consumed_;
};

ScalarField parse_primitive(KvStore& kv, const std::string& prefix, const std::string& kind) {
  if (kind == "zero") return ScalarField{};
  if (kind == "constant") {
    return ScalarField::constant(parse_double(prefix + ".value", kv.take(prefix + ".value")));
  }
  if (kind == "linear") {
    const auto k = parse_list(prefix + ".k", kv.take(prefix + ".k"));
    if (k.size() != 4) throw ScenarioError(prefix + ".k: expected 4 entries");
    return ScalarField::linear(k[0], k[1], k[2], k[3]);
  }
  if (kind == "sinusoid") {
    const double amp = parse_double(prefix + ".A", kv.take(prefix + ".A"));
    const auto k = parse_list(prefix + ".k", kv.take(prefix + ".k"));
    if (k.size() != 4) throw ScenarioError(prefix + ".k: expected 4 entries");
    const double phase = kv.take_double(prefix + ".phase", 0.0);
    return ScalarField::sinusoid(amp, k[0], k[1], k[2], k[3], phase);
  }
  throw ScenarioError(prefix + ".kind: unknown field kind '" + kind + "'");
}

ScalarField parse_field(KvStore& kv, const std::string& prefix) {
  if (!kv.has(prefix + ".kind")) return ScalarField{};
  const std::string kind = kv.take(prefix + ".kind");
  if (kind != "sum") return parse_primitive(kv, prefix, kind);
  const long n = parse_long(prefix + ".n", kv.take(prefix + ".n"));
  if (n < 0 || n > kMaxFieldTerms)
    throw ScenarioError(prefix + ".n: sum size must be in [0, " +
                        std::to_string(kMaxFieldTerms) + "]");
  ScalarField out;
  for (long i = 0; i < n; ++i) {
    const std::string tp = prefix + "." + std::to_string(i);
    if (!kv.has(tp + ".kind")) throw ScenarioError(tp + ".kind: missing sum term");
    const std::string tkind = kv.take(tp + ".kind");
    if (tkind == "sum") throw ScenarioError(tp + ".kind: nested sums are not supported");
    out += parse_primitive(kv, tp, tkind);
  }
  return out;
}

void write_field(std::ostream& os, const std::string& prefix, const ScalarField& f) {
  const auto write_term = [&os](const std::string& pre, const ScalarField::Term& t) {
    using K = ScalarField::Term::Kind;
    switch (t.kind) {
      case K::Constant:
        os << pre << ".kind = constant\n";
        os << pre << ".value = " << format_full(t.value) << "\n";
        break;
      case K::Linear:
        os << pre << ".kind = linear\n";
        os << pre << ".k = [" << format_full(t.kt) << ", " << format_full(t.kx) << ", "
           << format_full(t.ky) << ", " << format_full(t.kz) << "]\n";
        break;
      case K::Sinusoid:
        os << pre << ".kind = sinusoid\n";
        os << pre << ".A = " << format_full(t.amplitude) << "\n";
        os << pre << ".k = [" << format_full(t.kt) << ", " << format_full(t.kx) << ", "
           << format_full(t.ky) << ", " << format_full(t.kz) << "]\n";
        os << pre << ".phase = " << format_full(t.phase) << "\n";
        break;
    }
  };
  const auto& terms = f.terms();
  if (terms.empty()) {
    os << prefix << ".kind = zero\n";
  } else if (terms.size() == 1) {
    write_term(prefix, terms[0]);
  } else {
    os << prefix << ".kind = sum\n";
    os << prefix << ".n = " << terms.size() << "\n";
    for (std::size_t i = 0; i < terms.size(); ++i)
      write_term(prefix + "." + std::to_string(i), terms[i]);
  }
}

}  // namespace

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Scenario parse_scenario_text(const std::string& text) {
  KvStore kv;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ScenarioError("line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ScenarioError("line " + std::to_string(lineno) + ": empty key");
    kv.insert(key, value, lineno);
  }

  Scenario s;
  s.params.alpha = kv.take_double("params.alpha", 0.0);
  s.params.beta = kv.take_double("params.beta", 0.0);
  s.params.mass = kv.take_double("params.mass", 1.0);
  s.params.c1 = cplx(kv.take_double("params.c1_re", 1.0), kv.take_double("params.c1_im", 0.0));
  s.params.charge = kv.take_double("params.charge", 1.0);

  s.h = parse_field(kv, "h");
  s.g = parse_field(kv, "g");
  s.s = parse_field(kv, "s");

  s.grid.t_min = kv.take_double("grid.t_min", 0.0);
  s.grid.t_max = kv.take_double("grid.t_max", 0.0);
  s.grid.n_t = static_cast<int>(kv.take_long("grid.n_t", 1));
  s.grid.z_min = kv.take_double("grid.z_min", 0.0);
  s.grid.z_max = kv.take_double("grid.z_max", 0.0);
  s.grid.n_z = static_cast<int>(kv.take_long("grid.n_z", 1));
  s.grid.x = kv.take_double("grid.x", 0.0);
  s.grid.y = kv.take_double("grid.y", 0.0);

  const long seed = kv.take_long("seed", 42);
  if (seed < 0) throw ScenarioError("seed: must be nonnegative");
  s.seed = static_cast<std::uint64_t>(seed);
  s.sample_events = kv.take_long("samples.events", 1000);

  s.tol.algebraic = kv.take_double("tol.algebraic", s.tol.algebraic);
  s.tol.exact = kv.take_double("tol.exact", s.tol.exact);
  s.tol.residual = kv.take_double("tol.residual", s.tol.residual);
  s.tol.fd_rel = kv.take_double("tol.fd_rel", s.tol.fd_rel);
  s.tol.fd_step = kv.take_double("tol.fd_step", s.tol.fd_step);
  s.tol.angle = kv.take_double("tol.angle", s.tol.angle);
  s.tol.rel_identity = kv.take_double("tol.rel_identity", s.tol.rel_identity);

  s.mass_corruption = kv.take_double("corrupt.mass_delta", 0.0);
  s.report_path = kv.take_string("output.report", "");
  s.csv_path = kv.take_string("output.csv", "");

  kv.reject_unconsumed();

  // semantic validation
  try {
    validate_params(s.params);
  } catch (const ParamDegenerateError& ex) {
    throw ScenarioError(std::string("params.alpha/params.beta: ") + ex.what());
  } catch (const DomainError& ex) {
    throw ScenarioError(std::string("params: ") + ex.what());
  }
  if (s.grid.n_t < 1) throw ScenarioError("grid.n_t: must be >= 1");
  if (s.grid.n_z < 1) throw ScenarioError("grid.n_z: must be >= 1");
  if (s.grid.t_max < s.grid.t_min) throw ScenarioError("grid.t_max: must be >= grid.t_min");
  if (s.grid.z_max < s.grid.z_min) throw ScenarioError("grid.z_max: must be >= grid.z_min");
  if (s.sample_events < 1) throw ScenarioError("samples.events: must be >= 1");
  if (!(s.tol.fd_step > 0.0)) throw ScenarioError("tol.fd_step: must be > 0");
  return s;
}

Scenario parse_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str());
}

std::string serialize_scenario(const Scenario& s) {
  std::ostringstream os;
  os << "params.alpha = " << format_full(s.params.alpha) << "\n";
  os << "params.beta = " << format_full(s.params.beta) << "\n";
  os << "params.mass = " << format_full(s.params.mass) << "\n";
  os << "params.c1_re = " << format_full(s.params.c1.real()) << "\n";
  os << "params.c1_im = " << format_full(s.params.c1.imag()) << "\n";
  os << "params.charge = " << format_full(s.params.charge) << "\n";
  write_field(os, "h", s.h);
  write_field(os, "g", s.g);
  write_field(os, "s", s.s);
  os << "grid.t_min = " << format_full(s.grid.t_min) << "\n";
  os << "grid.t_max = " << format_full(s.grid.t_max) << "\n";
  os << "grid.n_t = " << s.grid.n_t << "\n";
  os << "grid.z_min = " << format_full(s.grid.z_min) << "\n";
  os << "grid.z_max = " << format_full(s.grid.z_max) << "\n";
  os << "grid.n_z = " << s.grid.n_z << "\n";
  os << "grid.x = " << format_full(s.grid.x) << "\n";
  os << "grid.y = " << format_full(s.grid.y) << "\n";
  os << "seed = " << s.seed << "\n";
  os << "samples.events = " << s.sample_events << "\n";
  os << "tol.algebraic = " << format_full(s.tol.algebraic) << "\n";
  os << "tol.exact = " << format_full(s.tol.exact) << "\n";
  os << "tol.residual = " << format_full(s.tol.residual) << "\n";
  os << "tol.fd_rel = " << format_full(s.tol.fd_rel) << "\n";
  os << "tol.fd_step = " << format_full(s.tol.fd_step) << "\n";
  os << "tol.angle = " << format_full(s.tol.angle) << "\n";
  os << "tol.rel_identity = " << format_full(s.tol.rel_identity) << "\n";
  os << "corrupt.mass_delta = " << format_full(s.mass_corruption) << "\n";
  if (!s.report_path.empty()) os << "output.report = " << s.report_path << "\n";
  if (!s.csv_path.empty()) os << "output.csv = " << s.csv_path << "\n";
  return os.str();
}

}  // namespace degenwave
