#include "spinrad/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "spinrad/constants.hpp"
#include "spinrad/dynamics.hpp"
#include "spinrad/equilibrium.hpp"
#include "spinrad/errors.hpp"
#include "spinrad/kernels.hpp"
#include "spinrad/rates.hpp"
#include "spinrad/units.hpp"

namespace spinrad::cli {

namespace {

using units::format_double;

const std::set<std::string> kKnownKeys = {
    "command",        "material",       "radius",
    "slope_e",        "slope_m",        "conductivity",
    "n",              "z0",             "omega",
    "t1",             "t2",             "rel_tol",
    "psi.n",          "psi.x",          "psi.n_min",
    "psi.n_max",      "psi.x_min",      "psi.x_max",
    "psi.points",     "curve.mode",     "curve.from",
    "curve.to",       "curve.points",   "table.n_list",
    "table.t2_list",  "dynamics.t_end", "dynamics.stride",
    "dynamics.inertia",                 "dynamics.heat_capacity",
    "dynamics.density",                 "dynamics.specific_heat",
    "sweep.axis",     "sweep.from",     "sweep.to",
    "sweep.points",   "sweep.log",
};

std::string trim(std::string s) {
  const auto a = s.find_first_not_of(" \t\r");
  const auto b = s.find_last_not_of(" \t\r");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = trim(line);
    // emitted CSVs embed their configuration as "# config: key = value",
    // which makes any output file reusable as a config file
    constexpr std::string_view embed = "# config:";
    if (body.rfind(embed, 0) == 0) {
      body = trim(body.substr(embed.size()));
    } else if (body.empty() || body[0] == '#') {
      continue;
    }
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      // CSV payload lines end up here when re-reading an output file
      if (body.find(',') != std::string::npos) continue;
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": expected 'key = value'");
    }
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (!kKnownKeys.count(key)) {
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": unknown key '" + key + "'");
    }
    kv[key] = value;
  }
  return kv;
}

/// Three-level resolution (flag > config file > built-in default) with a
/// record of every key actually consumed, for embedding into the output.
class Settings {
 public:
  void set_file(std::map<std::string, std::string> kv) {
    file_ = std::move(kv);
  }
  void set_flag(const std::string& key, const std::string& value) {
    flags_[key] = value;
  }

  std::optional<std::string> raw(const std::string& key) const {
    if (auto it = flags_.find(key); it != flags_.end()) return it->second;
    if (auto it = file_.find(key); it != file_.end()) return it->second;
    return std::nullopt;
  }

  bool has(const std::string& key) const { return raw(key).has_value(); }

  std::string text(const std::string& key, const std::string& fallback) {
    const std::string v = raw(key).value_or(fallback);
    record(key, v);
    return v;
  }

  double length_cm(const std::string& key, double fallback_cm) {
    const auto r = raw(key);
    const double v = r ? units::parse_length_cm(*r) : fallback_cm;
    record(key, format_double(v) + "cm");
    return v;
  }

  double temperature_k(const std::string& key, double fallback) {
    const auto r = raw(key);
    const double v = r ? units::parse_temperature_k(*r) : fallback;
    record(key, format_double(v) + "K");
    return v;
  }

  double frequency(const std::string& key, double fallback) {
    const auto r = raw(key);
    const double v = r ? units::parse_frequency(*r) : fallback;
    record(key, format_double(v) + "s^-1");
    return v;
  }

  double number(const std::string& key, double fallback) {
    const auto r = raw(key);
    const double v = r ? units::parse_number(*r) : fallback;
    record(key, format_double(v));
    return v;
  }

  double time_s(const std::string& key, double fallback) {
    const auto r = raw(key);
    const double v = r ? units::parse_time_s(*r) : fallback;
    record(key, format_double(v) + "s");
    return v;
  }

  int count(const std::string& key, int fallback) {
    const auto r = raw(key);
    const double v = r ? units::parse_number(*r) : fallback;
    const int k = static_cast<int>(v);
    if (k < 1 || k != v) {
      throw ConfigError("'" + key + "' must be a positive integer");
    }
    record(key, std::to_string(k));
    return k;
  }

  bool flag_bool(const std::string& key, bool fallback) {
    const auto r = raw(key);
    bool v = fallback;
    if (r) {
      if (*r == "true" || *r == "1") v = true;
      else if (*r == "false" || *r == "0") v = false;
      else throw ConfigError("'" + key + "' expects true/false");
    }
    record(key, v ? "true" : "false");
    return v;
  }

  std::vector<double> number_list(const std::string& key,
                                  const std::string& fallback) {
    const std::string v = raw(key).value_or(fallback);
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item.empty()) continue;
      out.push_back(units::parse_number(item));
    }
    if (out.empty()) throw ConfigError("'" + key + "' must list numbers");
    record(key, v);
    return out;
  }

  void record(const std::string& key, const std::string& value) {
    resolved_[key] = value;
  }

  const std::map<std::string, std::string>& resolved() const {
    return resolved_;
  }

 private:
  std::map<std::string, std::string> file_;
  std::map<std::string, std::string> flags_;
  std::map<std::string, std::string> resolved_;  // ordered: deterministic
};

double default_rel_tol() {
  if (const char* env = std::getenv("SPINRAD_REL_TOL")) {
    return units::parse_number(env);
  }
  return 1e-8;
}

Material resolve_material(Settings& s) {
  const std::string name = s.text("material", "SiO2");
  const double radius = s.length_cm("radius", 5e-6);  // 50 nm
  if (name == "custom") {
    Material m;
    m.name = name;
    m.radius = radius;
    if (s.has("conductivity")) {
      m = Material::drude("custom", radius, s.number("conductivity", 0.0));
    } else if (s.has("slope_e")) {
      m.slope_e = s.number("slope_e", 0.0);
    } else {
      throw ConfigError("custom material needs slope_e or conductivity");
    }
    if (s.has("slope_m")) m.slope_m = s.number("slope_m", 0.0);
    m.validate();
    return m;
  }
  Material m = Material::preset(name, radius);
  if (s.has("slope_m")) m.slope_m = s.number("slope_m", 0.0);
  m.validate();
  return m;
}

SystemConfig resolve_system(Settings& s) {
  SystemConfig cfg;
  cfg.material = resolve_material(s);
  cfg.plate.refractive_index = s.number("n", 3.0);
  cfg.z0 = s.length_cm("z0", 1e-4);  // 1 um
  cfg.omega_rot = s.frequency("omega", 1e7);
  cfg.thermal.t_particle = s.temperature_k("t1", 1.0);
  cfg.thermal.t_environment = s.temperature_k("t2", 1.0);
  cfg.validate();
  return cfg;
}

class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {
    if (path_ != "-") {
      file_.open(path_, std::ios::binary);
      if (!file_) throw ConfigError("cannot open output '" + path_ + "'");
    }
  }
  std::ostream& stream() { return path_ == "-" ? std::cout : file_; }

 private:
  std::string path_;
  std::ofstream file_;
};

void write_embedded_config(std::ostream& os, const std::string& command,
                           const Settings& s) {
  os << "# spinrad output\n";
  os << "# config: command = " << command << "\n";
  for (const auto& [k, v] : s.resolved()) {
    os << "# config: " << k << " = " << v << "\n";
  }
}

void warn_if_outside_small_x(const SystemConfig& cfg) {
  const double x = x_small_parameter(cfg);
  if (x > 0.1) {
    std::cerr << "warning: n z0 max(omega, theta1, theta2)/c = "
              << format_double(x)
              << " exceeds 0.1; closed-form rates assume this << 1\n";
  }
}

/// Order-deterministic parallel map: results land by index.
template <typename Fn>
void parallel_for(size_t count, Fn&& fn) {
  const size_t workers =
      std::min<size_t>(std::max(1u, std::thread::hardware_concurrency()),
                       count);
  if (workers <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

// Reference intensity factors (W) for the default table configuration
// (SiO2, 50 nm): rows T2 = 0.1, 1, 10, 100 K; columns n = 3, 10, 30, 50.
struct TableReference {
  double t2, n, i0_w;
};
const TableReference kReferenceTable[] = {
    {0.1, 3, 1.3e-32},  {0.1, 10, 5.9e-32},  {0.1, 30, 1.9e-31},
    {0.1, 50, 6.4e-31}, {1, 3, 1.3e-26},     {1, 10, 5.9e-26},
    {1, 30, 1.9e-25},   {1, 50, 6.4e-25},    {10, 3, 1.3e-20},
    {10, 10, 5.9e-20},  {10, 30, 1.9e-19},   {10, 50, 6.4e-19},
    {100, 3, 1.3e-14},  {100, 10, 5.9e-14},  {100, 30, 1.9e-13},
    {100, 50, 6.4e-13},
};

std::optional<double> table_reference(const Material& m, double t2, double n) {
  if (m.name != "SiO2" || m.slope_e != 3.6e-15 ||
      std::abs(m.radius - 5e-6) > 1e-18) {
    return std::nullopt;
  }
  for (const auto& ref : kReferenceTable) {
    if (ref.t2 == t2 && ref.n == n) return ref.i0_w;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

int cmd_psi(Settings& s) {
  const double rel_tol = s.number("rel_tol", default_rel_tol());
  struct Row {
    double n, x;
  };
  std::vector<Row> grid;

  if (s.has("psi.x_min") || s.has("psi.x_max")) {
    const double n = s.number("psi.n", 3.0);
    const double x0 = s.number("psi.x_min", 0.0);
    const double x1 = s.number("psi.x_max", 10.0);
    const int points = s.count("psi.points", 201);
    for (int i = 0; i < points; ++i) {
      const double x =
          points == 1 ? x0 : x0 + (x1 - x0) * i / double(points - 1);
      grid.push_back({n, x});
    }
  } else if (s.has("psi.n_min") || s.has("psi.n_max")) {
    const double n0 = s.number("psi.n_min", 1.0);
    const double n1 = s.number("psi.n_max", 50.0);
    const int points = s.count("psi.points", 100);
    const double x = s.number("psi.x", 0.0);
    for (int i = 0; i < points; ++i) {
      const double n =
          points == 1 ? n0 : n0 + (n1 - n0) * i / double(points - 1);
      grid.push_back({n, x});
    }
  } else {
    grid.push_back({s.number("psi.n", 3.0), s.number("psi.x", 0.0)});
  }

  struct Result {
    KernelValue e, m;
  };
  std::vector<Result> results(grid.size());
  std::atomic<bool> failed{false};
  parallel_for(grid.size(), [&](size_t i) {
    try {
      results[i].e = psi_e(grid[i].n, grid[i].x, rel_tol);
      results[i].m = psi_m(grid[i].n, grid[i].x, rel_tol);
    } catch (...) {
      failed = true;
    }
  });
  if (failed) {
    throw NumericalError("psi: kernel evaluation failed on the grid", 0, 0);
  }

  Output out(s.raw("output").value_or("-"));  // path stays out of the embed
  auto& os = out.stream();
  write_embedded_config(os, "psi", s);
  os << "n,x,psi_e,psi_m,err_e,err_m\n";
  for (size_t i = 0; i < grid.size(); ++i) {
    os << format_double(grid[i].n) << ',' << format_double(grid[i].x) << ','
       << format_double(results[i].e.value) << ','
       << format_double(results[i].m.value) << ','
       << format_double(results[i].e.abs_error_estimate) << ','
       << format_double(results[i].m.abs_error_estimate) << "\n";
  }
  return 0;
}

int cmd_rates(Settings& s) {
  const SystemConfig cfg = resolve_system(s);
  s.number("rel_tol", default_rel_tol());
  warn_if_outside_small_x(cfg);
  const RateReport rep = rate_report(cfg);

  Output out(s.raw("output").value_or("-"));  // path stays out of the embed
  auto& os = out.stream();
  write_embedded_config(os, "rates", s);
  os << "I_W,Mz_erg,dQdt_W,residual\n";
  os << format_double(rep.intensity * cgs::watt_per_erg_s) << ','
     << format_double(rep.torque) << ','
     << format_double(rep.heating * cgs::watt_per_erg_s) << ','
     << format_double(rep.balance_residual) << "\n";
  return 0;
}

int cmd_equilibrium(Settings& s) {
  const SystemConfig cfg = resolve_system(s);
  const double rel_tol = s.number("rel_tol", default_rel_tol());
  const EquilibriumResult res =
      solve_equilibrium(cfg, std::clamp(rel_tol * 1e-1, 1e-12, 1e-4));

  Output out(s.raw("output").value_or("-"));  // path stays out of the embed
  auto& os = out.stream();
  write_embedded_config(os, "equilibrium", s);
  os << "theta1_star = " << format_double(res.theta1_star) << "s^-1\n";
  os << "t1_star = " << format_double(res.t1_star) << "K\n";
  if (cfg.omega_rot > 0.0) {
    os << "theta1_over_omega = "
       << format_double(res.theta1_star / cfg.omega_rot) << "\n";
  }
  os << "intensity_eq = "
     << format_double(res.intensity_eq * cgs::watt_per_erg_s) << "W\n";
  os << "iterations = " << res.iterations << "\n";
  os << "residual = " << format_double(res.residual) << "\n";
  return 0;
}

int cmd_curve(Settings& s) {
  Material material = resolve_material(s);
  const double n = s.number("n", 3.0);
  const double t2 = s.temperature_k("t2", 1.0);
  const double rel_tol = s.number("rel_tol", default_rel_tol());
  const std::string mode_text = s.text("curve.mode", "equilibrium");
  CurveMode mode;
  if (mode_text == "equilibrium") mode = CurveMode::equilibrium;
  else if (mode_text == "fixed") mode = CurveMode::fixed_t1_equals_t2;
  else throw ConfigError("curve.mode must be 'equilibrium' or 'fixed'");

  const double from = s.number("curve.from", 1e-2);
  const double to = s.number("curve.to", 1e2);
  const int points = s.count("curve.points", 200);
  if (!(from > 0.0) || !(to > from)) {
    throw ConfigError("curve range must satisfy 0 < from < to");
  }
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) {
    grid[i] = points == 1
                  ? from
                  : from * std::pow(to / from, i / double(points - 1));
  }

  const auto pts = normalized_curve(n, material, t2, grid, mode, rel_tol);

  Output out(s.raw("output").value_or("-"));  // path stays out of the embed
  auto& os = out.stream();
  write_embedded_config(os, "curve", s);
  os << "omega_over_theta2,i_over_i0,t1_over_t2\n";
  for (const auto& p : pts) {
    os << format_double(p.omega_over_theta2) << ','
       << format_double(p.intensity_over_i0) << ','
       << format_double(p.t1_over_t2) << "\n";
  }
  return 0;
}

int cmd_table(Settings& s) {
  Material material = resolve_material(s);
  const double rel_tol = s.number("rel_tol", default_rel_tol());
  const auto n_list = s.number_list("table.n_list", "3,10,30,50");
  const auto t2_list = s.number_list("table.t2_list", "0.1,1,10,100");

  // cells fan out to the pool; assembly is by index, so output order is fixed
  struct Cell {
    double t2, n, i0 = 0.0;
  };
  std::vector<Cell> cells;
  for (double t2 : t2_list)
    for (double n : n_list) cells.push_back({t2, n});
  std::atomic<bool> failed{false};
  parallel_for(cells.size(), [&](size_t i) {
    try {
      cells[i].i0 = i0_factor(material, cells[i].n, cells[i].t2, rel_tol);
    } catch (...) {
      failed = true;
    }
  });
  if (failed) throw NumericalError("table: cell evaluation failed", 0, 0);

  Output out(s.raw("output").value_or("-"));  // path stays out of the embed
  auto& os = out.stream();
  write_embedded_config(os, "table", s);
  os << "t2_K,n,i0_W,ref_W,rel_dev\n";
  for (const auto& c : cells) {
    os << format_double(c.t2) << ',' << format_double(c.n) << ','
       << format_double(c.i0);
    if (const auto ref = table_reference(material, c.t2, c.n)) {
      os << ',' << format_double(*ref) << ','
         << format_double(c.i0 / *ref - 1.0);
    } else {
      os << ",,";
    }
    os << "\n";
  }
  return 0;
}

int cmd_dynamics(Settings& s) {
  const SystemConfig cfg = resolve_system(s);
  const double rel_tol = s.number("rel_tol", default_rel_tol());
  const double t_end = s.time_s("dynamics.t_end", 1e13);
  const double stride = s.time_s("dynamics.stride", t_end / 1024.0);

  BodyProperties body;
  if (s.has("dynamics.inertia") || s.has("dynamics.heat_capacity")) {
    body.moment_of_inertia = s.number("dynamics.inertia", 0.0);
    body.heat_capacity = HeatCapacity(s.number("dynamics.heat_capacity", 0.0));
  } else {
    const double density = s.number("dynamics.density", 2.2);
    const double cp = s.number("dynamics.specific_heat", 1.245e7);
    body = BodyProperties::solid_sphere(cfg.material, density, cp);
  }
  body.validate();
  warn_if_outside_small_x(cfg);

  const auto traj = evolve(cfg, body, t_end, stride, rel_tol);

  Output out(s.raw("output").value_or("-"));  // path stays out of the embed
  auto& os = out.stream();
  write_embedded_config(os, "dynamics", s);
  os << "t_s,omega,T1_K,I_W,E_kin_erg\n";
  for (const auto& p : traj) {
    os << format_double(p.time) << ',' << format_double(p.omega) << ','
       << format_double(p.t_particle) << ','
       << format_double(p.intensity * cgs::watt_per_erg_s) << ','
       << format_double(p.kinetic_energy) << "\n";
  }
  return 0;
}

int cmd_sweep(Settings& s) {
  const std::string axis = s.text("sweep.axis", "omega");
  const std::set<std::string> axes = {"omega", "t1", "t2", "z0", "n", "radius"};
  if (!axes.count(axis)) {
    throw ConfigError("sweep.axis must be one of omega,t1,t2,z0,n,radius");
  }
  const double from = s.number("sweep.from", 1e5);
  const double to = s.number("sweep.to", 1e8);
  const int points = s.count("sweep.points", 50);
  const bool log_axis = s.flag_bool("sweep.log", true);
  if (points > 1 && log_axis && !(from > 0.0)) {
    throw ConfigError("log sweep needs from > 0");
  }

  const SystemConfig base = resolve_system(s);

  std::vector<double> values(points);
  for (int i = 0; i < points; ++i) {
    if (points == 1) {
      values[i] = from;
    } else if (log_axis) {
      values[i] = from * std::pow(to / from, i / double(points - 1));
    } else {
      values[i] = from + (to - from) * i / double(points - 1);
    }
  }

  std::vector<RateReport> reports(points);
  std::atomic<bool> failed{false};
  parallel_for(values.size(), [&](size_t i) {
    try {
      SystemConfig cfg = base;
      if (axis == "omega") cfg.omega_rot = values[i];
      else if (axis == "t1") cfg.thermal.t_particle = values[i];
      else if (axis == "t2") cfg.thermal.t_environment = values[i];
      else if (axis == "z0") cfg.z0 = values[i];
      else if (axis == "n") cfg.plate.refractive_index = values[i];
      else if (axis == "radius") cfg.material.radius = values[i];
      reports[i] = rate_report(cfg);
    } catch (...) {
      failed = true;
    }
  });
  if (failed) throw NumericalError("sweep: point evaluation failed", 0, 0);

  Output out(s.raw("output").value_or("-"));  // path stays out of the embed
  auto& os = out.stream();
  write_embedded_config(os, "sweep", s);
  os << axis << ",I_W,Mz_erg,dQdt_W,residual\n";
  for (int i = 0; i < points; ++i) {
    os << format_double(values[i]) << ','
       << format_double(reports[i].intensity * cgs::watt_per_erg_s) << ','
       << format_double(reports[i].torque) << ','
       << format_double(reports[i].heating * cgs::watt_per_erg_s) << ','
       << format_double(reports[i].balance_residual) << "\n";
  }
  return 0;
}

struct FlagSpec {
  std::string flag;
  std::string key;
  std::string help;
};

void add_flags(CLI::App* app, Settings& s,
               const std::vector<FlagSpec>& specs) {
  for (const auto& spec : specs) {
    const std::string key = spec.key;
    Settings* settings = &s;
    app->add_option_function<std::string>(
           spec.flag,
           [settings, key](const std::string& v) {
             settings->set_flag(key, v);
           },
           spec.help)
        ->expected(1);
  }
}

const std::vector<FlagSpec> kCommonFlags = {
    {"--material", "material", "material preset: SiO2, graphite, custom"},
    {"--radius", "radius", "particle radius with unit (e.g. 50nm)"},
    {"--slope-e", "slope_e", "electric polarizability slope A_e (s)"},
    {"--slope-m", "slope_m", "magnetic polarizability slope A_m (s)"},
    {"--conductivity", "conductivity", "static conductivity (1/s), Drude"},
    {"--n", "n", "plate refractive index"},
    {"--z0", "z0", "particle-surface distance with unit (e.g. 1um)"},
    {"--omega", "omega", "rotation angular velocity (1/s)"},
    {"--t1", "t1", "particle temperature (K)"},
    {"--t2", "t2", "plate/background temperature (K)"},
    {"--rel-tol", "rel_tol", "relative tolerance (env SPINRAD_REL_TOL)"},
    {"--output,-o", "output", "output path, '-' for stdout"},
};

}  // namespace

int run(const std::vector<std::string>& args) {
  Settings settings;
  std::string config_path;

  CLI::App app{"radiation, friction and heating of a particle spinning near "
               "a transparent dielectric plate"};
  app.require_subcommand(0, 1);
  app.add_option("--config", config_path,
                 "flat key = value config file; flags override");

  struct Cmd {
    CLI::App* app;
    int (*fn)(Settings&);
  };
  std::vector<Cmd> cmds;

  auto make = [&](const char* name, const char* help, int (*fn)(Settings&),
                  const std::vector<FlagSpec>& extra) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_flags(sub, settings, kCommonFlags);
    add_flags(sub, settings, extra);
    sub->add_option("--config", config_path, "config file");
    cmds.push_back({sub, fn});
  };

  make("psi", "surface response kernels psi_e, psi_m", cmd_psi,
       {{"--psi-n", "psi.n", "refractive index for a point/x-scan"},
        {"--x", "psi.x", "kernel argument omega z0/c"},
        {"--n-min", "psi.n_min", "n scan start"},
        {"--n-max", "psi.n_max", "n scan end"},
        {"--x-min", "psi.x_min", "x scan start"},
        {"--x-max", "psi.x_max", "x scan end"},
        {"--points", "psi.points", "scan point count"}});
  make("rates", "closed-form intensity, torque, heating report", cmd_rates,
       {});
  make("equilibrium", "effective temperature where heating vanishes",
       cmd_equilibrium, {});
  make("curve", "normalized intensity/temperature vs omega/theta2", cmd_curve,
       {{"--mode", "curve.mode", "equilibrium | fixed"},
        {"--from", "curve.from", "omega/theta2 start"},
        {"--to", "curve.to", "omega/theta2 end"},
        {"--points", "curve.points", "grid size"}});
  make("table", "intensity factor matrix over (T2, n)", cmd_table,
       {{"--n-list", "table.n_list", "comma-separated refractive indices"},
        {"--t2-list", "table.t2_list", "comma-separated temperatures (K)"}});
  make("dynamics", "spin-down / heating trajectory CSV", cmd_dynamics,
       {{"--t-end", "dynamics.t_end", "integration end time (s)"},
        {"--stride", "dynamics.stride", "output sampling stride (s)"},
        {"--inertia", "dynamics.inertia", "moment of inertia (g cm^2)"},
        {"--heat-capacity", "dynamics.heat_capacity",
         "heat capacity (erg/K)"},
        {"--density", "dynamics.density", "density (g/cm^3) for sphere body"},
        {"--specific-heat", "dynamics.specific_heat",
         "specific heat (erg/g/K) for sphere body"}});
  make("sweep", "closed-form rates along one config axis", cmd_sweep,
       {{"--axis", "sweep.axis", "omega|t1|t2|z0|n|radius"},
        {"--from", "sweep.from", "axis start"},
        {"--to", "sweep.to", "axis end"},
        {"--points", "sweep.points", "grid size"},
        {"--log", "sweep.log", "true/false log spacing"}});

  try {
    // CLI11's vector overload consumes a reversed argument list
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error[config]: " << e.what() << "\n";
    return 2;
  }

  try {
    if (!config_path.empty()) {
      settings.set_file(read_config_file(config_path));
    }
    branch_self_test();
    for (const auto& c : cmds) {
      if (c.app->parsed()) return c.fn(settings);
    }
    std::cerr << "error[config]: no subcommand given (try --help)\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "error[numeric]: " << e.what() << "\n";
    return 3;
  } catch (const ConfigError& e) {
    std::cerr << "error[config]: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error[config]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error[numeric]: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace spinrad::cli
