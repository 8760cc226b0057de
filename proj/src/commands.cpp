#include "barrier/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "barrier/coefficients.hpp"
#include "barrier/eigenfunctions.hpp"
#include "barrier/greens.hpp"
#include "barrier/quadrature.hpp"
#include "barrier/test_space.hpp"
#include "barrier/transforms.hpp"

namespace barrier {

namespace {

const complex I(0.0, 1.0);

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("bad numeric value for " + key + ": '" + v + "'");
  }
}

int parse_int(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    const int n = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return n;
  } catch (const std::exception&) {
    throw ConfigError("bad integer value for " + key + ": '" + v + "'");
  }
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
  return g;
}

std::string config_summary(const RunConfig& cfg) {
  std::ostringstream os;
  os << "m=" << format_double(cfg.phys.m) << " hbar=" << format_double(cfg.phys.hbar)
     << " v0=" << format_double(cfg.phys.v0) << " a=" << format_double(cfg.phys.a)
     << " b=" << format_double(cfg.phys.b);
  return os.str();
}

nlohmann::json config_json(const RunConfig& cfg) {
  return {{"m", cfg.phys.m}, {"hbar", cfg.phys.hbar}, {"v0", cfg.phys.v0},
          {"a", cfg.phys.a}, {"b", cfg.phys.b}};
}

ChiFamily parse_family(const std::string& s) {
  if (s == "plus") return ChiFamily::plus;
  if (s == "minus") return ChiFamily::minus;
  if (s == "tilde") return ChiFamily::tilde;
  throw ConfigError("family must be plus|minus|tilde, got '" + s + "'");
}

Side parse_side(const std::string& s) {
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  throw ConfigError("side must be left|right, got '" + s + "'");
}

}  // namespace

double RunConfig::nan_default() {
  return std::numeric_limits<double>::quiet_NaN();
}

void RunConfig::set(const std::string& key, const std::string& value) {
  if (key == "m") phys.m = parse_double(key, value);
  else if (key == "hbar") phys.hbar = parse_double(key, value);
  else if (key == "v0") phys.v0 = parse_double(key, value);
  else if (key == "a") phys.a = parse_double(key, value);
  else if (key == "b") phys.b = parse_double(key, value);
  else if (key == "x_lo") x_lo = parse_double(key, value);
  else if (key == "x_hi") x_hi = parse_double(key, value);
  else if (key == "n_x") n_x = parse_int(key, value);
  else if (key == "k_lo") k_lo = parse_double(key, value);
  else if (key == "k_hi") k_hi = parse_double(key, value);
  else if (key == "n_k") n_k = parse_int(key, value);
  else if (key == "n_xx") n_xx = parse_int(key, value);
  else if (key == "family") family = value;
  else if (key == "side") side = value;
  else if (key == "energy") energy = parse_double(key, value);
  else if (key == "energy_im") energy_im = parse_double(key, value);
  else if (key == "center") center = parse_double(key, value);
  else if (key == "width") width = parse_double(key, value);
  else if (key == "momentum") momentum = parse_double(key, value);
  else if (key == "x0") x0 = parse_double(key, value);
  else if (key == "packet_width") packet_width = parse_double(key, value);
  else if (key == "p0") p0 = parse_double(key, value);
  else if (key == "t_final") t_final = parse_double(key, value);
  else if (key == "n_t") n_t = parse_int(key, value);
  else if (key == "format") format = value;
  else if (key == "out") out = value;
  else throw ConfigError("unknown config key '" + key + "'");
}

void RunConfig::validate() const {
  try {
    phys.validate();
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  if (n_x < 16 || n_k < 16 || n_xx < 16)
    throw ConfigError("node counts must be >= 16");
  if (!(x_hi > x_lo)) throw ConfigError("need x_hi > x_lo");
  if (!(k_hi > k_lo)) throw ConfigError("need k_hi > k_lo");
  if (!(width > 0.0) || !(packet_width > 0.0))
    throw ConfigError("packet widths must be > 0");
  if (!(t_final > 0.0) || n_t < 2)
    throw ConfigError("need t_final > 0 and n_t >= 2");
  if (format != "csv" && format != "json")
    throw ConfigError("format must be csv|json, got '" + format + "'");
  parse_family(family);
  parse_side(side);
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": expected key=value");
    cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

RunConfig load_config(const std::string& path) {
  RunConfig cfg;
  apply_config_file(cfg, path);
  return cfg;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string table_to_csv(const Table& t, const RunConfig& cfg) {
  std::ostringstream os;
  os << "# " << config_summary(cfg) << "\n";
  os << "# quantity: " << t.title << "\n";
  for (const auto& n : t.notes) os << "# " << n << "\n";
  for (size_t i = 0; i < t.columns.size(); ++i)
    os << t.columns[i] << (i + 1 < t.columns.size() ? "," : "\n");
  for (const auto& row : t.rows)
    for (size_t i = 0; i < row.size(); ++i)
      os << format_double(row[i]) << (i + 1 < row.size() ? "," : "\n");
  return os.str();
}

std::string table_to_json(const Table& t, const RunConfig& cfg) {
  nlohmann::json j;
  j["config"] = config_json(cfg);
  j["quantity"] = t.title;
  if (!t.notes.empty()) j["notes"] = t.notes;
  j["columns"] = t.columns;
  j["rows"] = t.rows;
  return j.dump(2) + "\n";
}

void emit_text(const std::string& text, const RunConfig& cfg) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw ConfigError("cannot open output file '" + cfg.out + "'");
  f << text;
}

void emit_table(const Table& t, const RunConfig& cfg) {
  emit_text(cfg.format == "json" ? table_to_json(t, cfg)
                                 : table_to_csv(t, cfg),
            cfg);
}

Table cmd_coeffs(const RunConfig& cfg) {
  cfg.validate();
  Table t;
  t.title = "scattering amplitudes on the real wavenumber axis";
  t.columns = {"k",      "re_t",   "im_t",   "re_r_l", "im_r_l", "re_r_r",
               "im_r_r", "re_a_l", "im_a_l", "re_b_l", "im_b_l", "re_a_r",
               "im_a_r", "re_b_r", "im_b_r", "t2",     "rl2",    "unitarity_defect"};
  for (double k : linspace(cfg.k_lo, cfg.k_hi, cfg.n_k)) {
    if (std::abs(k) < 1e-10) continue;
    const auto cs = plus_coefficients(cfg.phys, energy_point_from_k(cfg.phys, k));
    const double t2 = std::norm(cs.t), rl2 = std::norm(cs.r_l);
    t.rows.push_back({k,
                      cs.t.real(),   cs.t.imag(),
                      cs.r_l.real(), cs.r_l.imag(),
                      cs.r_r.real(), cs.r_r.imag(),
                      cs.a_l.real(), cs.a_l.imag(),
                      cs.b_l.real(), cs.b_l.imag(),
                      cs.a_r.real(), cs.a_r.imag(),
                      cs.b_r.real(), cs.b_r.imag(),
                      t2, rl2, std::abs(t2 + rl2 - 1.0)});
  }
  return t;
}

Table cmd_eigen(const RunConfig& cfg) {
  cfg.validate();
  const ChiFamily fam = parse_family(cfg.family);
  const Side side = parse_side(cfg.side);
  const complex e(cfg.energy, cfg.energy_im);
  const ChiEvaluator ev(cfg.phys, fam, energy_point(cfg.phys, e));
  Table t;
  t.title = "piecewise eigensolution sampled on the x grid";
  t.notes.push_back("family=" + cfg.family + " side=" + cfg.side +
                    " energy=" + format_double(cfg.energy) + "+" +
                    format_double(cfg.energy_im) + "i");
  t.columns = {"x", "re_chi", "im_chi", "re_dchi", "im_dchi"};
  for (double x : linspace(cfg.x_lo, cfg.x_hi, cfg.n_x)) {
    const auto [v, d] = ev.value_and_derivative(side, x);
    t.rows.push_back({x, v.real(), v.imag(), d.real(), d.imag()});
  }
  return t;
}

Table cmd_green(const RunConfig& cfg) {
  cfg.validate();
  const complex e(cfg.energy, cfg.energy_im);
  const bool on_cut = (cfg.energy_im == 0.0 && cfg.energy >= 0.0);
  const complex k_unified =
      on_cut ? complex(std::sqrt(2.0 * cfg.phys.m * cfg.energy) / cfg.phys.hbar)
             : [&] {
                 const complex k = energy_point(cfg.phys, e).k;
                 return std::imag(k) > 0.0 ? k : -k;
               }();
  Table t;
  t.title = "resolvent kernel on the (x, x') grid";
  t.notes.push_back("energy=" + format_double(cfg.energy) + "+" +
                    format_double(cfg.energy_im) + "i" +
                    (on_cut ? " (boundary value via the wavenumber form)" : ""));
  t.columns = {"x", "x_prime", "re_g", "im_g", "re_g_k", "im_g_k", "defect"};
  const auto grid = linspace(cfg.x_lo, cfg.x_hi, cfg.n_xx);
  for (double x : grid) {
    for (double xp : grid) {
      const complex gk = green_k(cfg.phys, x, xp, k_unified).value;
      const complex g = on_cut ? gk : green(cfg.phys, x, xp, e).value;
      t.rows.push_back({x, xp, g.real(), g.imag(), gk.real(), gk.imag(),
                        std::abs(g - gk)});
    }
  }
  return t;
}

Table cmd_transform(const RunConfig& cfg) {
  cfg.validate();
  const ChiFamily fam = parse_family(cfg.family);
  if (fam == ChiFamily::tilde)
    throw ConfigError("transform: family must be plus or minus");
  const TestFunction phi(cfg.phys, cfg.center, cfg.width, cfg.momentum,
                         0.1 * cfg.phys.width());
  const auto spec = QuadratureSpec::for_function(cfg.phys, phi);
  const auto f = forward_energy(cfg.phys, sample(cfg.phys, phi, spec), fam, spec);
  Table t;
  t.title = "spectral image of a smooth packet (left/right channels)";
  t.notes.push_back("family=" + cfg.family + " center=" + format_double(cfg.center) +
                    " width=" + format_double(cfg.width) +
                    " momentum=" + format_double(cfg.momentum));
  t.columns = {"k", "e", "re_f_l", "im_f_l", "re_f_r", "im_f_r"};
  const size_t stride =
      std::max<size_t>(1, f.k_grid.size() / size_t(std::max(cfg.n_k, 2)));
  for (size_t i = 0; i < f.k_grid.size(); i += stride)
    t.rows.push_back({f.k_grid[i], f.grid[i],
                      f.left_values[i].real(), f.left_values[i].imag(),
                      f.right_values[i].real(), f.right_values[i].imag()});
  return t;
}

VerifyReport cmd_verify(const RunConfig& cfg, const std::string& suite,
                        const VerifyOptions& opts) {
  cfg.validate();
  VerifyReport r;
  r.checks = run_suite(cfg.phys, suite, opts);
  for (const auto& c : r.checks)
    if (!c.pass) r.all_pass = false;
  return r;
}

std::string report_to_json(const VerifyReport& r, const RunConfig& cfg) {
  nlohmann::json j;
  j["config"] = config_json(cfg);
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks)
    j["checks"].push_back({{"name", c.name},
                           {"anchor", c.anchor},
                           {"value", c.value},
                           {"tolerance", c.tolerance},
                           {"pass", c.pass}});
  return j.dump(2) + "\n";
}

std::string report_to_csv(const VerifyReport& r, const RunConfig& cfg) {
  std::ostringstream os;
  os << "# " << config_summary(cfg) << "\n";
  os << "name,anchor,value,tolerance,pass\n";
  for (const auto& c : r.checks)
    os << c.name << ",\"" << c.anchor << "\"," << format_double(c.value) << ","
       << format_double(c.tolerance) << "," << (c.pass ? 1 : 0) << "\n";
  return os.str();
}

WavepacketResult cmd_wavepacket(const RunConfig& cfg) {
  cfg.validate();
  const PhysicalConfig& ph = cfg.phys;
  const double x0 = std::isnan(cfg.x0) ? ph.a - 20.0 : cfg.x0;
  const double p0 = std::isnan(cfg.p0) ? std::sqrt(ph.m * ph.v0) : cfg.p0;
  const TestFunction phi(ph, x0, cfg.packet_width, p0, 0.1 * ph.width());

  QuadratureSpec spec = QuadratureSpec::for_function(ph, phi);
  // widen the window so the packet stays inside over the whole evolution
  const double travel = std::abs(p0) / ph.m * cfg.t_final;
  spec.x_lo = std::min(spec.x_lo, x0 - 15.0);
  spec.x_hi = std::max(spec.x_hi, ph.b + travel + 15.0);
  spec.n_x = std::max(
      1025, int(10.0 * spec.k_max * (spec.x_hi - spec.x_lo) / (2.0 * pi)) + 1);
  if (spec.n_x % 2 == 0) ++spec.n_x;

  const auto sphi = sample(ph, phi, spec);
  const SpectralTransformer tr(ph, ChiFamily::minus, spec);
  const auto f = tr.forward(sphi);

  WavepacketResult r;
  r.table.title = "wave-packet density snapshots under e^{-iEt/hbar}";
  r.table.columns = {"x"};
  std::vector<SampledFunction> snaps;
  for (int j = 0; j < cfg.n_t; ++j) {
    const double tt = cfg.t_final * j / (cfg.n_t - 1);
    snaps.push_back(tr.evolve(f, tt));
    r.table.columns.push_back("density_t" + format_double(tt));
  }
  r.t0_roundtrip = l2_distance(snaps.front(), sphi) /
                   std::max(l2_norm(sphi), 1e-300);

  // thin the emitted grid to roughly n_x rows
  const size_t stride =
      std::max<size_t>(1, snaps[0].grid.size() / size_t(cfg.n_x));
  for (size_t i = 0; i < snaps[0].grid.size(); i += stride) {
    std::vector<double> row = {snaps[0].grid[i]};
    for (const auto& s : snaps) row.push_back(std::norm(s.values[i]));
    r.table.rows.push_back(row);
  }

  // transmitted mass: |phi(x, t_final)|^2 integrated over x > b
  {
    const auto& last = snaps.back();
    const double h = last.spacing();
    size_t j0 = 0;
    while (j0 < last.grid.size() && last.grid[j0] <= ph.b) ++j0;
    size_t n = last.grid.size() - j0;
    if (n % 2 == 0) {
      ++j0;
      --n;
    }
    const auto w = simpson_weights(int(n), h);
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) acc += w[i] * std::norm(last.values[j0 + i]);
    const double total = l2_norm(sphi);
    r.transmitted_mass = acc / (total * total);
  }

  // flux-weighted |T|^2 prediction from the momentum content
  {
    const auto phat = fourier(ph, sphi, spec);
    const auto wp = simpson_weights(int(phat.grid.size()), phat.spacing());
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < phat.grid.size(); ++i) {
      const double p = phat.grid[i];
      const double w2 = wp[i] * std::norm(phat.values[i]);
      den += w2;
      if (p > 1e-9) {
        const auto cs =
            plus_coefficients(ph, energy_point_from_k(ph, p / ph.hbar));
        num += w2 * std::norm(cs.t);
      }
    }
    r.predicted_mass = num / den;
  }
  r.table.notes.push_back("transmitted_mass=" +
                          format_double(r.transmitted_mass));
  r.table.notes.push_back("predicted_mass=" + format_double(r.predicted_mass));
  r.table.notes.push_back("t0_roundtrip=" + format_double(r.t0_roundtrip));
  return r;
}

FreeLimitResult cmd_free_limit(const RunConfig& cfg) {
  cfg.validate();
  FreeLimitResult r;
  r.table.title = "defects of the zero-height limit against free motion";
  r.table.columns = {"v0", "max_t_defect", "max_rl_defect", "l2_distance"};
  for (double v0 : {1.0, 0.1, 0.01, 1e-4}) {
    PhysicalConfig ph = cfg.phys;
    ph.v0 = v0;

    double td = 0.0, rd = 0.0;
    for (double k : linspace(0.5, 10.0, 200)) {
      const auto cs = plus_coefficients(ph, energy_point_from_k(ph, k));
      td = std::max(td, std::abs(cs.t - 1.0));
      rd = std::max(rd, std::abs(cs.r_l));
    }

    const TestFunction phi(ph, 0.0, 1.5, 3.0, 0.1 * ph.width());
    const auto spec = QuadratureSpec::for_function(ph, phi);
    const auto sphi = sample(ph, phi, spec);
    const SpectralTransformer tr(ph, ChiFamily::plus, spec);
    const auto f = tr.forward(sphi);
    const auto wx = simpson_weights(int(sphi.grid.size()), sphi.spacing());
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < f.k_grid.size(); ++i) {
      const double k = f.k_grid[i];
      complex hat_p = 0.0, hat_m = 0.0;
      for (size_t j = 0; j < sphi.grid.size(); ++j) {
        const complex w = wx[j] * sphi.values[j];
        hat_p += w * std::conj(plane_wave(ph, sphi.grid[j], ph.hbar * k));
        hat_m += w * std::conj(plane_wave(ph, sphi.grid[j], -ph.hbar * k));
      }
      const double s = std::sqrt(ph.m / (ph.hbar * k));
      const complex rl = s * hat_p, rr = s * hat_m;
      const double we = tr.energy_weights()[i];
      num += we * (std::norm(f.left_values[i] - rl) +
                   std::norm(f.right_values[i] - rr));
      den += we * (std::norm(rl) + std::norm(rr));
    }
    r.table.rows.push_back({v0, td, rd, std::sqrt(num / den)});
  }
  return r;
}

}  // namespace barrier
