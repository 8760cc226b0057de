// barrier-rhs: datasets and verification for the 1D rectangular barrier,
// driven entirely through the C API.
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "barrier1d.h"

namespace {

struct FlagSet {
  std::vector<std::string> keys;
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;

  void attach(CLI::App& app) {
    const struct {
      const char* key;
      const char* help;
    } defs[] = {
        {"m", "particle mass"},
        {"hbar", "reduced Planck constant"},
        {"v0", "barrier height (>= 0)"},
        {"a", "left barrier edge"},
        {"b", "right barrier edge"},
        {"x_lo", "dataset x-grid lower bound"},
        {"x_hi", "dataset x-grid upper bound"},
        {"n_x", "dataset x-grid nodes (>= 16)"},
        {"k_lo", "dataset k-grid lower bound"},
        {"k_hi", "dataset k-grid upper bound"},
        {"n_k", "dataset k-grid nodes (>= 16)"},
        {"n_xx", "kernel grid nodes per axis (>= 16)"},
        {"family", "solution family: plus|minus|tilde"},
        {"side", "incidence side: left|right"},
        {"energy", "real part of the energy"},
        {"energy_im", "imaginary part of the energy"},
        {"center", "packet center (transform)"},
        {"width", "packet width (transform)"},
        {"momentum", "packet mean momentum (transform)"},
        {"x0", "wave-packet start position"},
        {"packet_width", "wave-packet width"},
        {"p0", "wave-packet mean momentum"},
        {"t_final", "wave-packet final time"},
        {"n_t", "number of snapshots (>= 2)"},
    };
    for (const auto& d : defs) {
      keys.push_back(d.key);
      options[d.key] =
          app.add_option("--" + std::string(d.key), values[d.key], d.help);
    }
  }

  // config file first, then flags, so flags win
  int apply(b1d_config* cfg) const {
    for (const auto& key : keys) {
      const auto* opt = options.at(key);
      if (opt->count() == 0) continue;
      if (b1d_config_set(cfg, key.c_str(), values.at(key).c_str()) != B1D_OK) {
        std::cerr << "error: " << b1d_last_error() << "\n";
        return B1D_ERR_CONFIG;
      }
    }
    return B1D_OK;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Scattering amplitudes, eigensolutions, resolvent kernels, spectral "
      "measures, and diagonalizing transforms of the 1D rectangular barrier"};
  app.require_subcommand(1);

  std::string config_path, format, out_path, suite = "all";
  double coeff_fault = 0.0;
  std::vector<std::string> tol_overrides;

  app.add_option("--config", config_path, "key=value config file");
  auto* format_opt =
      app.add_option("--format", format, "output format: csv|json")
          ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out_path, "output file (default stdout)");
  FlagSet flags;
  flags.attach(app);

  auto* c_coeffs = app.add_subcommand(
      "coeffs", "amplitudes T, R, A, B over the real k grid");
  auto* c_eigen =
      app.add_subcommand("eigen", "sample one piecewise eigensolution");
  auto* c_green =
      app.add_subcommand("green", "sample the resolvent kernel on (x, x')");
  auto* c_transform = app.add_subcommand(
      "transform", "spectral image of a smooth wave packet");
  auto* c_verify =
      app.add_subcommand("verify", "run the numerical identity checks");
  c_verify->add_option("suite", suite, "all|coeffs|eigen|green|measure|transforms|testspace")
      ->check(CLI::IsMember({"all", "coeffs", "eigen", "green", "measure",
                             "transforms", "testspace"}));
  c_verify->add_option("--tol-override", tol_overrides,
                       "replace one check tolerance, name=value (repeatable)");
  c_verify->add_option("--inject-coeff-fault", coeff_fault,
                       "perturb the transmission amplitude (self-test)")
      ->group("");  // hidden
  auto* c_wavepacket = app.add_subcommand(
      "wavepacket", "evolve a packet and report the transmitted mass");
  auto* c_free_limit = app.add_subcommand(
      "free-limit", "defects against free motion as the height tends to 0");
  for (auto* sub : {c_coeffs, c_eigen, c_green, c_transform, c_verify,
                    c_wavepacket, c_free_limit})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : B1D_ERR_CONFIG;
  }

  b1d_config* cfg = b1d_config_create();
  const auto fail = [&](int code) {
    b1d_config_free(cfg);
    return code;
  };

  if (!config_path.empty() &&
      b1d_config_load(cfg, config_path.c_str()) != B1D_OK) {
    std::cerr << "error: " << b1d_last_error() << "\n";
    return fail(B1D_ERR_CONFIG);
  }
  if (flags.apply(cfg) != B1D_OK) return fail(B1D_ERR_CONFIG);
  // the verification report defaults to json; datasets default to csv
  if (format_opt->count() == 0 && c_verify->parsed()) format = "json";
  if (!format.empty() &&
      b1d_config_set(cfg, "format", format.c_str()) != B1D_OK) {
    std::cerr << "error: " << b1d_last_error() << "\n";
    return fail(B1D_ERR_CONFIG);
  }
  if (!out_path.empty() &&
      b1d_config_set(cfg, "out", out_path.c_str()) != B1D_OK) {
    std::cerr << "error: " << b1d_last_error() << "\n";
    return fail(B1D_ERR_CONFIG);
  }

  b1d_status st = B1D_OK;
  if (c_coeffs->parsed()) st = b1d_cmd_coeffs(cfg);
  else if (c_eigen->parsed()) st = b1d_cmd_eigen(cfg);
  else if (c_green->parsed()) st = b1d_cmd_green(cfg);
  else if (c_transform->parsed()) st = b1d_cmd_transform(cfg);
  else if (c_wavepacket->parsed()) st = b1d_cmd_wavepacket(cfg);
  else if (c_free_limit->parsed()) st = b1d_cmd_free_limit(cfg);
  else if (c_verify->parsed()) {
    std::vector<const char*> ov;
    for (const auto& s : tol_overrides) ov.push_back(s.c_str());
    st = b1d_cmd_verify(cfg, suite.c_str(), coeff_fault,
                        ov.empty() ? nullptr : ov.data(), int(ov.size()));
  }

  if (st == B1D_ERR_CONFIG || st == B1D_ERR_NUMERIC)
    std::cerr << "error: " << b1d_last_error() << "\n";
  return fail(st);
}
