#ifndef BARRIER_COMMANDS_HPP
#define BARRIER_COMMANDS_HPP

#include <string>
#include <vector>

#include "barrier/core.hpp"
#include "barrier/errors.hpp"
#include "barrier/verify.hpp"

namespace barrier {

// Bad key, bad value, or broken invariant in a run configuration; the CLI
// maps this to exit code 2.
struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

struct RunConfig {
  PhysicalConfig phys;

  // dataset grids
  double x_lo = -20.0, x_hi = 20.0;
  int n_x = 401;
  double k_lo = 0.1, k_hi = 10.0;
  int n_k = 201;
  int n_xx = 21;  // per-axis nodes of the (x, x') kernel grid

  // eigen / green parameters
  std::string family = "plus";
  std::string side = "left";
  double energy = 3.0, energy_im = 0.0;

  // transform packet
  double center = -5.0, width = 1.2, momentum = 4.0;

  // wavepacket demo; nan means "derive from the physics at run time"
  double x0 = nan_default();
  double packet_width = 3.0;
  double p0 = nan_default();
  double t_final = 12.0;
  int n_t = 5;

  std::string format = "csv";  // csv | json
  std::string out;             // empty writes to stdout

  static double nan_default();

  // assign one key=value pair; throws ConfigError on unknown keys/bad values
  void set(const std::string& key, const std::string& value);
  void validate() const;  // throws ConfigError
};

// plain-text key=value file, # starts a comment
RunConfig load_config(const std::string& path);
void apply_config_file(RunConfig& cfg, const std::string& path);

struct Table {
  std::string title;  // what the dataset is, carried into the header
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> notes;  // extra header lines (summaries etc.)
};

std::string format_double(double v);  // %.17g
std::string table_to_csv(const Table& t, const RunConfig& cfg);
std::string table_to_json(const Table& t, const RunConfig& cfg);
// writes to cfg.out, or stdout when empty
void emit_table(const Table& t, const RunConfig& cfg);
void emit_text(const std::string& text, const RunConfig& cfg);

Table cmd_coeffs(const RunConfig& cfg);
Table cmd_eigen(const RunConfig& cfg);
Table cmd_green(const RunConfig& cfg);
Table cmd_transform(const RunConfig& cfg);

struct WavepacketResult {
  Table table;
  double transmitted_mass = 0.0;
  double predicted_mass = 0.0;
  double t0_roundtrip = 0.0;  // L2 defect of the t=0 snapshot
};
WavepacketResult cmd_wavepacket(const RunConfig& cfg);

// fixed barrier-height sequence {1, 0.1, 0.01, 1e-4}
struct FreeLimitResult {
  Table table;  // columns: v0, max_t_defect, max_rl_defect, l2_distance
};
FreeLimitResult cmd_free_limit(const RunConfig& cfg);

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass = true;
};
VerifyReport cmd_verify(const RunConfig& cfg, const std::string& suite,
                        const VerifyOptions& opts);
std::string report_to_json(const VerifyReport& r, const RunConfig& cfg);
std::string report_to_csv(const VerifyReport& r, const RunConfig& cfg);

}  // namespace barrier

#endif
