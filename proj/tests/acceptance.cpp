// Acceptance gate: one pass/fail line per top-level requirement, built from
// the verification suites plus the two end-to-end commands. Exits nonzero if
// any line fails.
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "barrier/commands.hpp"
#include "barrier/core.hpp"
#include "barrier/verify.hpp"

namespace {

int g_failures = 0;

void line(const std::string& label, bool ok, const std::string& detail) {
  std::printf("%s %s (%s)\n", ok ? "PASS" : "FAIL", label.c_str(),
              detail.c_str());
  if (!ok) ++g_failures;
}

// all named checks must exist and pass
void from_checks(const std::string& label,
                 const std::map<std::string, const barrier::CheckResult*>& by,
                 const std::vector<std::string>& names) {
  bool ok = true;
  std::string detail;
  for (const auto& n : names) {
    const auto it = by.find(n);
    const bool found = it != by.end();
    const bool pass = found && it->second->pass;
    ok = ok && pass;
    if (!detail.empty()) detail += ", ";
    detail += n + (pass ? "" : found ? " FAILED" : " MISSING");
  }
  line(label, ok, detail);
}

}  // namespace

int main() {
  const barrier::PhysicalConfig cfg;  // m = hbar = 1, v0 = 10, barrier [0, 1]
  const auto checks = barrier::run_suite(cfg, "all");
  std::map<std::string, const barrier::CheckResult*> by;
  for (const auto& c : checks) by[c.name] = &c;

  from_checks("scattering-unitarity", by, {"amplitude-unitarity"});
  from_checks("amplitude-symmetries", by,
              {"reflection-transmission-relation", "transmission-k-parity",
               "second-family-is-conjugate"});
  from_checks("independent-oracle-agreement", by,
              {"transfer-matrix-agreement",
               "subbarrier-transmission-closed-form",
               "resonance-transparency", "decaying-family-continuation"});
  from_checks("eigensolution-integrity", by,
              {"eigenfunction-c1-matching", "eigenfunction-ode-residual",
               "wronskian-transmission-identity",
               "wronskian-x-independence"});
  from_checks("resolvent-kernel", by,
              {"resolvent-defining-property",
               "green-region-unified-agreement", "green-kernel-symmetry",
               "first-resolvent-identity"});
  from_checks("spectral-measure", by,
              {"spectral-measure-diagonal", "spectral-measure-off-diagonal",
               "spectral-measure-basis-independence", "no-negative-spectrum",
               "spectrum-classification"});
  from_checks("diagonalizing-transforms", by,
              {"transform-round-trip-outgoing",
               "transform-round-trip-incoming", "transform-unitarity",
               "hamiltonian-diagonalization", "parseval-energy",
               "observable-moments"});
  from_checks("pointwise-expansions", by,
              {"pointwise-reconstruction", "fourier-round-trip",
               "fourier-pointwise-reconstruction", "delta-normalization"});
  from_checks("test-space", by,
              {"edge-flatness", "operator-word-stability",
               "canonical-commutators", "norm-recursion",
               "eigenfunctional-continuity-bound"});

  {
    barrier::RunConfig rc;
    const auto fl = barrier::cmd_free_limit(rc);
    bool monotone = true;
    double last = 0.0;
    for (size_t i = 0; i < fl.table.rows.size(); ++i) {
      for (size_t c = 1; c < fl.table.rows[i].size(); ++c) {
        if (i > 0 && !(fl.table.rows[i][c] < fl.table.rows[i - 1][c]))
          monotone = false;
        last = std::max(i + 1 == fl.table.rows.size() ? fl.table.rows[i][c]
                                                      : last,
                        last);
      }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "defects monotone=%s, final defect %.3e <= 1e-3",
                  monotone ? "yes" : "no", last);
    line("free-motion-limit", monotone && last <= 1e-3, buf);
  }

  {
    barrier::RunConfig rc;
    const auto wp = barrier::cmd_wavepacket(rc);
    const double dev = std::abs(wp.transmitted_mass - wp.predicted_mass);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "transmitted %.6f vs predicted %.6f, |diff| %.2e <= 0.05",
                  wp.transmitted_mass, wp.predicted_mass, dev);
    line("wave-packet-transmission", dev <= 0.05, buf);
  }

  if (g_failures > 0)
    std::printf("ACCEPTANCE: %d criterion(s) failed\n", g_failures);
  else
    std::printf("ACCEPTANCE: all 11 criteria pass\n");
  return g_failures == 0 ? 0 : 1;
}
