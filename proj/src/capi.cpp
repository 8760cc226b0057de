#include "barrier1d.h"

#include <cstring>
#include <iostream>
#include <string>

#include "barrier/coefficients.hpp"
#include "barrier/commands.hpp"
#include "barrier/core.hpp"
#include "barrier/eigenfunctions.hpp"
#include "barrier/errors.hpp"
#include "barrier/greens.hpp"
#include "barrier/verify.hpp"

namespace {

thread_local std::string g_last_error;

struct ConfigHandle {
  barrier::RunConfig cfg;
};

const barrier::RunConfig& unwrap(const b1d_config* cfg) {
  return reinterpret_cast<const ConfigHandle*>(cfg)->cfg;
}

template <typename Fn>
b1d_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const barrier::ConfigError& e) {
    g_last_error = e.what();
    return B1D_ERR_CONFIG;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return B1D_ERR_CONFIG;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return B1D_ERR_NUMERIC;
  }
}

barrier::ChiFamily family_of(const char* s) {
  const std::string f = s ? s : "";
  if (f == "plus") return barrier::ChiFamily::plus;
  if (f == "minus") return barrier::ChiFamily::minus;
  if (f == "tilde") return barrier::ChiFamily::tilde;
  throw barrier::ConfigError("family must be plus|minus|tilde");
}

barrier::Side side_of(const char* s) {
  const std::string v = s ? s : "";
  if (v == "left") return barrier::Side::left;
  if (v == "right") return barrier::Side::right;
  throw barrier::ConfigError("side must be left|right");
}

}  // namespace

extern "C" {

b1d_config* b1d_config_create(void) {
  return reinterpret_cast<b1d_config*>(new ConfigHandle());
}

void b1d_config_free(b1d_config* cfg) {
  delete reinterpret_cast<ConfigHandle*>(cfg);
}

b1d_status b1d_config_set(b1d_config* cfg, const char* key, const char* value) {
  return guarded([&]() -> b1d_status {
    if (!cfg || !key || !value)
      throw barrier::ConfigError("null argument to b1d_config_set");
    reinterpret_cast<ConfigHandle*>(cfg)->cfg.set(key, value);
    return B1D_OK;
  });
}

b1d_status b1d_config_load(b1d_config* cfg, const char* path) {
  return guarded([&]() -> b1d_status {
    if (!cfg || !path)
      throw barrier::ConfigError("null argument to b1d_config_load");
    barrier::apply_config_file(reinterpret_cast<ConfigHandle*>(cfg)->cfg, path);
    return B1D_OK;
  });
}

const char* b1d_last_error(void) { return g_last_error.c_str(); }

b1d_status b1d_branch_sqrt(double re, double im, double* out_re,
                           double* out_im) {
  return guarded([&]() -> b1d_status {
    const barrier::complex w = barrier::branch_sqrt({re, im});
    *out_re = w.real();
    *out_im = w.imag();
    return B1D_OK;
  });
}

b1d_status b1d_coefficients(const b1d_config* cfg, double k_re, double k_im,
                            double out[16]) {
  return guarded([&]() -> b1d_status {
    const auto& rc = unwrap(cfg);
    rc.validate();
    const auto cs = barrier::plus_coefficients(
        rc.phys, barrier::energy_point_from_k(rc.phys, {k_re, k_im}));
    const barrier::complex vals[8] = {cs.t,   cs.r_l, cs.r_r, cs.a_l,
                                      cs.b_l, cs.a_r, cs.b_r, cs.q};
    for (int i = 0; i < 8; ++i) {
      out[2 * i] = vals[i].real();
      out[2 * i + 1] = vals[i].imag();
    }
    return B1D_OK;
  });
}

b1d_status b1d_chi(const b1d_config* cfg, const char* family, const char* side,
                   double e_re, double e_im, double x, double* v_re,
                   double* v_im, double* d_re, double* d_im) {
  return guarded([&]() -> b1d_status {
    const auto& rc = unwrap(cfg);
    rc.validate();
    const barrier::ChiEvaluator ev(
        rc.phys, family_of(family),
        barrier::energy_point(rc.phys, {e_re, e_im}));
    const auto [v, d] = ev.value_and_derivative(side_of(side), x);
    *v_re = v.real();
    *v_im = v.imag();
    *d_re = d.real();
    *d_im = d.imag();
    return B1D_OK;
  });
}

b1d_status b1d_green(const b1d_config* cfg, double x, double x_prime,
                     double e_re, double e_im, double* out_re,
                     double* out_im) {
  return guarded([&]() -> b1d_status {
    const auto& rc = unwrap(cfg);
    rc.validate();
    const auto g = barrier::green(rc.phys, x, x_prime, {e_re, e_im});
    *out_re = g.value.real();
    *out_im = g.value.imag();
    return B1D_OK;
  });
}

b1d_status b1d_green_k(const b1d_config* cfg, double x, double x_prime,
                       double k_re, double k_im, double* out_re,
                       double* out_im) {
  return guarded([&]() -> b1d_status {
    const auto& rc = unwrap(cfg);
    rc.validate();
    const auto g = barrier::green_k(rc.phys, x, x_prime, {k_re, k_im});
    *out_re = g.value.real();
    *out_im = g.value.imag();
    return B1D_OK;
  });
}

b1d_status b1d_cmd_coeffs(const b1d_config* cfg) {
  return guarded([&]() -> b1d_status {
    const auto& rc = unwrap(cfg);
    barrier::emit_table(barrier::cmd_coeffs(rc), rc);
    return B1D_OK;
  });
}

b1d_status b1d_cmd_eigen(const b1d_config* cfg) {
  return guarded([&]() -> b1d_status {
    const auto& rc = unwrap(cfg);
    barrier::emit_table(barrier::cmd_eigen(rc), rc);
    return B1D_OK;
  });
}

b1d_status b1d_cmd_green(const b1d_config* cfg) {
  return guarded([&]() -> b1d_status {
    const auto& rc = unwrap(cfg);
    barrier::emit_table(barrier::cmd_green(rc), rc);
    return B1D_OK;
  });
}

b1d_status b1d_cmd_transform(const b1d_config* cfg) {
  return guarded([&]() -> b1d_status {
    const auto& rc = unwrap(cfg);
    barrier::emit_table(barrier::cmd_transform(rc), rc);
    return B1D_OK;
  });
}

b1d_status b1d_cmd_wavepacket(const b1d_config* cfg) {
  return guarded([&]() -> b1d_status {
    const auto& rc = unwrap(cfg);
    barrier::emit_table(barrier::cmd_wavepacket(rc).table, rc);
    return B1D_OK;
  });
}

b1d_status b1d_cmd_free_limit(const b1d_config* cfg) {
  return guarded([&]() -> b1d_status {
    const auto& rc = unwrap(cfg);
    barrier::emit_table(barrier::cmd_free_limit(rc).table, rc);
    return B1D_OK;
  });
}

b1d_status b1d_cmd_verify(const b1d_config* cfg, const char* suite,
                          double inject_coeff_fault,
                          const char* const* tol_overrides, int n_overrides) {
  return guarded([&]() -> b1d_status {
    const auto& rc = unwrap(cfg);
    barrier::VerifyOptions opts;
    opts.coeff_fault = inject_coeff_fault;
    for (int i = 0; i < n_overrides; ++i) {
      const std::string kv = tol_overrides[i] ? tol_overrides[i] : "";
      const auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw barrier::ConfigError("tol override must be name=value, got '" +
                                   kv + "'");
      try {
        opts.tol_overrides[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
      } catch (const std::exception&) {
        throw barrier::ConfigError("bad tol override value in '" + kv + "'");
      }
    }
    const auto report =
        barrier::cmd_verify(rc, suite ? suite : "all", opts);
    barrier::emit_text(rc.format == "csv"
                           ? barrier::report_to_csv(report, rc)
                           : barrier::report_to_json(report, rc),
                       rc);
    if (!report.all_pass) {
      std::cerr << "failing checks:\n";
      for (const auto& c : report.checks)
        if (!c.pass)
          std::cerr << "  " << c.name << " (" << c.anchor
                    << "): value=" << barrier::format_double(c.value)
                    << " tolerance=" << barrier::format_double(c.tolerance)
                    << "\n";
      return B1D_CHECK_FAILED;
    }
    return B1D_OK;
  });
}

}  // extern "C"
