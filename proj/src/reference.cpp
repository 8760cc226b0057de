#include "barrier/reference.hpp"

#include <cmath>
#include <stdexcept>

namespace barrier {
namespace reference {

namespace {
const complex I(0.0, 1.0);

struct Mat2 {
  complex m11, m12, m21, m22;

  Mat2 operator*(const Mat2& o) const {
    return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22,
            m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22};
  }
};

struct Vec2 {
  complex c1, c2;
};

Vec2 mul(const Mat2& m, const Vec2& v) {
  return {m.m11 * v.c1 + m.m12 * v.c2, m.m21 * v.c1 + m.m22 * v.c2};
}

// columns are (value, derivative) of e^{+i kappa x0} and e^{-i kappa x0}
Mat2 basis(complex kappa, double x0) {
  const complex ep = std::exp(I * kappa * x0);
  const complex em = 1.0 / ep;
  return {ep, em, I * kappa * ep, -I * kappa * em};
}

Mat2 inverse(const Mat2& m) {
  const complex det = m.m11 * m.m22 - m.m12 * m.m21;
  return {m.m22 / det, -m.m12 / det, -m.m21 / det, m.m11 / det};
}

}  // namespace

ScatteringAmplitudes transfer_matrix_amplitudes(const PhysicalConfig& cfg,
                                                complex k) {
  const double s = 2.0 * cfg.m / (cfg.hbar * cfg.hbar);
  const complex q = std::sqrt(k * k - complex(s * cfg.v0, 0.0));

  const Mat2 into_mid_at_a = inverse(basis(q, cfg.a)) * basis(k, cfg.a);
  const Mat2 out_of_mid_at_b = inverse(basis(k, cfg.b)) * basis(q, cfg.b);
  const Mat2 back_into_mid_at_b = inverse(basis(q, cfg.b)) * basis(k, cfg.b);
  const Mat2 out_of_mid_at_a = inverse(basis(k, cfg.a)) * basis(q, cfg.a);

  ScatteringAmplitudes amp;

  // left incidence: exterior solution (e^{ikx} + R_l e^{-ikx} | ... | T e^{ikx});
  // seed the transmitted side with (1, 0) and normalize afterwards
  {
    const Vec2 mid = mul(back_into_mid_at_b, {1.0, 0.0});
    const Vec2 in = mul(out_of_mid_at_a, mid);
    amp.t = 1.0 / in.c1;
    amp.r_l = in.c2 / in.c1;
    amp.a_l = mid.c1 / in.c1;
    amp.b_l = mid.c2 / in.c1;
  }

  // right incidence: (T e^{-ikx} | ... | R_r e^{ikx} + e^{-ikx});
  // seed the transmitted side with (0, 1)
  {
    const Vec2 mid = mul(into_mid_at_a, {0.0, 1.0});
    const Vec2 out = mul(out_of_mid_at_b, mid);
    const complex scale = 1.0 / out.c2;
    amp.r_r = out.c1 * scale;
    amp.a_r = mid.c1 * scale;
    amp.b_r = mid.c2 * scale;
    // transmission is reciprocal; recompute anyway as a consistency point
    amp.t = scale;
  }

  return amp;
}

double transmission_probability_subbarrier(const PhysicalConfig& cfg,
                                           double e) {
  if (!(e > 0.0 && e < cfg.v0))
    throw std::invalid_argument("need 0 < E < v0");
  const double kappa = std::sqrt(2.0 * cfg.m * (cfg.v0 - e)) / cfg.hbar;
  const double sh = std::sinh(kappa * (cfg.b - cfg.a));
  return 1.0 /
         (1.0 + cfg.v0 * cfg.v0 * sh * sh / (4.0 * e * (cfg.v0 - e)));
}

}  // namespace reference
}  // namespace barrier
