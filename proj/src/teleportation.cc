// Copyright 2026 The QTVR Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qtvr/teleportation.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qtvr/errors.h"

namespace qtvr {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kMaxCondition = 1e12;

// Condition number of a 2x2 Hermitian matrix [[a, b], [conj b, d]].
double hermitian_condition(double a, double d, Complex b) {
  const double mean = 0.5 * (a + d);
  const double spread = std::hypot(0.5 * (a - d), std::abs(b));
  const double lo = mean - spread;
  const double hi = mean + spread;
  if (!(lo > 0.0)) return std::numeric_limits<double>::infinity();
  return hi / lo;
}

double quad_form(const SpectralMatrix& s, Complex x1, Complex x2) {
  // <|x1 q1 + x2 q2|^2> for quadratures with spectrum s.
  return std::norm(x1) * s.s11 + std::norm(x2) * s.s22 +
         2.0 * std::real(x1 * std::conj(x2) * s.s12);
}

}  // namespace

void EntanglementParams::validate() const {
  if (!(r >= 0.0) || !std::isfinite(r))
    throw InvalidInputError("two-mode squeeze parameter r must be >= 0");
  if (!(victor_r >= 0.0) || !std::isfinite(victor_r))
    throw InvalidInputError("Victor squeeze parameter must be >= 0");
  if (!std::isfinite(victor_angle))
    throw InvalidInputError("Victor squeeze angle must be finite");
}

double squeeze_db_to_r(double db) {
  return std::abs(db) * std::log(10.0) / 20.0;
}

double r_to_squeeze_db(double r) { return -20.0 * r / std::log(10.0); }

SpectralMatrix victor_input_spectrum(const EntanglementParams& epr) {
  epr.validate();
  const SpectralMatrix diag{std::exp(2.0 * epr.victor_r),
                            std::exp(-2.0 * epr.victor_r), 0.0};
  return propagate(rotation(epr.victor_angle), diag);
}

EprPair two_mode_squeezed(double r) {
  if (!(r >= 0.0) || !std::isfinite(r))
    throw InvalidInputError("two-mode squeeze parameter r must be >= 0");
  const double ch = std::cosh(2.0 * r);
  const double sh = std::sinh(2.0 * r);
  EprPair pair;
  pair.alice = {ch, ch, 0.0};
  pair.bob = {ch, ch, 0.0};
  pair.bob_alice = {{sh, 0.0, 0.0, -sh}};
  return pair;
}

std::array<std::array<Complex, 3>, 3> SpectralCatalog::matrix() const {
  return {{{sBB, sBA1, sBA2},
           {std::conj(sBA1), sA1A1, sA1A2},
           {std::conj(sBA2), std::conj(sA1A2), sA2A2}}};
}

bool SpectralCatalog::is_psd(double tol) const {
  const auto m = matrix();
  const double scale =
      std::max({1.0, std::abs(sBB), std::abs(sA1A1), std::abs(sA2A2)});
  for (int i = 0; i < 3; ++i)
    if (m[i][i].real() < -tol * scale) return false;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const double minor = m[i][i].real() * m[j][j].real() - std::norm(m[i][j]);
      if (minor < -tol * scale * scale) return false;
    }
  }
  const Complex det =
      m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
      m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
      m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return det.real() >= -tol * scale * scale * scale;
}

SpectralCatalog bell_combine_catalog(const BellInputs& in) {
  require_valid(in.victor);
  require_valid(in.alice);
  require_valid(in.bob);
  SpectralCatalog c;
  c.sBB = in.bob.s22;
  c.sA1A1 = 0.5 * (in.victor.s11 + in.alice.s11);
  c.sA2A2 = 0.5 * (in.victor.s22 + in.alice.s22);
  c.sA1A2 = 0.5 * (in.victor.s12 - in.alice.s12);
  c.sBA1 = -kInvSqrt2 * in.bob_alice(1, 0);
  c.sBA2 = kInvSqrt2 * in.bob_alice(1, 1);
  if (!c.is_psd())
    throw InternalConsistencyError(
        "Bob/Bell catalog is not positive semidefinite; the Bob-Alice "
        "correlation is inconsistent with the reduced spectra");
  return c;
}

BellInputs ideal_bell_inputs(double kimble, const EntanglementParams& epr,
                             double theta_a, const PhaseConvention& phases) {
  epr.validate();
  const EprPair pair = two_mode_squeezed(epr.r);
  const TransferMatrix ta = alice_transfer(theta_a, phases.beta_a);
  const TransferMatrix tb = bob_transfer(phases.beta_b);
  BellInputs in;
  in.victor = victor_output(kimble, victor_input_spectrum(epr), phases.beta_b,
                            phases.beta_v)
                  .noise;
  in.alice = alice_output(theta_a, phases.beta_a, pair.alice);
  in.bob = bob_output(pair.bob);
  in.bob_alice = propagate_cross(tb, pair.bob_alice, ta);
  return in;
}

SpectralCatalog ideal_catalog(double kimble, const EntanglementParams& epr,
                              double theta_a, const PhaseConvention& phases) {
  return bell_combine_catalog(ideal_bell_inputs(kimble, epr, theta_a, phases));
}

WienerPair wiener_filters(const SpectralCatalog& c) {
  if (hermitian_condition(c.sA1A1, c.sA2A2, c.sA1A2) >= kMaxCondition)
    throw DegenerateCatalogError("Bell-readout Gram matrix is singular");
  WienerPair w;
  if (c.sBA1 == 0.0 && c.sBA2 == 0.0) {
    w.zero_correlation = true;
    return w;
  }
  // Stationarity of the filtered spectrum:
  //   [[S11, S21], [S12, S22]] (g1, g2)^T = (S_B1, S_B2)^T.
  const Complex a = c.sA1A1;
  const Complex b = std::conj(c.sA1A2);
  const Complex d = c.sA2A2;
  const Complex det = a * d - b * std::conj(b);
  w.g1 = (d * c.sBA1 - b * c.sBA2) / det;
  w.g2 = (a * c.sBA2 - std::conj(b) * c.sBA1) / det;
  return w;
}

WienerPair variational_filters(const SpectralCatalog& c, double kimble) {
  if (!(kimble >= 0.0) || !std::isfinite(kimble))
    throw InvalidInputError("Kimble factor must be finite and >= 0");
  if (!(c.sBB > 0.0))
    throw DegenerateCatalogError("Bob's spectrum vanishes");
  WienerPair w;
  const Complex s_bbeta = kimble * c.sBA1 + c.sBA2;
  if (s_bbeta == 0.0) {
    w.zero_correlation = true;
    return w;
  }
  w.g2 = c.sBB / std::conj(s_bbeta);
  w.g1 = kimble * w.g2;
  return w;
}

WienerPair joint_readout_filters(const SpectralCatalog& c) {
  // Regress alpha_2 on z = (alpha_1, B): M^T x = r with M_ji = <z_j z_i^+>
  // and r_i = <alpha_2 z_i^+>.
  if (hermitian_condition(c.sA1A1, c.sBB, std::conj(c.sBA1)) >= kMaxCondition)
    throw DegenerateCatalogError("(alpha_1, B) Gram matrix is singular");
  const Complex m00 = c.sA1A1;
  const Complex m01 = c.sBA1;              // <B alpha_1^+>
  const Complex m10 = std::conj(c.sBA1);   // <alpha_1 B^+>
  const Complex m11 = c.sBB;
  const Complex r0 = std::conj(c.sA1A2);
  const Complex r1 = std::conj(c.sBA2);
  // M^T = [[m00, m10], [m01, m11]].
  const Complex det = m00 * m11 - m10 * m01;
  const Complex x1 = (m11 * r0 - m10 * r1) / det;
  const Complex x2 = (m00 * r1 - m01 * r0) / det;
  WienerPair w;
  if (x2 == 0.0) {
    w.zero_correlation = true;
    return w;
  }
  w.g2 = 1.0 / x2;
  w.g1 = -x1 * w.g2;
  return w;
}

double filtered_spectrum(const SpectralCatalog& c, const WienerPair& w) {
  const Complex g1 = w.g1;
  const Complex g2 = w.g2;
  const Complex sA2A1 = std::conj(c.sA1A2);
  const Complex total =
      c.sBB + std::norm(g1) * c.sA1A1 + std::norm(g2) * c.sA2A2 -
      std::conj(g1) * c.sBA1 - g1 * std::conj(c.sBA1) -
      std::conj(g2) * c.sBA2 - g2 * std::conj(c.sBA2) +
      g1 * std::conj(g2) * c.sA1A2 + std::conj(g1) * g2 * sA2A1;
  const double scale = c.sBB + std::norm(g1) * c.sA1A1 + std::norm(g2) * c.sA2A2;
  if (total.real() < -1e-9 * std::max(1.0, scale))
    throw InternalConsistencyError("filtered spectrum came out negative");
  return total.real();
}

double strain_sensitivity(double residual, Complex signal_gain, double kimble,
                          double hsql_sq) {
  if (!(kimble > 0.0)) throw InvalidInputError("Kimble factor must be > 0");
  if (!(std::abs(signal_gain) > 1e-30))
    throw SignalLossError("post-filter removes the signal");
  return hsql_sq / (2.0 * kimble) * residual / std::norm(signal_gain);
}

Complex bell_signal_gain(const WienerPair& w, Complex q1, Complex q2) {
  return -(w.g1 * q1 + w.g2 * q2) * kInvSqrt2;
}

double qtvr_closed_form(double s_v2, double kimble, double r, double hsql_sq) {
  if (!(r >= 0.0)) throw InvalidInputError("r must be >= 0");
  if (!(kimble > 0.0)) throw InvalidInputError("Kimble factor must be > 0");
  return hsql_sq / (2.0 * kimble) *
         (s_v2 + (1.0 + kimble * kimble) / std::cosh(2.0 * r));
}

TeleportedReadout variational_readout(const BellInputs& in, double kimble,
                                      Complex victor_signal_q2) {
  TeleportedReadout out;
  out.catalog = bell_combine_catalog(in);
  out.filters = variational_filters(out.catalog, kimble);
  if (!out.filters.zero_correlation) {
    out.residual = filtered_spectrum(out.catalog, out.filters);
    out.signal_gain = bell_signal_gain(out.filters, 0.0, victor_signal_q2);
    if (!(std::abs(out.signal_gain) > 1e-30))
      throw SignalLossError("post-filter removes the signal");
    const double gain_sq = std::norm(out.signal_gain);
    out.referred_noise = out.residual / gain_sq;
    out.victor_part =
        0.5 * quad_form(in.victor, out.filters.g1, out.filters.g2) / gain_sq;
  } else {
    // B^g / g2 -> -(K alpha_1 + alpha_2): Bob drops out.
    const double beta_gain_sq = 0.5 * std::norm(victor_signal_q2);
    if (!(beta_gain_sq > 1e-60))
      throw SignalLossError("no signal reaches the Bell readout");
    const auto& c = out.catalog;
    const double s_beta = kimble * kimble * c.sA1A1 +
                          2.0 * kimble * std::real(c.sA1A2) + c.sA2A2;
    out.referred_noise = s_beta / beta_gain_sq;
    out.victor_part = 0.5 * quad_form(in.victor, kimble, 1.0) / beta_gain_sq;
  }
  out.entanglement_part = out.referred_noise - out.victor_part;
  return out;
}

}  // namespace qtvr
