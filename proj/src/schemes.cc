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

#include "qtvr/schemes.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

#include "qtvr/errors.h"

namespace qtvr {

namespace {

void add_budget_metadata(std::map<std::string, double>& md,
                         const ImperfectionBudget& b) {
  md["budget.injection_loss"] = b.injection_loss;
  md["budget.arm_round_trip_loss"] = b.arm_round_trip_loss;
  md["budget.sec_loss"] = b.sec_loss;
  md["budget.readout_loss"] = b.readout_loss;
  md["budget.fc_round_trip_loss"] = b.fc_round_trip_loss;
  md["budget.squeezer_rms"] = b.squeezer_rms;
  md["budget.lo_rms"] = b.lo_rms;
  md["budget.sec_length_rms"] = b.sec_length_rms;
  md["budget.fc_length_rms"] = b.fc_length_rms;
  md["budget.detuning"] = b.detuning;
}

// Evaluates `point(K)` (which returns S_h / h_SQL^2) over the grid.
NoiseCurve tabulate(const PlantParams& p, const FrequencyGrid& grid,
                    const std::function<double(double, double)>& point) {
  p.validate();
  NoiseCurve curve;
  curve.grid = grid;
  curve.sh.reserve(grid.size());
  for (double omega : grid.omegas()) {
    const double k = kimble_factor(p, omega);
    const double hsq = h_sql_sq(p, omega);
    curve.kimble.push_back(k);
    curve.hsql_sq.push_back(hsq);
    curve.sh.push_back(point(omega, k) * hsq);
  }
  return curve;
}

void require_positive_kimble(double kimble) {
  if (!(kimble > 0.0) || !std::isfinite(kimble))
    throw InvalidInputError("Kimble factor must be finite and > 0");
}

// Squeezed vacuum whose squeezed quadrature is the one that ends up in the
// phase quadrature after the ponderomotive map: direction (-K, 1).
SpectralMatrix ideally_rotated_squeezing(double kimble, double r) {
  const double n = std::sqrt(1.0 + kimble * kimble);
  const double u1 = -kimble / n, u2 = 1.0 / n;  // squeezed
  const double w1 = 1.0 / n, w2 = kimble / n;   // anti-squeezed
  const double sq = std::exp(-2.0 * r);
  const double asq = std::exp(2.0 * r);
  return {sq * u1 * u1 + asq * w1 * w1, sq * u2 * u2 + asq * w2 * w2,
          sq * u1 * u2 + asq * w1 * w2};
}

}  // namespace

std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::kConventional: return "conventional";
    case Scheme::kFds: return "fds";
    case Scheme::kEprs: return "eprs";
    case Scheme::kQtvr: return "qtvr";
  }
  return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  for (Scheme s : {Scheme::kConventional, Scheme::kFds, Scheme::kEprs,
                   Scheme::kQtvr}) {
    if (lower == scheme_name(s)) return s;
  }
  return std::nullopt;
}

double conventional_point(double kimble) {
  require_positive_kimble(kimble);
  return 0.5 * (1.0 / kimble + kimble);
}

double fds_point(double kimble, double r, const ImperfectionBudget& budget,
                 double wavelength) {
  require_positive_kimble(kimble);
  if (!(r >= 0.0)) throw InvalidInputError("r must be >= 0");
  budget.validate();

  SpectralMatrix in = ideally_rotated_squeezing(kimble, r);
  in = apply_dephasing(in, budget.squeezer_rms);
  in = apply_dephasing(in, length_rms_to_phase(budget.fc_length_rms, wavelength));
  in = apply_loss(in, budget.fc_efficiency());
  in = apply_loss(in, budget.injection_efficiency());

  SpectralMatrix out = propagate(ponderomotive(kimble, 0.0), in);
  out = apply_loss(out, budget.arm_efficiency());
  out = apply_loss(out, budget.sec_efficiency());
  out = apply_dephasing(out, length_rms_to_phase(budget.sec_length_rms, wavelength));
  out = apply_loss(out, budget.readout_efficiency());
  out = apply_dephasing(out, budget.lo_rms);

  const double gain_sq = budget.arm_efficiency() * budget.sec_efficiency() *
                         budget.readout_efficiency();
  return out.s22 / (2.0 * kimble * gain_sq);
}

double eprs_point(double kimble, double r, const ImperfectionBudget& budget,
                  double wavelength) {
  require_positive_kimble(kimble);
  budget.validate();
  const double sec_jitter = length_rms_to_phase(budget.sec_length_rms, wavelength);

  const EprPair pair = two_mode_squeezed(r);
  SpectralMatrix sig = pair.alice;
  SpectralMatrix idler = pair.bob;
  Mat2c cross = pair.bob_alice.adjoint();
  // cross = <signal idler^+>; pump-phase jitter rotates one beam.
  cross = apply_dephasing_cross(cross, budget.squeezer_rms, 0.0);

  const double eta_in = budget.injection_efficiency();
  sig = apply_loss(sig, eta_in);
  idler = apply_loss(idler, eta_in);
  cross = apply_loss_cross(cross, eta_in, eta_in);

  const TransferMatrix plant = ponderomotive(kimble, 0.0);
  sig = propagate(plant, sig);
  cross = propagate_cross(plant, cross, TransferMatrix());

  const double eta_ifo = budget.arm_efficiency() * budget.sec_efficiency();
  sig = apply_loss(sig, eta_ifo);
  cross = apply_loss_cross(cross, eta_ifo, 1.0);
  sig = apply_dephasing(sig, sec_jitter);
  cross = apply_dephasing_cross(cross, sec_jitter, 0.0);

  const double eta_ro = budget.readout_efficiency();
  sig = apply_loss(sig, eta_ro);
  idler = apply_loss(idler, eta_ro);
  cross = apply_loss_cross(cross, eta_ro, eta_ro);
  sig = apply_dephasing(sig, budget.lo_rms);
  idler = apply_dephasing(idler, budget.lo_rms);
  cross = apply_dephasing_cross(cross, budget.lo_rms, budget.lo_rms);

  // Best single idler quadrature u: max |w.u|^2 / (u^T S_i u) = w S_i^-1 w^T
  // for the real correlation row w = <V2 idler^T>.
  const double w1 = cross(1, 0).real();
  const double w2 = cross(1, 1).real();
  const double a = idler.s11, b = idler.s12.real(), d = idler.s22;
  const double det = a * d - b * b;
  const double explained = (d * w1 * w1 - 2.0 * b * w1 * w2 + a * w2 * w2) / det;
  const double residual = sig.s22 - explained;
  if (residual < -1e-9 * std::max(1.0, sig.s22))
    throw InternalConsistencyError("EPR conditional residual is negative");
  return residual / (2.0 * kimble * eta_ifo * eta_ro);
}

QtvrPoint qtvr_point(double kimble, const EntanglementParams& epr,
                     double theta_a, const ImperfectionBudget& budget,
                     double wavelength, const PhaseConvention& phases) {
  require_positive_kimble(kimble);
  epr.validate();
  budget.validate();
  const double sec_jitter = length_rms_to_phase(budget.sec_length_rms, wavelength);

  const EprPair pair = two_mode_squeezed(epr.r);
  SpectralMatrix victor = victor_input_spectrum(epr);
  SpectralMatrix alice = pair.alice;
  SpectralMatrix bob = pair.bob;
  Mat2c cross = pair.bob_alice;  // <B A^+>

  victor = apply_dephasing(victor, budget.squeezer_rms);
  cross = apply_dephasing_cross(cross, budget.squeezer_rms, 0.0);

  const double eta_in = budget.injection_efficiency();
  victor = apply_loss(victor, eta_in);
  alice = apply_loss(alice, eta_in);
  bob = apply_loss(bob, eta_in);
  cross = apply_loss_cross(cross, eta_in, eta_in);

  const TransferMatrix ta = alice_transfer(theta_a, phases.beta_a);
  victor = propagate(victor_transfer(kimble, phases.beta_b), victor);
  alice = propagate(ta, alice);
  cross = propagate_cross(bob_transfer(phases.beta_b), cross, ta);

  const double eta_ifo = budget.arm_efficiency() * budget.sec_efficiency();
  victor = apply_loss(victor, eta_ifo);
  alice = apply_loss(alice, eta_ifo);
  cross = apply_loss_cross(cross, 1.0, eta_ifo);
  victor = apply_dephasing(victor, sec_jitter);
  alice = apply_dephasing(alice, sec_jitter);
  cross = apply_dephasing_cross(cross, 0.0, sec_jitter);

  const double eta_ro = budget.readout_efficiency();
  victor = apply_loss(victor, eta_ro);
  alice = apply_loss(alice, eta_ro);
  bob = apply_loss(bob, eta_ro);
  cross = apply_loss_cross(cross, eta_ro, eta_ro);
  // Bell LO shared by Victor and Alice; Bob has his own LO.
  victor = apply_dephasing(victor, budget.lo_rms);
  alice = apply_dephasing(alice, budget.lo_rms);
  bob = apply_dephasing(bob, budget.lo_rms);
  cross = apply_dephasing_cross(cross, budget.lo_rms, budget.lo_rms);

  const BellInputs in{victor, alice, bob, cross};
  const TeleportedReadout readout =
      variational_readout(in, kimble, std::sqrt(eta_ifo * eta_ro));
  const double scale = 1.0 / (2.0 * kimble);
  return {readout.referred_noise * scale, readout.victor_part * scale,
          readout.entanglement_part * scale};
}

SchemeResult conventional_curve(const PlantParams& p, const FrequencyGrid& grid) {
  SchemeResult res;
  res.scheme = Scheme::kConventional;
  res.curve = tabulate(p, grid, [](double, double k) { return conventional_point(k); });
  return res;
}

SchemeResult eprs_reference_curve(const PlantParams& p, double r,
                                  const FrequencyGrid& grid,
                                  const ImperfectionBudget& budget) {
  budget.validate();
  const double lambda = p.carrier_wavelength();
  SchemeResult res;
  res.scheme = Scheme::kEprs;
  res.curve = tabulate(p, grid, [&](double, double k) {
    return eprs_point(k, r, budget, lambda);
  });
  res.metadata["r"] = r;
  add_budget_metadata(res.metadata, budget);
  return res;
}

SchemeResult fds_baseline_curve(const PlantParams& p, double r,
                                const FrequencyGrid& grid,
                                const ImperfectionBudget& budget) {
  budget.validate();
  const double lambda = p.carrier_wavelength();
  SchemeResult res;
  res.scheme = Scheme::kFds;
  res.curve = tabulate(p, grid, [&](double, double k) {
    return fds_point(k, r, budget, lambda);
  });
  res.metadata["r"] = r;
  add_budget_metadata(res.metadata, budget);
  return res;
}

SchemeResult qtvr_curve(const PlantParams& p, const EntanglementParams& epr,
                        const FrequencyGrid& grid,
                        const ImperfectionBudget& budget,
                        const QtvrOptions& options) {
  budget.validate();
  epr.validate();
  const double lambda = p.carrier_wavelength();
  std::vector<double> victor, ent;
  SchemeResult res;
  res.scheme = Scheme::kQtvr;
  res.curve = tabulate(p, grid, [&](double omega, double k) {
    const double theta_a = options.alice_rotation(omega, k);
    const QtvrPoint pt = qtvr_point(k, epr, theta_a, budget, lambda, options.phases);
    victor.push_back(pt.victor_rel);
    ent.push_back(pt.entanglement_rel);
    return pt.sh_rel;
  });
  for (std::size_t i = 0; i < victor.size(); ++i) {
    victor[i] *= res.curve.hsql_sq[i];
    ent[i] *= res.curve.hsql_sq[i];
  }
  res.curve.term_victor = std::move(victor);
  res.curve.term_entanglement = std::move(ent);
  res.metadata["r"] = epr.r;
  res.metadata["victor_r"] = epr.victor_r;
  res.metadata["victor_angle"] = epr.victor_angle;
  res.metadata["beta_a"] = options.phases.beta_a;
  res.metadata["beta_b"] = options.phases.beta_b;
  res.metadata["beta_v"] = options.phases.beta_v;
  add_budget_metadata(res.metadata, budget);
  return res;
}

namespace {

bool same_entanglement_and_budget(const SchemeResult& a, const SchemeResult& b) {
  for (const auto& [key, value] : a.metadata) {
    if (key != "r" && key.rfind("budget.", 0) != 0) continue;
    auto it = b.metadata.find(key);
    if (it == b.metadata.end() || it->second != value) return false;
  }
  return a.metadata.count("r") == 1;
}

}  // namespace

ComparisonReport compare(const std::vector<SchemeResult>& results) {
  if (results.empty()) throw InvalidInputError("nothing to compare");
  ComparisonReport report;
  report.grid = results.front().curve.grid;
  for (const auto& r : results) {
    if (!(r.curve.grid == report.grid))
      throw InvalidInputError("scheme results live on different grids");
    if (r.curve.sh.size() != report.grid.size() ||
        r.curve.hsql_sq.size() != report.grid.size())
      throw InvalidInputError("curve length does not match its grid");
  }

  const std::size_t n = report.grid.size();
  for (const auto& res : results) {
    SchemeSummary s;
    s.scheme = res.scheme;
    s.min_rel_sql = std::numeric_limits<double>::infinity();
    std::optional<SqlBand> open;
    for (std::size_t i = 0; i < n; ++i) {
      const double rel = res.curve.sh[i] / res.curve.hsql_sq[i];
      if (rel < s.min_rel_sql) {
        s.min_rel_sql = rel;
        s.omega_at_min = report.grid[i];
      }
      if (rel < 1.0) {
        if (!open) open = SqlBand{report.grid[i], report.grid[i]};
        open->omega_hi = report.grid[i];
      } else if (open) {
        s.below_sql.push_back(*open);
        open.reset();
      }
    }
    if (open) s.below_sql.push_back(*open);
    report.summaries.push_back(std::move(s));
  }

  for (std::size_t a = 0; a < results.size(); ++a) {
    for (std::size_t b = 0; b < results.size(); ++b) {
      if (a == b) continue;
      PairRatio pr;
      pr.numerator = results[a].scheme;
      pr.denominator = results[b].scheme;
      pr.ratio.resize(n);
      for (std::size_t i = 0; i < n; ++i)
        pr.ratio[i] = results[a].curve.sh[i] / results[b].curve.sh[i];
      const auto [lo, hi] = std::minmax_element(pr.ratio.begin(), pr.ratio.end());
      pr.min_ratio = *lo;
      pr.max_ratio = *hi;
      report.ratios.push_back(std::move(pr));
    }
  }

  const SchemeResult* eprs = nullptr;
  const SchemeResult* qtvr = nullptr;
  for (const auto& r : results) {
    if (r.scheme == Scheme::kEprs) eprs = &r;
    if (r.scheme == Scheme::kQtvr) qtvr = &r;
  }
  if (eprs && qtvr && same_entanglement_and_budget(*eprs, *qtvr)) {
    bool bound = true;
    for (std::size_t i = 0; i < n; ++i)
      bound = bound && eprs->curve.sh[i] <= qtvr->curve.sh[i];
    report.eprs_bounds_qtvr = bound;
  }
  return report;
}

std::string ComparisonReport::verdict_table() const {
  std::string out = "scheme        min S_h/SQL^2   at omega [rad/s]   sub-SQL bands\n";
  char line[160];
  for (const auto& s : summaries) {
    std::snprintf(line, sizeof line, "%-13s %-15.6g %-18.6g %zu\n",
                  std::string(scheme_name(s.scheme)).c_str(), s.min_rel_sql,
                  s.omega_at_min, s.below_sql.size());
    out += line;
  }
  if (eprs_bounds_qtvr) {
    out += *eprs_bounds_qtvr ? "EPRS <= QTVR at every point: yes\n"
                             : "EPRS <= QTVR at every point: NO\n";
  }
  return out;
}

}  // namespace qtvr
