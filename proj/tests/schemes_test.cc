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

#include <cmath>

#include <gtest/gtest.h>

#include "qtvr/errors.h"

namespace qtvr {
namespace {

const double kR18 = squeeze_db_to_r(-18.0);
const double kLambda = 1064e-9;

PlantParams normalized_plant(double gamma = 500.0) {
  PlantParams p;
  p.mirror_mass = 200.0;
  p.arm_length = 1.0e4;
  p.carrier_omega = 2.0 * kPi * kSpeedOfLight / kLambda;
  p.half_bandwidth = gamma;
  p.circulating_power = gamma * gamma * gamma * p.mirror_mass * kSpeedOfLight *
                        p.arm_length / (8.0 * p.carrier_omega);
  return p;
}

FrequencyGrid test_grid(const PlantParams& p, std::size_t n = 41) {
  return FrequencyGrid::log_spaced(1e-2 * p.half_bandwidth, 1e2 * p.half_bandwidth, n);
}

TEST(SchemeNameTest, RoundTrip) {
  for (Scheme s : {Scheme::kConventional, Scheme::kFds, Scheme::kEprs, Scheme::kQtvr})
    EXPECT_EQ(parse_scheme(scheme_name(s)), s);
  EXPECT_EQ(parse_scheme("QTVR"), Scheme::kQtvr);
  EXPECT_FALSE(parse_scheme("dual-recycled").has_value());
}

TEST(ConventionalTest, Points) {
  EXPECT_DOUBLE_EQ(conventional_point(1.0), 1.0);
  EXPECT_DOUBLE_EQ(conventional_point(2.0), 1.25);
  EXPECT_THROW(conventional_point(0.0), InvalidInputError);
}

TEST(ConventionalTest, CurveTouchesSqlAtKimbleOne) {
  const PlantParams p = normalized_plant();
  const FrequencyGrid g({0.5 * p.half_bandwidth, p.half_bandwidth, 2.0 * p.half_bandwidth});
  const SchemeResult res = conventional_curve(p, g);
  EXPECT_NEAR(res.curve.sh[1] / res.curve.hsql_sq[1], 1.0, 1e-12);
  EXPECT_GT(res.curve.sh[0] / res.curve.hsql_sq[0], 1.0);
  EXPECT_GT(res.curve.sh[2] / res.curve.hsql_sq[2], 1.0);
}

TEST(EprsTest, IdealMatchesConventionalOverCosh) {
  const auto ideal = ImperfectionBudget::ideal();
  for (double k : {0.01, 1.0, 30.0}) {
    EXPECT_NEAR(eprs_point(k, 0.0, ideal, kLambda), conventional_point(k),
                1e-12 * conventional_point(k));
    EXPECT_NEAR(eprs_point(k, kR18, ideal, kLambda) * 31.5558 / conventional_point(k),
                1.0, 1e-4);
  }
}

TEST(FdsTest, IdealMatchesDbArithmetic) {
  const auto ideal = ImperfectionBudget::ideal();
  for (double k : {0.01, 1.0, 30.0}) {
    EXPECT_NEAR(fds_point(k, 0.0, ideal, kLambda), conventional_point(k),
                1e-12 * conventional_point(k));
    EXPECT_NEAR(fds_point(k, kR18, ideal, kLambda) / conventional_point(k),
                std::pow(10.0, -1.8), 1e-12);
  }
}

TEST(FdsTest, FilterCavityLossRaisesEverywhere) {
  ImperfectionBudget lossy;
  lossy.fc_round_trip_loss = 45e-6;
  const PlantParams p = normalized_plant();
  const FrequencyGrid g = test_grid(p);
  const auto a = fds_baseline_curve(p, kR18, g, ImperfectionBudget::ideal());
  const auto b = fds_baseline_curve(p, kR18, g, lossy);
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_GT(b.curve.sh[i], a.curve.sh[i]);
}

TEST(QtvrTest, IdealMatchesClosedForm) {
  const PlantParams p = normalized_plant();
  const FrequencyGrid g = test_grid(p);
  for (double r : {0.0, 0.5, kR18}) {
    const auto res = qtvr_curve(p, {r, 0.0, 0.0}, g, ImperfectionBudget::ideal());
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double want = qtvr_closed_form(1.0, res.curve.kimble[i], r, res.curve.hsql_sq[i]);
      EXPECT_NEAR(res.curve.sh[i] / want, 1.0, 1e-9);
      EXPECT_NEAR((*res.curve.term_victor)[i] + (*res.curve.term_entanglement)[i],
                  res.curve.sh[i], 1e-9 * res.curve.sh[i]);
      EXPECT_NEAR((*res.curve.term_victor)[i],
                  res.curve.hsql_sq[i] / (2.0 * res.curve.kimble[i]),
                  1e-9 * res.curve.sh[i]);
    }
  }
}

TEST(QtvrTest, LargeSqueezingApproachesHalfSql) {
  const QtvrPoint pt = qtvr_point(1.0, {8.0, 0.0, 0.0}, std::atan(1.0),
                                  ImperfectionBudget::ideal(), kLambda);
  EXPECT_NEAR(pt.sh_rel, 0.5, 1e-6);
}

TEST(QtvrTest, LoJitterRaisesLowFrequencyNoise) {
  ImperfectionBudget lo;
  lo.lo_rms = 0.01;
  for (double k : {20.0, 100.0, 1000.0}) {
    const auto off = qtvr_point(k, {kR18, 0, 0}, std::atan(k), {}, kLambda);
    const auto on = qtvr_point(k, {kR18, 0, 0}, std::atan(k), lo, kLambda);
    EXPECT_GT(on.sh_rel, off.sh_rel);
  }
}

TEST(QtvrTest, EachImperfectionHurts) {
  const double k = 5.0;
  const double base = qtvr_point(k, {kR18, 0, 0}, std::atan(k), {}, kLambda).sh_rel;
  auto with = [&](auto setter) {
    ImperfectionBudget b;
    setter(b);
    return qtvr_point(k, {kR18, 0, 0}, std::atan(k), b, kLambda).sh_rel;
  };
  EXPECT_GT(with([](auto& b) { b.injection_loss = 0.03; }), base);
  EXPECT_GT(with([](auto& b) { b.arm_round_trip_loss = 80e-6; }), base);
  EXPECT_GT(with([](auto& b) { b.sec_loss = 1e-3; }), base);
  EXPECT_GT(with([](auto& b) { b.readout_loss = 0.03; }), base);
  EXPECT_GT(with([](auto& b) { b.squeezer_rms = 0.01; }), base);
  EXPECT_GT(with([](auto& b) { b.sec_length_rms = 1e-9; }), base);
}

TEST(QtvrTest, MonotoneInLoss) {
  double last = 0.0;
  for (double loss : {0.0, 0.01, 0.05, 0.1, 0.3}) {
    ImperfectionBudget b;
    b.readout_loss = loss;
    b.injection_loss = loss;
    const double v = qtvr_point(2.0, {1.0, 0, 0}, std::atan(2.0), b, kLambda).sh_rel;
    EXPECT_GT(v, last);
    last = v;
  }
}

TEST(QtvrTest, EprsBoundsQtvrUnderBudget) {
  const PlantParams p = normalized_plant();
  const FrequencyGrid g = test_grid(p);
  for (const auto& b : {ImperfectionBudget::ideal(), ImperfectionBudget::ethf_like()}) {
    const auto q = qtvr_curve(p, {kR18, 0, 0}, g, b);
    const auto e = eprs_reference_curve(p, kR18, g, b);
    for (std::size_t i = 0; i < g.size(); ++i) EXPECT_LE(e.curve.sh[i], q.curve.sh[i]);
    const ComparisonReport rep = compare({e, q});
    ASSERT_TRUE(rep.eprs_bounds_qtvr.has_value());
    EXPECT_TRUE(*rep.eprs_bounds_qtvr);
  }
}

TEST(CompareTest, IdenticalInputsGiveUnitRatio) {
  const PlantParams p = normalized_plant();
  const auto c = conventional_curve(p, test_grid(p));
  const ComparisonReport rep = compare({c, c});
  ASSERT_EQ(rep.ratios.size(), 2u);
  for (double r : rep.ratios[0].ratio) EXPECT_EQ(r, 1.0);
  EXPECT_FALSE(rep.eprs_bounds_qtvr.has_value());
}

TEST(CompareTest, ConventionalNeverBelowSql) {
  const PlantParams p = normalized_plant();
  const auto rep = compare({conventional_curve(p, test_grid(p))});
  EXPECT_TRUE(rep.summaries[0].below_sql.empty());
  EXPECT_NEAR(rep.summaries[0].omega_at_min, p.half_bandwidth, 1e-9 * p.half_bandwidth);
  EXPECT_NEAR(rep.summaries[0].min_rel_sql, 1.0, 1e-12);
}

TEST(CompareTest, QtvrSubSqlBand) {
  const PlantParams p = normalized_plant();
  const auto q = qtvr_curve(p, {kR18, 0, 0}, test_grid(p), {});
  const auto rep = compare({q});
  ASSERT_EQ(rep.summaries[0].below_sql.size(), 1u);
  EXPECT_LT(rep.summaries[0].below_sql[0].omega_lo, p.half_bandwidth);
  EXPECT_GE(rep.summaries[0].below_sql[0].omega_hi, p.half_bandwidth * (1 - 1e-12));
  EXPECT_NE(rep.verdict_table().find("qtvr"), std::string::npos);
}

TEST(CompareTest, Errors) {
  const PlantParams p = normalized_plant();
  EXPECT_THROW(compare({}), InvalidInputError);
  const auto a = conventional_curve(p, test_grid(p, 11));
  const auto b = conventional_curve(p, test_grid(p, 12));
  EXPECT_THROW(compare({a, b}), InvalidInputError);
}

}  // namespace
}  // namespace qtvr
