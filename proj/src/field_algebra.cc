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

#include "qtvr/field_algebra.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qtvr/errors.h"

namespace qtvr {

Mat2c Mat2c::adjoint() const {
  return {{std::conj(e[0]), std::conj(e[2]), std::conj(e[1]), std::conj(e[3])}};
}

Mat2c Mat2c::transpose() const { return {{e[0], e[2], e[1], e[3]}}; }

Complex Mat2c::det() const { return e[0] * e[3] - e[1] * e[2]; }

bool Mat2c::all_finite() const {
  return std::all_of(e.begin(), e.end(), [](Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

Mat2c operator*(const Mat2c& a, const Mat2c& b) {
  Mat2c r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return r;
}

Mat2c operator+(const Mat2c& a, const Mat2c& b) {
  Mat2c r;
  for (int k = 0; k < 4; ++k) r.e[k] = a.e[k] + b.e[k];
  return r;
}

Mat2c operator-(const Mat2c& a, const Mat2c& b) {
  Mat2c r;
  for (int k = 0; k < 4; ++k) r.e[k] = a.e[k] - b.e[k];
  return r;
}

Mat2c operator*(Complex k, const Mat2c& a) {
  Mat2c r;
  for (int i = 0; i < 4; ++i) r.e[i] = k * a.e[i];
  return r;
}

double max_abs_diff(const Mat2c& a, const Mat2c& b) {
  double d = 0.0;
  for (int k = 0; k < 4; ++k) d = std::max(d, std::abs(a.e[k] - b.e[k]));
  return d;
}

TransferMatrix::TransferMatrix() : m_(Mat2c::identity()), phase_(1.0) {}

TransferMatrix::TransferMatrix(const Mat2c& m, Complex scalar_phase)
    : m_(m), phase_(scalar_phase) {
  if (!m_.all_finite())
    throw InvalidInputError("transfer matrix has non-finite entries");
  if (std::abs(std::abs(phase_) - 1.0) > 1e-12)
    throw InvalidInputError("scalar phase must have unit modulus");
}

Mat2c TransferMatrix::effective() const { return phase_ * m_; }

QuadPair TransferMatrix::apply(const QuadPair& q) const {
  return {phase_ * (m_(0, 0) * q.a1 + m_(0, 1) * q.a2),
          phase_ * (m_(1, 0) * q.a1 + m_(1, 1) * q.a2)};
}

SpectralMatrix SpectralMatrix::from_matrix(const Mat2c& m) {
  // Average the off-diagonal pair to wash out rounding asymmetry.
  return {m(0, 0).real(), m(1, 1).real(), 0.5 * (m(0, 1) + std::conj(m(1, 0)))};
}

Mat2c SpectralMatrix::to_matrix() const {
  return {{s11, s12, std::conj(s12), s22}};
}

bool SpectralMatrix::is_psd(double tol) const {
  if (s11 < -tol || s22 < -tol) return false;
  return det() >= -tol * std::max(1.0, std::abs(s11 * s22));
}

void require_valid(const SpectralMatrix& s) {
  if (!std::isfinite(s.s11) || !std::isfinite(s.s22) ||
      !std::isfinite(s.s12.real()) || !std::isfinite(s.s12.imag()))
    throw InvalidInputError("spectral matrix has non-finite entries");
  if (!s.is_psd())
    throw InvalidInputError("spectral matrix is not positive semidefinite");
}

FrequencyGrid::FrequencyGrid(std::vector<double> omegas)
    : omegas_(std::move(omegas)) {
  for (std::size_t i = 0; i < omegas_.size(); ++i) {
    if (!(omegas_[i] > 0.0) || !std::isfinite(omegas_[i]))
      throw InvalidInputError("frequency grid point " + std::to_string(i) +
                              " is not a positive finite frequency");
    if (i > 0 && !(omegas_[i] > omegas_[i - 1]))
      throw InvalidInputError("frequency grid must be strictly increasing");
  }
}

FrequencyGrid FrequencyGrid::log_spaced(double omega_min, double omega_max,
                                        std::size_t count) {
  if (!(omega_min > 0.0) || !(omega_max > omega_min))
    throw InvalidInputError("log grid needs 0 < omega_min < omega_max");
  if (count < 2) throw InvalidInputError("log grid needs at least two points");
  std::vector<double> w(count);
  const double lo = std::log10(omega_min);
  const double span = std::log10(omega_max) - lo;
  for (std::size_t i = 0; i < count; ++i) {
    w[i] = std::pow(10.0, lo + span * static_cast<double>(i) /
                                   static_cast<double>(count - 1));
  }
  w.front() = omega_min;
  w.back() = omega_max;
  return FrequencyGrid(std::move(w));
}

TransferMatrix rotation(double theta) {
  if (!std::isfinite(theta)) throw InvalidInputError("rotation angle is not finite");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return TransferMatrix(Mat2c{{c, -s, s, c}});
}

TransferMatrix ponderomotive(double kimble, double beta) {
  if (!(kimble >= 0.0) || !std::isfinite(kimble))
    throw InvalidInputError("Kimble factor must be finite and >= 0");
  return TransferMatrix(Mat2c{{1.0, 0.0, -kimble, 1.0}}, std::polar(1.0, 2.0 * beta));
}

SpectralMatrix propagate(const TransferMatrix& t, const SpectralMatrix& s) {
  const Mat2c& m = t.m();
  return SpectralMatrix::from_matrix(m * s.to_matrix() * m.adjoint());
}

Mat2c propagate_cross(const TransferMatrix& tx, const Mat2c& cross,
                      const TransferMatrix& ty) {
  return tx.effective() * cross * ty.effective().adjoint();
}

TransferMatrix compose(const TransferMatrix& t1, const TransferMatrix& t2) {
  Complex phase = t1.scalar_phase() * t2.scalar_phase();
  phase /= std::abs(phase);
  return TransferMatrix(t1.m() * t2.m(), phase);
}

}  // namespace qtvr
