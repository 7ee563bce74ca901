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

// Two-photon formalism primitives. Sideband fields are described by their
// amplitude (1) and phase (2) quadratures; linear optics acts on them through
// 2x2 complex transfer matrices and noise is carried as 2x2 Hermitian
// spectral matrices normalized so that vacuum has unit PSD per quadrature.
//
// Cross-spectra follow S_xy = <x y^dagger>, so S_yx = conj(S_xy).

#ifndef QTVR_FIELD_ALGEBRA_H_
#define QTVR_FIELD_ALGEBRA_H_

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qtvr {

using Complex = std::complex<double>;

/// Dense 2x2 complex matrix, row-major.
struct Mat2c {
  std::array<Complex, 4> e{};

  static Mat2c identity() { return {{1.0, 0.0, 0.0, 1.0}}; }
  static Mat2c zero() { return {}; }

  Complex& operator()(int row, int col) { return e[2 * row + col]; }
  const Complex& operator()(int row, int col) const { return e[2 * row + col]; }

  Mat2c adjoint() const;
  Mat2c transpose() const;
  Complex det() const;
  bool all_finite() const;
};

Mat2c operator*(const Mat2c& a, const Mat2c& b);
Mat2c operator+(const Mat2c& a, const Mat2c& b);
Mat2c operator-(const Mat2c& a, const Mat2c& b);
Mat2c operator*(Complex k, const Mat2c& a);

/// Max-abs entrywise distance; handy in tests.
double max_abs_diff(const Mat2c& a, const Mat2c& b);

/// Quadrature coefficients of one field (vacuum-normalized).
struct QuadPair {
  Complex a1;
  Complex a2;
};

/// Frequency-dependent linear map on a quadrature pair: scalar_phase * m.
///
/// The scalar phase (e^{2i beta} style factors) cancels in auto-spectra but
/// survives in cross-spectra between different fields, so it is kept apart
/// from the matrix instead of being folded in.
class TransferMatrix {
 public:
  TransferMatrix();
  /// Throws InvalidInputError if |scalar_phase| differs from 1 by more than
  /// 1e-12 or an entry is not finite.
  TransferMatrix(const Mat2c& m, Complex scalar_phase = 1.0);

  const Mat2c& m() const { return m_; }
  Complex scalar_phase() const { return phase_; }
  /// scalar_phase * m.
  Mat2c effective() const;

  QuadPair apply(const QuadPair& q) const;

 private:
  Mat2c m_;
  Complex phase_;
};

/// Hermitian PSD spectral matrix of one field: [[s11, s12], [conj(s12), s22]].
struct SpectralMatrix {
  double s11 = 1.0;
  double s22 = 1.0;
  Complex s12 = 0.0;

  static SpectralMatrix vacuum() { return {}; }
  static SpectralMatrix from_matrix(const Mat2c& m);
  Mat2c to_matrix() const;

  double det() const { return s11 * s22 - std::norm(s12); }
  /// Diagonals >= 0 and s11*s22 - |s12|^2 >= -tol * max(1, s11*s22).
  bool is_psd(double tol = 1e-9) const;
};

/// Throws InvalidInputError unless `s` is finite Hermitian PSD.
void require_valid(const SpectralMatrix& s);

/// Strictly increasing list of positive angular frequencies (rad/s).
class FrequencyGrid {
 public:
  FrequencyGrid() = default;
  explicit FrequencyGrid(std::vector<double> omegas);

  /// `count` points log-spaced between the two endpoints, both included.
  static FrequencyGrid log_spaced(double omega_min, double omega_max,
                                  std::size_t count);

  std::span<const double> omegas() const { return omegas_; }
  std::size_t size() const { return omegas_.size(); }
  double operator[](std::size_t i) const { return omegas_[i]; }
  bool operator==(const FrequencyGrid&) const = default;

 private:
  std::vector<double> omegas_;
};

/// [[cos, -sin], [sin, cos]] with unit scalar phase.
TransferMatrix rotation(double theta);

/// Radiation-pressure coupling [[1, 0], [-kimble, 1]] with phase e^{2i beta}.
TransferMatrix ponderomotive(double kimble, double beta);

/// T S T^dagger; the scalar phase cancels.
SpectralMatrix propagate(const TransferMatrix& t, const SpectralMatrix& s);

/// Cross-spectrum <(Tx x)(Ty y)^dagger> = Tx C Ty^dagger for C = <x y^dagger>.
Mat2c propagate_cross(const TransferMatrix& tx, const Mat2c& cross,
                      const TransferMatrix& ty);

/// t1 * t2 (t2 acts first).
TransferMatrix compose(const TransferMatrix& t1, const TransferMatrix& t2);

}  // namespace qtvr

#endif  // QTVR_FIELD_ALGEBRA_H_
