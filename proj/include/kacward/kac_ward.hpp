// Copyright 2026 The kacward Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include <Eigen/Dense>

#include "kacward/embedded_graph.hpp"
#include "kacward/errors.hpp"

namespace kacward {

template <typename Scalar>
using ComplexMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

/// Dense transition matrix on the 2|E| directed edges.
using TransitionMatrix = ComplexMatrix<double>;

/// det(Id - Lambda) together with its log-magnitude and phase, so that
/// callers can stay in log space when the determinant itself overflows.
template <typename Scalar>
struct DetResult {
  std::complex<Scalar> det;
  Scalar log_abs_det = 0;
  Scalar phase = 0;  // in (-pi, pi]
};

/// Lambda[e][f] = x_e * exp(i * angle(e, f) / 2) when head(e) = tail(f) and
/// f != -e, zero otherwise. Throws InvalidGraph unless g is a valid embedding.
template <typename Scalar = double>
ComplexMatrix<Scalar> build_transition_matrix(const EmbeddedGraph& g) {
  require_valid_embedding(g);
  const int n = g.num_directed_edges();
  ComplexMatrix<Scalar> lambda = ComplexMatrix<Scalar>::Zero(n, n);
  for (int a = 0; a < n; ++a) {
    const DirectedEdgeId e(a);
    const Scalar x = static_cast<Scalar>(g.weight(e));
    for (DirectedEdgeId f : g.out_edges(g.head(e))) {
      if (f == -e) continue;
      const Scalar half = static_cast<Scalar>(turning_angle(g, e, f)) / 2;
      lambda(a, f.id()) = std::polar(x, half);
    }
  }
  return lambda;
}

/// det(Id - m) by partial-pivot LU. The log-magnitude is summed over pivots
/// so it stays finite when det itself would overflow.
template <typename Derived>
auto determinant_of_identity_minus(const Eigen::MatrixBase<Derived>& m)
    -> DetResult<typename Eigen::NumTraits<typename Derived::Scalar>::Real> {
  using Complex = typename Derived::Scalar;
  using Real = typename Eigen::NumTraits<Complex>::Real;
  using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

  DetResult<Real> result{Complex(1), Real(0), Real(0)};
  const Eigen::Index n = m.rows();
  if (n == 0) return result;

  const Matrix a = Matrix::Identity(n, n) - m;
  const Eigen::PartialPivLU<Matrix> lu(a);
  const auto& factors = lu.matrixLU();

  const Real pi = std::numbers::pi_v<Real>;
  Real log_abs = 0;
  Real phase = lu.permutationP().determinant() < 0 ? pi : Real(0);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex pivot = factors(i, i);
    if (pivot == Complex(0)) throw NumericalError("determinant is zero");
    if (!std::isfinite(std::abs(pivot))) throw NumericalError("non-finite pivot in factorization");
    log_abs += std::log(std::abs(pivot));
    phase = std::remainder(phase + std::arg(pivot), 2 * pi);
  }
  if (phase <= -pi) phase += 2 * pi;
  result.log_abs_det = log_abs;
  result.phase = phase;
  // Spelled out so an overflowed magnitude keeps a zero imaginary part at phase 0.
  const Real r = std::exp(log_abs);
  const Real s = std::sin(phase);
  result.det = Complex(r * std::cos(phase), s == 0 ? Real(0) : r * s);
  return result;
}

/// det(Id - Lambda) for the Kac-Ward transition matrix of g.
template <typename Scalar = double>
DetResult<Scalar> kac_ward_determinant(const EmbeddedGraph& g) {
  return determinant_of_identity_minus(build_transition_matrix<Scalar>(g));
}

/// sqrt(Re det), after checking that det is real and nonnegative to
/// 1e-9 * max(1, |det|). This is |Z|, and equals Z whenever every weight is
/// nonnegative.
template <typename Scalar>
Scalar partition_function_from_det(const DetResult<Scalar>& d) {
  const Scalar magnitude = std::abs(d.det);
  if (!std::isfinite(d.log_abs_det) || !std::isfinite(d.phase)) {
    throw NumericalError("non-finite determinant");
  }
  if (!std::isfinite(magnitude)) {
    // Overflowed: judge reality from the phase alone.
    if (std::abs(std::sin(d.phase)) > Scalar(1e-9) || std::cos(d.phase) < 0) {
      throw NumericalError("determinant not real-nonnegative");
    }
    return std::numeric_limits<Scalar>::infinity();
  }
  const Scalar tol = Scalar(1e-9) * std::max(Scalar(1), magnitude);
  if (std::abs(d.det.imag()) > tol || d.det.real() < -tol) {
    throw NumericalError("determinant not real-nonnegative");
  }
  return std::sqrt(std::max(d.det.real(), Scalar(0)));
}

template <typename Scalar = double>
Scalar partition_function_kw(const EmbeddedGraph& g) {
  return partition_function_from_det(kac_ward_determinant<Scalar>(g));
}

/// max |x_e| < 1 / (max_degree - 1); always true when max_degree <= 1.
bool check_convergence_radius(const EmbeddedGraph& g);

/// (max_degree - 1) * max |x_e|, the growth rate bounding the loop series.
double loop_series_ratio(const EmbeddedGraph& g);

double max_abs_weight(const EmbeddedGraph& g);

}  // namespace kacward
