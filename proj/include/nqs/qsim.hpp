#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "nqs/bits.hpp"
#include "nqs/errors.hpp"
#include "nqs/rng.hpp"

namespace nqs {

/// Single-qubit state.
using DensityMatrix = Eigen::Matrix2cd;
using Ket = Eigen::Vector2cd;

inline Ket bb84_ket(std::uint8_t bit, Basis basis) {
  if (basis == Basis::kRectilinear) return bit ? Ket(0.0, 1.0) : Ket(1.0, 0.0);
  const double h = std::sqrt(0.5);
  return bit ? Ket(h, -h) : Ket(h, h);
}

inline DensityMatrix bb84_prepare(std::uint8_t bit, Basis basis) {
  require(bit <= 1, "bit must be 0 or 1");
  const Ket k = bb84_ket(bit, basis);
  return k * k.adjoint();
}

inline DensityMatrix hermitize(const DensityMatrix& rho) { return 0.5 * (rho + rho.adjoint()); }

inline bool is_density_matrix(const DensityMatrix& rho, double tol = 1e-12) {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(rho.trace() - 1.0) > tol) return false;
  Eigen::SelfAdjointEigenSolver<DensityMatrix> es(hermitize(rho), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol;
}

/// Born probability of reading `bit` when measuring in `basis`.
inline double outcome_probability(const DensityMatrix& rho, Basis basis, std::uint8_t bit) {
  const Ket k = bb84_ket(bit, basis);
  return std::clamp((k.adjoint() * rho * k)(0, 0).real(), 0.0, 1.0);
}

inline std::uint8_t measure(const DensityMatrix& rho, Basis basis, Rng& rng) {
  return rng.bernoulli(outcome_probability(rho, basis, 1)) ? 1 : 0;
}

/// N_r(rho) = r rho + (1 - r) I / 2.
inline DensityMatrix depolarize(const DensityMatrix& rho, double r) {
  require(r >= 0.0 && r <= 1.0, "depolarizing parameter r must lie in [0, 1]");
  return hermitize(r * rho + (1.0 - r) * 0.5 * DensityMatrix::Identity());
}

/// Projector onto the positive part of p0 rho0 - (1 - p0) rho1; the optimal
/// measurement reads 0 on it.
inline DensityMatrix helstrom_projector(const DensityMatrix& rho0, const DensityMatrix& rho1, double p0) {
  require(p0 >= 0.0 && p0 <= 1.0, "prior p0 must lie in [0, 1]");
  Eigen::SelfAdjointEigenSolver<DensityMatrix> es(hermitize(p0 * rho0 - (1.0 - p0) * rho1));
  DensityMatrix proj = DensityMatrix::Zero();
  for (int i = 0; i < 2; ++i) {
    if (es.eigenvalues()(i) > 0.0) proj += es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
  }
  return proj;
}

/// Optimal probability of telling rho0 (prior p0) from rho1.
inline double helstrom(const DensityMatrix& rho0, const DensityMatrix& rho1, double p0) {
  require(p0 >= 0.0 && p0 <= 1.0, "prior p0 must lie in [0, 1]");
  Eigen::SelfAdjointEigenSolver<DensityMatrix> es(hermitize(p0 * rho0 - (1.0 - p0) * rho1), Eigen::EigenvaluesOnly);
  return 0.5 * (1.0 + es.eigenvalues().cwiseAbs().sum());
}

/// Two-outcome measurement {P, I - P}; returns 0 on P.
inline std::uint8_t measure_projector(const DensityMatrix& rho, const DensityMatrix& proj, Rng& rng) {
  const double p0 = std::clamp((proj * rho).trace().real(), 0.0, 1.0);
  return rng.bernoulli(p0) ? 0 : 1;
}

}  // namespace nqs
