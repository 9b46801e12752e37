#pragma once

#include <cstdint>
#include <random>

#include "kspectral/geometry.hpp"
#include "kspectral/kernels.hpp"
#include "kspectral/linalg.hpp"

namespace kspectral {

/// Norm and numerical-radius data of A relative to an annulus of outer radius R.
/// Membership uses strict inequalities on the computed values; margins are
/// R minus the relevant maximum (negative for non-members). A singular A has
/// infinite inverse norms and is a member of neither class.
struct ClassReport {
  double op_norm;
  double inv_op_norm;
  double num_radius;
  double inv_num_radius;
  bool quantum_member;
  bool numerical_member;
  double quantum_margin;
  double numerical_margin;
};

/// w(A) = max over phi of the top eigenvalue of (e^{i phi} A + e^{-i phi} A^*)/2,
/// from a 720-point phi grid refined by golden-section search to `tol` in phi.
double numerical_radius(const Matrix& A, double tol = 1e-12);

ClassReport classify(const Matrix& A, double R);

bool is_member(const ClassReport& report, OperatorClass cls);

/// True iff r + margin < |lambda| < R - margin for every eigenvalue.
bool spectrum_check(const Matrix& A, const Annulus& annulus, double margin);

/// Haar-distributed unitary from the QR factorization of a complex Gaussian.
Matrix random_unitary(int d, std::mt19937_64& rng);

/// U diag(s) V^* with s uniform in (1/(R - margin), R - margin).
/// Throws SamplerExhausted after 100 rejected draws.
Matrix sample_quantum(int d, double R, double margin, std::uint64_t seed);

/// Numerical-annulus member with w(A) = R - margin and w(A^{-1}) < R - margin.
///
/// Candidates are unitary matrices perturbed by a Gaussian of random size,
/// or, with probability 1/4, a unitary conjugate of the non-normal block
/// [[0, a], [1/a, 0]] padded with a diagonal. Each candidate is rescaled to
/// balance w(A) against w(A^{-1}) and accepted when the balanced value is below
/// R - margin. Throws SamplerExhausted after 1000 rejections.
Matrix sample_numerical(int d, double R, double margin, std::uint64_t seed);

/// U diag(lambda) U^* with R^{-1} + margin < |lambda| < R - margin.
Matrix sample_normal(int d, double R, double margin, std::uint64_t seed);

Matrix sample_member(OperatorClass cls, int d, double R, double margin, std::uint64_t seed);

}  // namespace kspectral
