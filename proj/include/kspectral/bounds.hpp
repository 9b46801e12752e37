#pragma once

#include "kspectral/calculus.hpp"
#include "kspectral/classes.hpp"
#include "kspectral/functions.hpp"
#include "kspectral/kernels.hpp"

namespace kspectral {

/// Slack on every inequality check in this module.
inline constexpr double kBoundSlack = 1e-6;

/// Slack on the sup-norm of f before it counts as normalized.
inline constexpr double kNormalizationSlack = 1e-12;

/// ((R^2 - 1)/(R^2 + 1)) times the mean of f over the unit circle
/// (trapezoid with n >= 64 nodes). For a Laurent polynomial: factor * c_0.
cplx gamma(const LaurentFunction& f, const Annulus& annulus, int n = 256);

/// (1/pi) int_0^{2 pi} f(r e^{-i theta}) d theta, trapezoid with n >= 64 nodes.
cplx gamma1(const LaurentFunction& f, const Annulus& annulus, int n = 256);

/// Bound 2/(R^2 + 1) on |g - conj(gamma(f))| for normalized f.
double lemma_centered_bound(double R);

/// (1/pi)((R^2-1)/(R^2+1)) int_0^{2pi} R^2 (1 + cos t)/(R^4 - 2 R^2 cos t + 1) dt
/// by the n-point trapezoid rule; its exact value is 2/(R^2 + 1).
double lemma_weight_integral(double R, int n = 1024);

struct LemmaCheck {
  double sup_g;
  double sup_centered;
  double bound;
  bool pass;
};

/// Sup of |g| and |g - conj(gamma(f))| over n_eval points per boundary
/// circle, using the boundary extension of g. Throws NotNormalized when
/// boundary_sup(f) > 1 + 1e-12.
LemmaCheck verify_lemma(const LaurentFunction& f, const Annulus& annulus, const QuadratureGrid& grid, int n_eval,
                        double tol = kBoundSlack);

struct SQuantumCheck {
  double norm_S;
  bool pass;
};

/// ||S(f, A)|| <= 2 for quantum members and normalized f.
SQuantumCheck verify_S_quantum(const LaurentFunction& f, const ResolventTable& table);
SQuantumCheck verify_S_quantum(const LaurentFunction& f, const Matrix& A, const QuadratureGrid& grid);

struct SNumericalCheck {
  double norm_min;
  cplx c1_used;
  bool pass;
};

/// min over c in {gamma1, -gamma1, argmin_c ||S - cI||} of ||S(f, A) - c I||,
/// checked against 4 for numerical members and normalized f.
SNumericalCheck verify_S_numerical(const LaurentFunction& f, const ResolventTable& table);
SNumericalCheck verify_S_numerical(const LaurentFunction& f, const Matrix& A, const QuadratureGrid& grid);

/// Complex c minimizing ||S - c I||, by compass search from `start`.
cplx minimize_shift(const Matrix& S, cplx start);

/// max(1, a + sqrt(a^2 + b)); throws NegativeInput for negative a or b.
double k_upper_eq10(double a, double b);

/// 1 + sqrt(1 + 2/(R^2+1)) for the quantum class, 2 + sqrt(4 + 2/(R^2+1))
/// for the numerical class. Throws InvalidRadius unless R > 1.
double k_upper_closed(double R, OperatorClass cls);

struct BoundReport {
  cplx gamma;
  cplx gamma1;
  cplx c1;
  cplx c2;
  double a;
  double b;
  double k_upper_eq10;
  double k_upper_closed;
  OperatorClass class_used;
};

/// Evaluates the two-constant bound for a given f and A. The quantum class is
/// used when A belongs to it, the numerical class otherwise; c2 = conj(gamma(f))
/// and c1 is 0 (quantum) or the minimizing shift (numerical). b is the sup of
/// |g - c2| over an equispaced boundary mesh (the grid's nodes, thinned to
/// at most 1024 per circle). Throws NotMember when A is in neither class.
BoundReport bound_report(const LaurentFunction& f, const Matrix& A, double R, const QuadratureGrid& grid);
BoundReport bound_report(const LaurentFunction& f, const ResolventTable& table, const ClassReport& classes);

}  // namespace kspectral
